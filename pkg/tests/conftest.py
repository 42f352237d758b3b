import pytest
from hypothesis import settings, strategies as st

from cycsoergel.cyclotomic import context, totient

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_d = st.integers(min_value=2, max_value=12)


@st.composite
def cyc_numbers(draw, d, lo=-5, hi=5, den=st.integers(min_value=1, max_value=4)):
    ctx = context(d)
    coeffs = draw(st.lists(st.integers(lo, hi), min_size=totient(d), max_size=totient(d)))
    return ctx.from_coeffs(coeffs) / draw(den)


@pytest.fixture(params=[3, 4, 5])
def d(request):
    return request.param
