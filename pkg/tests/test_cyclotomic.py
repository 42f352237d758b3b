from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cycsoergel.cyclotomic import (
    CycNumber,
    context,
    cyclotomic_poly,
    embed_complex,
    field_arith,
    parse_cyc,
    sigma,
    totient,
    zeta_pow,
)
from cycsoergel.errors import ContextMismatch, DivisionByZero

from conftest import cyc_numbers, small_d

# integer coefficients, low degree first; reference values from sympy.cyclotomic_poly
PHI = {
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    5: (1, 1, 1, 1, 1),
    6: (1, -1, 1),
    8: (1, 0, 0, 0, 1),
    9: (1, 0, 0, 1, 0, 0, 1),
    10: (1, -1, 1, -1, 1),
    12: (1, 0, -1, 0, 1),
}


@pytest.mark.parametrize("d,coeffs", sorted(PHI.items()))
def test_cyclotomic_polynomials(d, coeffs):
    assert cyclotomic_poly(d) == coeffs
    assert len(coeffs) - 1 == totient(d)


def test_zeta_squared_is_minus_one_for_d4():
    ctx = context(4)
    assert ctx.zeta * ctx.zeta == ctx(-1)


@pytest.mark.parametrize("d", range(2, 13))
def test_zeta_has_order_d(d):
    ctx = context(d)
    assert zeta_pow(d, d - 1) * ctx.zeta == ctx.one
    assert zeta_pow(d, d) == ctx.one == zeta_pow(d, 0)
    assert all(zeta_pow(d, m) != ctx.one for m in range(1, d))


def test_d3_examples():
    ctx = context(3)
    assert (ctx.one + ctx.zeta) * (ctx.one + zeta_pow(3, 2)) == ctx.one
    assert zeta_pow(3, 2).coeffs == (Fraction(-1), Fraction(-1))


@pytest.mark.parametrize("d", range(2, 13))
def test_sigma(d):
    ctx = context(d)
    assert sigma(d, 0) == ctx.one
    assert sigma(d, d - 1) == ctx.zero
    for i in range(d - 1):
        assert sigma(d, i)


def test_embedding_values():
    assert abs(embed_complex(context(7).one) - 1) < 1e-15
    assert abs(embed_complex(context(4).zeta) - 1j) < 1e-12
    assert abs(embed_complex(sigma(3, 1)) - complex(0.5, 0.8660254037844386)) < 1e-9


def test_high_precision_embedding():
    import mpmath

    val = embed_complex(sigma(5, 2), precision=40)
    with mpmath.workdps(40):
        ref = 1 + mpmath.expjpi(mpmath.mpf(2) / 5) + mpmath.expjpi(mpmath.mpf(4) / 5)
        assert abs(val - ref) < mpmath.mpf(10) ** -35


def test_errors():
    a, b = context(3).one, context(4).one
    with pytest.raises(ContextMismatch):
        a + b
    with pytest.raises(DivisionByZero):
        a / context(3).zero
    with pytest.raises(DivisionByZero):
        field_arith(a, context(3).zero, "div")


def test_field_arith_ops():
    ctx = context(5)
    a, b = ctx.zeta + 2, ctx.zeta_pow(3) - ctx.one
    assert field_arith(a, b, "add") == a + b
    assert field_arith(a, b, "sub") == a - b
    assert field_arith(a, b, "mul") == a * b
    assert field_arith(a, b, "div") * b == a


def test_json_and_text_round_trip():
    ctx = context(6)
    a = (ctx.zeta * 3 - Fraction(1, 2)) / 7
    assert CycNumber.from_json(ctx, a.to_json()) == a
    assert parse_cyc(ctx, str(a)) == a
    assert all("/" in x for x in a.to_json())


@given(small_d.flatmap(lambda d: st.tuples(cyc_numbers(d), cyc_numbers(d), cyc_numbers(d))))
def test_field_axioms(abc):
    a, b, c = abc
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == a.ctx.one


@given(small_d.flatmap(lambda d: st.tuples(st.just(d), st.integers(0, 2 * d), st.integers(0, 2 * d))))
def test_zeta_powers_add(dmn):
    d, m, n = dmn
    assert zeta_pow(d, m) * zeta_pow(d, n) == zeta_pow(d, m + n)


@given(small_d.flatmap(lambda d: st.tuples(cyc_numbers(d, -3, 3), cyc_numbers(d, -3, 3))))
def test_embedding_is_multiplicative(ab):
    a, b = ab
    assert abs(embed_complex(a * b) - embed_complex(a) * embed_complex(b)) < 1e-9


@given(small_d.flatmap(lambda d: st.tuples(cyc_numbers(d), st.integers(1, 40))))
def test_galois_action_is_a_ring_map(ak):
    a, k = ak
    d = a.ctx.d
    from math import gcd

    if gcd(k, d) != 1:
        return
    assert (a * a).galois(k) == a.galois(k) * a.galois(k)
    assert a.ctx.zeta.galois(k) == zeta_pow(d, k)
