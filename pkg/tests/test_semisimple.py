import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cycsoergel.cyclotomic import context
from cycsoergel.errors import InvalidParameter
from cycsoergel.polyring import Poly
from cycsoergel.semisimple import (
    boundary_v,
    char_poly_block,
    charpoly_expand,
    chebyshev_roots,
    criterion_margin,
    distinct_roots_check,
    eigen_block,
    eigenvalues,
    eta_value,
    flagged_bands,
    min_gap,
    q_value,
    semisimple_check,
    sweep,
    uni_gcd_degree,
    verify_block_against_ring,
)


def numeric_block(d, m, v):
    return eigen_block(d, m).numeric(v)


def test_block_d3():
    t = 2.5
    got = numeric_block(3, 0, 2.0)
    assert np.allclose(got, [[0, 1, 0], [1, 0, 0], [0, 3, t]])
    zeta = cmath.exp(2j * math.pi / 3)
    assert np.allclose(numeric_block(3, 1, 2.0), [[0, zeta], [1, 0]])


def test_block_d2():
    assert np.allclose(numeric_block(2, 0, 1.0), [[0, 0], [2, 2]])
    assert np.allclose(numeric_block(2, 1, 1.0), [[0]])


@pytest.mark.parametrize("d", range(2, 13))
def test_block_dimensions(d):
    assert sum(eigen_block(d, m).dim for m in range(d)) == d * (d - 1) + 1


def test_closed_charpolys_small():
    ctx = context(3)
    lam, t = Poly.var(0, 2, ctx.one), Poly.var(1, 2, ctx.one)
    assert char_poly_block(3, 1) == lam * lam - Poly.const(ctx.zeta, 2)
    assert char_poly_block(3, 0) == (lam - t) * (lam * lam - 1)
    # sympy: det(lam I - M) for d = 4, m = 0 is lam (lam - t)(lam^2 - 2)
    ctx4 = context(4)
    lam4, t4 = Poly.var(0, 2, ctx4.one), Poly.var(1, 2, ctx4.one)
    assert charpoly_expand(eigen_block(4, 0)) == lam4 * (lam4 - t4) * (lam4 * lam4 - 2)


@pytest.mark.parametrize("d", range(2, 7))
def test_charpoly_expansion_matches_closed_form(d):
    for m in range(d):
        assert charpoly_expand(eigen_block(d, m)) == char_poly_block(d, m)


@pytest.mark.parametrize("d", [2, 3, 4, 6])
def test_blocks_match_ring(d):
    for m in range(d):
        assert verify_block_against_ring(d, m).passed


def test_chebyshev_examples():
    assert np.allclose(sorted(r.real for r in chebyshev_roots(2)), [-1, 1])
    assert np.allclose(chebyshev_roots(1), [0])
    assert np.allclose(chebyshev_roots(3), [math.sqrt(2), 0, -math.sqrt(2)])
    with pytest.raises(InvalidParameter):
        chebyshev_roots(0)


@given(st.integers(1, 11), st.integers(1, 12), st.integers(0, 11))
def test_chebyshev_roots_are_roots(i, d, m):
    eta = eta_value(d, m % d)
    for r in chebyshev_roots(i, eta):
        assert abs(q_value(i, r, eta)) < 1e-9


@given(st.integers(1, 8), st.complex_numbers(min_magnitude=0.5, max_magnitude=2.0))
def test_root_multiset_is_branch_invariant(i, eta):
    roots = chebyshev_roots(i, eta)
    other = [-r for r in roots]
    for r in roots:
        assert min(abs(r - x) for x in other) < 1e-9


def test_distinct_roots():
    assert distinct_roots_check(2, 3, 0)
    assert distinct_roots_check(1, 5, 2)
    for d in range(2, 13):
        for m in range(d):
            assert distinct_roots_check(d - 1, d, m)


def test_gcd_detects_repeated_roots():
    # (x - 1)^2 (x + 2) and its derivative share x - 1
    p = [2, -3, 0, 1]
    assert uni_gcd_degree(p, [-3, 0, 3]) == 1
    assert uni_gcd_degree([1, 1], [1]) == 0


def test_semisimple_examples():
    assert semisimple_check(3, 1.0).verdict == "semisimple"
    assert semisimple_check(3, cmath.exp(1j * math.pi / 3)).verdict == "criterion violated"
    assert semisimple_check(4, 2.0).verdict == "semisimple"
    # 0.5 + 0.8660254i is within 1e-8 of the excluded point
    rep = semisimple_check(3, complex(0.5, 0.8660254))
    assert not rep.criterion and rep.verdict == "criterion violated"
    with pytest.raises(InvalidParameter):
        semisimple_check(3, 0)


def test_report_json_shape():
    data = semisimple_check(3, 2.0).to_json()
    assert set(data) == {"d", "v", "criterion", "margin", "blocks", "verdict"}
    assert [b["dim"] for b in data["blocks"]] == [3, 2, 2]
    assert all(len(z) == 2 for b in data["blocks"] for z in b["eigenvalues"])


@pytest.mark.parametrize("d", range(2, 13))
def test_m0_spectrum(d):
    v = 2.0
    vals = eigenvalues(eigen_block(d, 0), v)
    want = sorted([v + 1 / v] + [2 * math.cos(k * math.pi / d) for k in range(1, d)])
    assert np.allclose(sorted(z.real for z in vals), want, atol=1e-9)
    assert max(abs(z.imag) for z in vals) < 1e-9


@given(st.floats(0.05, 3.1), st.integers(3, 8))
def test_criterion_holds_off_the_excluded_angles(theta, d):
    v = cmath.exp(1j * theta)
    rep = semisimple_check(d, v)
    assert rep.criterion == (criterion_margin(d, v) > 1e-6)
    if rep.criterion and rep.margin > 1e-3:
        assert all(b.distinct for b in rep.blocks)


@pytest.mark.parametrize("d", [3, 5, 8])
def test_boundary_coincidence(d):
    for k in range(1, d):
        rep = semisimple_check(d, boundary_v(d, k))
        assert rep.verdict == "criterion violated"
        assert min_gap(rep.blocks[0].eigenvalues) < 1e-6


def test_high_precision_eigenvalues():
    lo = eigenvalues(eigen_block(5, 2), 1.7)
    hi = eigenvalues(eigen_block(5, 2), 1.7, precision=40)
    assert np.allclose(lo, hi, atol=1e-12)


def test_grid_sweep_d5():
    points = sweep(5, 0.1, 3.0, 0.1)
    assert len(points) == 30
    assert flagged_bands(points) == [(0.6, 0.7), (1.3, 1.3), (1.9, 1.9), (2.5, 2.6)]
    assert not any(p.flagged for p in sweep(5, 0.5, 3.0, 0.1, mode="real"))
