"""
Acceptance suite: one printed PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python tests/test_acceptance.py``.
"""
import math
import sys

import pytest

from cycsoergel.bimodule import (
    decomposition_rank,
    default_degree_bound,
    enumerate_indecomposables,
    hom_describe,
    hom_oracle,
    tensor_decompose,
    tensor_rank_oracle,
    verify_ses,
    verify_soergel_splitting,
)
from cycsoergel.cyclotomic import context
from cycsoergel.errors import VerificationFailure
from cycsoergel.grothendieck import (
    categorification_check,
    hecke_annihilation_check,
    hecke_quotient_full,
    hecke_quotient_poly,
    verify_binomial_claims,
    verify_u_module,
)
from cycsoergel.laurent import V, V_INV
from cycsoergel.polyring import (
    cyc_var,
    p_poly,
    split_coeffs,
    split_coeffs_closed,
    split_identity_residual,
)
from cycsoergel.semisimple import (
    boundary_v,
    char_poly_block,
    charpoly_expand,
    chebyshev_roots,
    eigen_block,
    eta_value,
    min_gap,
    q_value,
    semisimple_check,
)

D4_LIST = [
    {0}, {1}, {2}, {3},
    {0, 1}, {1, 2}, {2, 3}, {3, 0},
    {0, 1, 2}, {1, 2, 3}, {2, 3, 0}, {3, 0, 1},
    {0, 1, 2, 3},
]


def census():
    counts = all(len(enumerate_indecomposables(d)) == d * (d - 1) + 1 for d in range(2, 13))
    listed = [set(a.elements) for a in enumerate_indecomposables(4)] == D4_LIST
    return counts and listed, "d = 2..12 counts, d = 4 list"


def generator_identity():
    for d in range(2, 13):
        ctx = context(d)
        X, Y = cyc_var(ctx, 0, 2), cyc_var(ctx, 1, 2)
        if p_poly(d, d - 1) != X ** d - Y ** d:
            return False, f"d={d}"
    return True, "d = 2..12"


def splitting_identities():
    n = 0
    for d in range(2, 13):
        for k in range(d):
            for i in range(k + 1):
                if split_identity_residual(d, k, i):
                    return False, f"d={d} k={k} i={i}"
                n += 1
        for i in range(d - 1):
            c, dd = split_coeffs_closed(d, i)
            if c != split_coeffs(d, i + 1, i)[0] or dd != split_coeffs(d, i + 1, 1)[1]:
                return False, f"closed form d={d} i={i}"
    return True, f"{n} identities, d = 2..12"


def _reports(fn):
    try:
        total = sum(len(fn(*args).checks) for args in fn.cases)
    except VerificationFailure as exc:
        return False, f"{exc} witness={exc.witness}"
    return True, f"{total} checks"


def soergel():
    def run(d, i):
        return verify_soergel_splitting(d, i, default_degree_bound(d))
    run.cases = [(d, i) for d in range(3, 9) for i in range(1, d - 1)]
    return _reports(run)


def ses():
    def run(d, i):
        return verify_ses(d, i, default_degree_bound(d))
    run.cases = [(d, i) for d in range(3, 9) for i in range(1, d)]
    return _reports(run)


def tensor_oracle():
    n = 0
    for d in range(3, 9):
        objs = enumerate_indecomposables(d)
        for a in objs:
            for b in objs:
                if decomposition_rank(tensor_decompose(a, b)) != tensor_rank_oracle(a, b):
                    return False, f"d={d} {a} x {b}"
                n += 1
    return True, f"{n} pairs, d = 3..8"


def hom_spaces():
    n = 0
    for d in range(3, 7):
        objs = enumerate_indecomposables(d)
        for a in objs:
            for b in objs:
                desc = hom_describe(a, b)
                if desc.rank != len(a.elements & b.elements) or desc.dims(4 * d) != hom_oracle(a, b, 4 * d):
                    return False, f"d={d} Hom({a}, {b})"
                n += 1
    return True, f"{n} pairs, d = 3..6, bound 4d"


def categorification():
    def run(d):
        return categorification_check(d)
    run.cases = [(d,) for d in range(3, 9)]
    return _reports(run)


def presentations():
    def run(kind, d):
        return verify_binomial_claims(d) if kind == "binomial" else verify_u_module(d)
    run.cases = [("binomial", d) for d in range(2, 13)] + [("umodule", d) for d in range(2, 11)]
    return _reports(run)


def hecke():
    for d in range(2, 13):
        full = hecke_quotient_full(d)
        if len(full) != d + 1 or full[-1] != 1:
            return False, f"d={d} not monic of degree d"
        hecke_annihilation_check(d)
    d3 = hecke_quotient_poly(3) == [V_INV - V, V ** 2 - 3, V * 2 - V_INV]
    return d3, "d = 2..12; d = 3 coefficients"


def spectra():
    for d in range(2, 9):
        for m in range(d):
            if charpoly_expand(eigen_block(d, m)) != char_poly_block(d, m):
                return False, f"charpoly d={d} m={m}"
    for d in range(2, 13):
        for m in range(d):
            eta = eta_value(d, m)
            if any(abs(q_value(d - 1, r, eta)) >= 1e-9 for r in chebyshev_roots(d - 1, eta)):
                return False, f"roots d={d} m={m}"
        rep = semisimple_check(d, 2.0)
        if not all(b.distinct for b in rep.blocks) or rep.total_dim != d * (d - 1) + 1:
            return False, f"distinctness d={d}"
    return True, "charpoly d = 2..8, roots/distinctness d = 2..12"


def boundary():
    for d in range(3, 9):
        for k in range(1, d):
            v = boundary_v(d, k)
            assert abs(v + 1 / v - 2 * math.cos(k * math.pi / d)) < 1e-12
            rep = semisimple_check(d, v)
            if rep.verdict != "criterion violated" or min_gap(rep.blocks[0].eigenvalues) >= 1e-6:
                return False, f"d={d} k={k}"
    return True, "d = 3..8, all k"


CRITERIA = [
    (1, "census", census),
    (2, "generator identity", generator_identity),
    (3, "splitting identities", splitting_identities),
    (4, "two-step splitting of tensor products", soergel),
    (5, "short exact sequence", ses),
    (6, "tensor rank oracle", tensor_oracle),
    (7, "Hom oracle", hom_spaces),
    (8, "categorification", categorification),
    (9, "presentations and module U", presentations),
    (10, "Hecke quotient", hecke),
    (11, "spectra", spectra),
    (12, "criterion boundary", boundary),
]


def _line(num, name, ok, detail):
    return f"ACCEPTANCE {num:2d} {'PASS' if ok else 'FAIL'} {name}: {detail}"


@pytest.mark.parametrize("num,name,fn", CRITERIA, ids=[f"criterion_{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(num, name, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + _line(num, name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for num, name, fn in CRITERIA:
        ok, detail = fn()
        failed += not ok
        print(_line(num, name, ok, detail))
    sys.exit(1 if failed else 0)
