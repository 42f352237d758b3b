"""
Spectral analysis of C_1 acting on A_W (complexified).

A_W splits along the eigenvalues eta = zeta^m of s; on each piece C_1 acts by
a tridiagonal matrix in the basis D_i = S(eta) C_i (i <= d-2) with
S(eta) = 1 + eta^-1 s + ... + eta^-(d-1) s^(d-1), plus D_(d-1) = C_(d-1)
when eta = 1. The m = 0 block has size d, the others size d - 1.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import asdict, dataclass, field
from functools import lru_cache

import numpy as np

from .cyclotomic import context, embed_complex
from .errors import InvalidParameter, Report, VerificationFailure
from .grothendieck import AWElement, aw_multiply, q_poly
from .polyring import Poly

CRITERION_TOL = 1e-6
DISTINCT_TOL = 1e-9


@dataclass(frozen=True)
class EigenBlock:
    """
    Matrix of C_1 on the eta = zeta^m piece, column convention:
    C_1 D_i = sum_k M[k][i] D_k. Each entry is a pair (a, b) meaning
    a + b (v + v^-1) with a in Q(zeta_d).
    """

    d: int
    m: int
    entries: tuple

    @property
    def dim(self) -> int:
        return len(self.entries)

    def symbolic(self) -> list[list[Poly]]:
        """Entries as polynomials in (lambda, t) with t = v + v^-1."""
        ctx = context(self.d)
        t = Poly.var(1, 2, ctx.one)
        return [[Poly.const(a, 2) + t * b for a, b in row] for row in self.entries]

    def numeric(self, v: complex) -> np.ndarray:
        t = v + 1 / v
        return np.array([[a.embed_complex() + b * t for a, b in row] for row in self.entries], dtype=complex)


def eigen_block(d: int, m: int) -> EigenBlock:
    if d < 2:
        raise InvalidParameter(f"d must be >= 2, got {d}")
    if not 0 <= m <= d - 1:
        raise InvalidParameter(f"need 0 <= m <= {d - 1}, got {m}")
    ctx = context(d)
    eta = ctx.zeta_pow(m)
    n = d if m == 0 else d - 1
    mat = [[(ctx.zero, 0) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        if m == 0 and i == d - 1:
            mat[i][i] = (ctx.zero, 1)
            continue
        if i + 1 < n:
            mat[i + 1][i] = (ctx(d) if m == 0 and i + 1 == d - 1 else ctx.one, 0)
        if i >= 1:
            mat[i - 1][i] = (eta, 0)
    return EigenBlock(d, m, tuple(tuple(r) for r in mat))


def charpoly_expand(block: EigenBlock) -> Poly:
    """det(lambda I - M) by memoized Laplace expansion along rows, in (lambda, t)."""
    ctx = context(block.d)
    n = block.dim
    lam = Poly.var(0, 2, ctx.one)
    sym = block.symbolic()
    a = [[(lam if r == c else Poly.const(ctx.zero, 2)) - sym[r][c] for c in range(n)] for r in range(n)]

    @lru_cache(maxsize=None)
    def minor(r: int, cols: frozenset) -> Poly:
        if r == n:
            return Poly.const(ctx.one, 2)
        total = Poly.const(ctx.zero, 2)
        for pos, c in enumerate(sorted(cols)):
            if a[r][c]:
                term = a[r][c] * minor(r + 1, cols - {c})
                total = total - term if pos % 2 else total + term
        return total

    return minor(0, frozenset(range(n)))


def char_poly_block(d: int, m: int) -> Poly:
    """Closed form: (lambda - t) Q_{d-1}(lambda, 1) for m = 0, else Q_{d-1}(lambda, eta)."""
    ctx = context(d)
    lam = Poly.var(0, 2, ctx.one)
    eta = ctx.zeta_pow(m)
    q = q_poly(d - 1).map_coeffs(ctx).compose([lam, Poly.const(eta, 2)])
    if m == 0:
        return (lam - Poly.var(1, 2, ctx.one)) * q
    return q


def eta_value(d: int, m: int) -> complex:
    return cmath.exp(2j * math.pi * m / d)


def chebyshev_roots(i: int, eta: complex = 1) -> list[complex]:
    """2 sqrt(eta) cos(k pi / (i + 1)) for k = 1..i, principal square root."""
    if i < 1:
        raise InvalidParameter(f"need i >= 1, got {i}")
    r = cmath.sqrt(eta)
    return [2 * r * math.cos(k * math.pi / (i + 1)) for k in range(1, i + 1)]


def q_value(i: int, x: complex, y: complex) -> complex:
    return sum(c * x ** a * y ** b for (a, b), c in q_poly(i).terms.items())


def _uni_trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _uni_rem(a: list, b: list) -> list:
    a = list(a)
    lead_inv = 1 / b[-1]
    while len(_uni_trim(a)) >= len(b):
        k = a[-1] * lead_inv
        off = len(a) - len(b)
        for t, c in enumerate(b):
            a[off + t] = a[off + t] - k * c
        a.pop()
    return a


def uni_gcd_degree(a: list, b: list) -> int:
    """Degree of gcd of univariate polynomials (coefficient lists, low to high)."""
    a, b = _uni_trim(list(a)), _uni_trim(list(b))
    while b:
        a, b = b, _uni_trim(_uni_rem(a, b))
    return len(a) - 1


def distinct_roots_check(i: int, d: int, m: int = 0) -> bool:
    """Q_i(lambda, zeta^m) has no repeated root: analytically and by exact gcd with its derivative."""
    roots = chebyshev_roots(i, eta_value(d, m))
    analytic = all(abs(x - y) > DISTINCT_TOL for k, x in enumerate(roots) for y in roots[k + 1:])
    ctx = context(d)
    eta = ctx.zeta_pow(m)
    coeffs = [ctx.zero] * (i + 1)
    for (a, b), c in q_poly(i).terms.items():
        coeffs[a] = coeffs[a] + eta ** b * c
    deriv = [coeffs[k] * k for k in range(1, i + 1)]
    return analytic and uni_gcd_degree(coeffs, deriv) == 0


def verify_block_against_ring(d: int, m: int) -> Report:
    """Recompute C_1 D_i in A_W and read it off in the D-basis."""
    block = eigen_block(d, m)
    ctx = context(d)
    eta_inv = ctx.zeta_pow(-m)
    rep = Report(f"block d={d} m={m}")
    c1 = AWElement.c(d, 1)
    for i in range(block.dim):
        # coefficient of each basis element as {v-exponent: CycNumber}
        acc: dict = {}
        for k in range(d if i < d - 1 else 1):
            prod = aw_multiply(c1, AWElement.basis(d, k, i))
            w = eta_inv ** k
            for b, lc in prod.coeffs.items():
                slot = acc.setdefault(b, {})
                for e, n in lc.items():
                    slot[e] = slot.get(e, ctx.zero) + w * n
        for j in range(d):
            if j < d - 1:
                base = acc.get((0, j), {})
                for a in range(d):
                    got = acc.get((a, j), {})
                    want = {e: c * eta_inv ** a for e, c in base.items()}
                    ok = {e: c for e, c in got.items() if c} == {e: c for e, c in want.items() if c}
                    rep.record(f"column {i}: s^{a} C_{j} matches D_{j}", ok, (i, a, j))
                coef = base
            else:
                top = acc.get((0, d - 1), {})
                if m:
                    rep.record(f"column {i}: no C_(d-1) part", not any(top.values()), i)
                    continue
                coef = top  # D_(d-1) is C_(d-1) itself
            if j >= block.dim:
                continue
            a0, tb = block.entries[j][i]
            want = {0: a0, 1: ctx(tb), -1: ctx(tb)}
            ok = all(coef.get(e, ctx.zero) == want.get(e, ctx.zero) for e in set(coef) | set(want))
            rep.record(f"entry ({j}, {i})", ok, (j, i))
    return rep


# numerics -------------------------------------------------------------------

def criterion_margin(d: int, v: complex) -> float:
    t = v + 1 / v
    return min(abs(t - 2 * math.cos(k * math.pi / d)) for k in range(1, d))


def eigenvalues(block: EigenBlock, v: complex, precision: int | None = None) -> list[complex]:
    if precision is None or precision <= 15:
        vals = np.linalg.eigvals(block.numeric(v))
        return sorted((complex(x) for x in vals), key=lambda z: (round(z.real, 12), round(z.imag, 12)))
    import mpmath

    with mpmath.workdps(precision):
        vm = mpmath.mpc(v.real, v.imag)
        t = vm + 1 / vm
        mat = mpmath.matrix(block.dim, block.dim)
        for r, row in enumerate(block.entries):
            for c, (a, b) in enumerate(row):
                mat[r, c] = embed_complex(a, precision) + b * t
        vals = mpmath.eig(mat, left=False, right=False)
        out = [complex(x) for x in vals]
    return sorted(out, key=lambda z: (round(z.real, 12), round(z.imag, 12)))


def min_gap(vals: list[complex]) -> float:
    return min((abs(x - y) for k, x in enumerate(vals) for y in vals[k + 1:]), default=math.inf)


@dataclass
class BlockSpectrum:
    eta_exp: int
    dim: int
    eigenvalues: list[complex]
    distinct: bool

    def to_json(self) -> dict:
        return {
            "eta_exp": self.eta_exp,
            "dim": self.dim,
            "eigenvalues": [[z.real, z.imag] for z in self.eigenvalues],
            "distinct": self.distinct,
        }


@dataclass
class SpectralReport:
    d: int
    v: complex
    criterion: bool
    margin: float
    blocks: list[BlockSpectrum] = field(default_factory=list)
    verdict: str = ""

    @property
    def total_dim(self) -> int:
        return sum(b.dim for b in self.blocks)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "v": [self.v.real, self.v.imag],
            "criterion": self.criterion,
            "margin": self.margin,
            "blocks": [b.to_json() for b in self.blocks],
            "verdict": self.verdict,
        }


def semisimple_check(d: int, v: complex, tol: float = CRITERION_TOL, precision: int | None = None) -> SpectralReport:
    """
    Evaluate the sufficient criterion for semisimplicity at v and, when it
    holds, confirm it constructively: every block must have pairwise
    distinct eigenvalues. A violated criterion gets no verdict either way.
    """
    v = complex(v)
    if v == 0:
        raise InvalidParameter("v must be nonzero")
    margin = criterion_margin(d, v)
    rep = SpectralReport(d, v, margin > tol, margin)
    for m in range(d):
        vals = eigenvalues(eigen_block(d, m), v, precision)
        rep.blocks.append(BlockSpectrum(m, len(vals), vals, min_gap(vals) > DISTINCT_TOL))
    if rep.criterion:
        if not all(b.distinct for b in rep.blocks) or rep.total_dim != d * (d - 1) + 1:
            raise VerificationFailure(f"criterion holds at v={v} but a block has a repeated eigenvalue", rep.to_json())
        rep.verdict = "semisimple"
    else:
        rep.verdict = "criterion violated"
    return rep


@dataclass
class GridPoint:
    param: float
    v: complex
    margin: float
    flagged: bool


def grid_values(start: float, stop: float, step: float) -> list[float]:
    if step <= 0 or stop < start:
        raise InvalidParameter(f"bad grid {start}:{stop}:{step}")
    n = int(math.floor((stop - start) / step + 1e-9))
    return [round(start + k * step, 12) for k in range(n + 1)]


def sweep(d: int, start: float, stop: float, step: float, mode: str = "angle") -> list[GridPoint]:
    """
    Sweep v along the unit circle (v = exp(i theta), mode "angle") or the
    positive reals (mode "real"). A point is flagged when the criterion
    margin drops below the grid step, i.e. an excluded value lies nearby.
    """
    out = []
    for x in grid_values(start, stop, step):
        v = cmath.exp(1j * x) if mode == "angle" else complex(x)
        if v == 0:
            raise InvalidParameter("v must be nonzero")
        margin = criterion_margin(d, v)
        out.append(GridPoint(x, v, margin, margin < step))
    return out


def flagged_bands(points: list[GridPoint]) -> list[tuple[float, float]]:
    bands, cur = [], None
    for p in points:
        if p.flagged:
            cur = (cur[0], p.param) if cur else (p.param, p.param)
        elif cur:
            bands.append(cur)
            cur = None
    if cur:
        bands.append(cur)
    return bands


def grid_point_json(p: GridPoint) -> dict:
    out = asdict(p)
    out["v"] = [p.v.real, p.v.imag]
    return out


def boundary_v(d: int, k: int) -> complex:
    """A v with v + v^-1 = 2 cos(k pi / d), namely exp(i k pi / d)."""
    return cmath.exp(1j * k * math.pi / d)

