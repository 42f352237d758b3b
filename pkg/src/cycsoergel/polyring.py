"""
Sparse multivariate polynomials over Q(zeta_d), the generators P_i and P_A,
normal forms modulo I_A, and the splitting coefficients c_k^i, d_k^j.

Bivariate polynomials use variables (X, Y) and trivariate ones (X, Y, Z).
X and Y both have degree 2 in the bimodule grading.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import CycContext, CycNumber, context, parse_cyc
from .errors import InvalidSplit

VARS = ("X", "Y", "Z")


class Poly:
    """
    Sparse polynomial: a map from exponent tuples to coefficients.

    The coefficient ring is whatever the values are (CycNumber, int,
    LaurentInt, ...); zero coefficients are never stored. Exponents may be
    negative, which is how Laurent variables are handled.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, terms=None, nvars: int = 2):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def _wrap(cls, terms: dict, nvars: int) -> Poly:
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def const(cls, c, nvars: int = 2) -> Poly:
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def var(cls, k: int, nvars: int = 2, coeff=1) -> Poly:
        e = [0] * nvars
        e[k] = 1
        return cls({tuple(e): coeff}, nvars)

    @classmethod
    def monomial(cls, exps, coeff=1) -> Poly:
        return cls({tuple(exps): coeff}, len(exps))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            if not other:
                return not self.terms
            return self == Poly.const(other, self.nvars)
        return self.terms == other.terms

    def __hash__(self):
        raise TypeError("Poly is unhashable")

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            assert other.nvars == self.nvars, "variable count mismatch"
            return other
        return Poly.const(other, self.nvars)

    def __add__(self, other) -> Poly:
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._wrap(out, self.nvars)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._wrap({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other) -> Poly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> Poly:
        return self._lift(other) - self

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            if not other:
                return Poly._wrap({}, self.nvars)
            return Poly({e: c * other for e, c in self.terms.items()}, self.nvars)
        assert other.nvars == self.nvars, "variable count mismatch"
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                s = out.get(e)
                out[e] = prod if s is None else s + prod
        return Poly(out, self.nvars)

    def __rmul__(self, other) -> Poly:
        return self * other

    def __pow__(self, k: int) -> Poly:
        assert k >= 0
        sample = next(iter(self.terms.values()), 1)
        out = Poly.const(sample * 0 + 1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def coeff(self, exps, default=0):
        return self.terms.get(tuple(exps), default)

    def degree_in(self, k: int) -> int:
        return max((e[k] for e in self.terms), default=-1)

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.total_degrees()) <= 1

    def map_coeffs(self, fn) -> Poly:
        return Poly({e: fn(c) for e, c in self.terms.items()}, self.nvars)

    def compose(self, images: list[Poly]) -> Poly:
        """Substitute variable k by ``images[k]`` (all images share one ring)."""
        target = images[0].nvars
        powers: list[dict[int, Poly]] = [{} for _ in images]

        def power(k: int, a: int) -> Poly:
            if a not in powers[k]:
                powers[k][a] = images[k] ** a
            return powers[k][a]

        out = Poly._wrap({}, target)
        for e, c in self.terms.items():
            term = Poly.const(c, target)
            for k, a in enumerate(e):
                if a:
                    term = term * power(k, a)
            out = out + term
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"


# textual form ------------------------------------------------------------

def format_poly(p: Poly, names=VARS) -> str:
    """Render as ``c * X^a Y^b + ...`` with bracketed cyclotomic coefficients."""
    if not p.terms:
        return "0"
    parts = []
    for e, c in p.sorted_terms():
        mono = " ".join(f"{names[k]}^{a}" for k, a in enumerate(e) if a)
        parts.append(f"{c} * {mono}" if mono else f"{c}")
    return " + ".join(parts)


_MONO = re.compile(r"([A-Z])\^(-?\d+)")


def parse_poly(ctx: CycContext, text: str, nvars: int = 2, names=VARS) -> Poly:
    text = text.strip()
    if text == "0":
        return Poly({}, nvars)
    out = Poly({}, nvars)
    # terms are "[...]" optionally followed by " * monomial", joined by " + "
    pos = 0
    term_re = re.compile(r"\s*(\[[^\]]*\])(?:\s*\*\s*((?:[A-Z]\^-?\d+\s*)+))?\s*(\+|$)")
    while pos < len(text):
        m = term_re.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        coeff = parse_cyc(ctx, m.group(1))
        exps = [0] * nvars
        for name, a in _MONO.findall(m.group(2) or ""):
            exps[names.index(name)] += int(a)
        out = out + Poly({tuple(exps): coeff}, nvars)
        pos = m.end()
    return out


# the generators ---------------------------------------------------------

def cyc_var(ctx: CycContext, k: int, nvars: int) -> Poly:
    return Poly.var(k, nvars, ctx.one)


def cyc_const(ctx: CycContext, c, nvars: int) -> Poly:
    return Poly.const(ctx(c), nvars)


def p_eval(ctx: CycContext, i: int, u: Poly, w: Poly, twist: int = 0) -> Poly:
    """P_i(u, zeta^twist * w) = prod_{r=0..i} (u - zeta^(r + twist) w)."""
    out = Poly.const(ctx.one, u.nvars)
    for r in range(i + 1):
        out = out * (u - w * ctx.zeta_pow(r + twist))
    return out


@lru_cache(maxsize=None)
def _p_poly(d: int, i: int) -> Poly:
    ctx = context(d)
    return p_eval(ctx, i, cyc_var(ctx, 0, 2), cyc_var(ctx, 1, 2))


def p_poly(d: int, i: int) -> Poly:
    """P_i(X, Y) = (X - Y)(X - zeta Y)...(X - zeta^i Y)."""
    if not 0 <= i <= d - 1:
        raise ValueError(f"P_i needs 0 <= i <= {d - 1}, got {i}")
    return _p_poly(d, i)


def p_for_set(A) -> Poly:
    """
    Monic-in-X generator of I_A: prod over s^a in A of (X - zeta^a Y).

    This is P_j(zeta^-i X, Y) rescaled by zeta^(i(j+1)) for A = s^[i, i+j].
    """
    return _p_set(A.d, A.start, A.length)


@lru_cache(maxsize=None)
def _p_set(d: int, start: int, length: int) -> Poly:
    ctx = context(d)
    return p_eval(ctx, length - 1, cyc_var(ctx, 0, 2), cyc_var(ctx, 1, 2), twist=start)


# normal forms -----------------------------------------------------------

def reduce_by(f: Poly, g: Poly, k: int) -> Poly:
    """
    Remainder of f on division by g with respect to variable k.

    g must contain a pure power var_k^n (no other variables) and no larger
    power of var_k; the result has degree < n in var_k.
    """
    n = g.degree_in(k)
    lead_exp = tuple(n if t == k else 0 for t in range(g.nvars))
    lc = g.terms.get(lead_exp)
    if lc is None or sum(1 for e in g.terms if e[k] == n) != 1:
        raise ValueError("generator has no pure leading power in the chosen variable")
    inv = 1 / lc
    rest = [(e, c) for e, c in g.terms.items() if e != lead_exp]
    out = dict(f.terms)
    while True:
        top = [e for e in out if e[k] >= n]
        if not top:
            break
        e = max(top, key=lambda x: x[k])
        c = out.pop(e) * inv
        shift = tuple(a - (n if t == k else 0) for t, a in enumerate(e))
        for eg, cg in rest:
            ee = tuple(a + b for a, b in zip(shift, eg))
            s = out.get(ee)
            val = -(c * cg) if s is None else s - c * cg
            if val:
                out[ee] = val
            else:
                out.pop(ee, None)
    return Poly._wrap(out, f.nvars)


@dataclass(frozen=True, eq=False)
class QuotElem:
    """An element of O(A) = C[X, Y]/I_A in normal form (Y-degree < |A|)."""

    cycset: object
    poly: Poly

    def __eq__(self, other) -> bool:
        return isinstance(other, QuotElem) and self.cycset == other.cycset and self.poly == other.poly

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __str__(self) -> str:
        return f"{self.poly} mod I_{self.cycset}"


def reduce_mod(A, f: Poly) -> QuotElem:
    """Normal form of f in O(A): the unique representative with deg_Y < |A|."""
    return QuotElem(A, reduce_by(f, p_for_set(A), 1))


# splitting coefficients ----------------------------------------------------

def _tri(d: int):
    ctx = context(d)
    return ctx, cyc_var(ctx, 0, 3), cyc_var(ctx, 1, 3), cyc_var(ctx, 2, 3)


def split_coeffs(d: int, k: int, i: int) -> tuple[Poly, Poly]:
    """
    The pair (c_k^i, d_k^(k-i)) with P_k(X,Y) = c P_i(X,Z) + d P_(k-i)(Z,Y).

    Built by the base cases and the two-term induction on k.
    """
    if not (0 <= i <= k <= d - 1):
        raise InvalidSplit(f"need 0 <= i <= k <= {d - 1}, got k={k}, i={i}")
    return _split(d, k, i)


@lru_cache(maxsize=None)
def _split(d: int, k: int, i: int) -> tuple[Poly, Poly]:
    ctx, X, Y, Z = _tri(d)
    one = Poly.const(ctx.one, 3)
    j = k - i
    if k == 0:
        return one, one
    if i == k:
        return one, _d_k0(d, k)
    if i == 0:
        return _c_k0(d, k), one
    c_prev_lo, d_prev_hi = _split(d, k - 1, i - 1)  # c_{k-1}^{i-1}, d_{k-1}^{j}
    c_prev_hi, d_prev_lo = _split(d, k - 1, i)  # c_{k-1}^{i}, d_{k-1}^{j-1}
    zi = ctx.zeta_pow(i)
    c = c_prev_lo + c_prev_hi * (Z - Y * ctx.zeta_pow(j)) * zi
    dd = d_prev_hi * (X - Z * zi) + d_prev_lo * zi
    return c, dd


def _c_k0(d: int, k: int) -> Poly:
    ctx, X, Y, Z = _tri(d)
    out = p_eval(ctx, k - 1, X, Y, twist=1) + p_eval(ctx, k - 1, Z, Y)
    for r in range(k - 1):
        out = out + p_eval(ctx, r, Z, Y) * p_eval(ctx, k - 2 - r, X, Y, twist=r + 2)
    return out


def _d_k0(d: int, k: int) -> Poly:
    ctx, X, Y, Z = _tri(d)
    out = p_eval(ctx, k - 1, X, Y, twist=1) + p_eval(ctx, k - 1, X, Z) * ctx.zeta_pow(k)
    for r in range(k - 1):
        out = out + p_eval(ctx, r, X, Z) * p_eval(ctx, k - 2 - r, X, Y, twist=r + 2) * ctx.zeta_pow(r + 1)
    return out


def split_coeffs_closed(d: int, i: int) -> tuple[Poly, Poly]:
    """
    Closed forms of c_(i+1)^i and d_(i+1)^i.

    c_(i+1)^i is the first output of ``split_coeffs(d, i + 1, i)``;
    d_(i+1)^i is the second output of ``split_coeffs(d, i + 1, 1)``.
    """
    if not 0 <= i <= d - 2:
        raise InvalidSplit(f"closed form needs 0 <= i <= {d - 2}, got {i}")
    ctx, X, Y, Z = _tri(d)
    s_i, s_next = ctx.sigma(i), ctx.sigma(i + 1)
    c = X + Z * s_i - Y * s_next
    dd = X * s_next - Z * (s_next - 1) - Y * ctx.zeta_pow(i + 1)
    return c, dd


def split_identity_residual(d: int, k: int, i: int) -> Poly:
    """P_k(X,Y) - c P_i(X,Z) - d P_(k-i)(Z,Y); zero exactly when the coefficients split P_k."""
    ctx, X, Y, Z = _tri(d)
    c, dd = split_coeffs(d, k, i)
    return p_eval(ctx, k, X, Y) - c * p_eval(ctx, i, X, Z) - dd * p_eval(ctx, k - i, Z, Y)
