"""
Indecomposable bimodules O(A)[k] for cyclically connected A in W = <s>,
their tensor-product decompositions, graded ranks and Hom spaces, plus
degreewise linear-algebra checks of the structural results.

Shift convention: M[n] puts the degree j + n part of M in degree j, so the
graded left rank satisfies G_{M[n]} = v^-n G_M.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import context
from .errors import ContextMismatch, InternalInconsistency, InvalidParameter, Report
from .laurent import LaurentInt
from .linalg import rank
from .polyring import (
    Poly,
    cyc_var,
    p_eval,
    p_for_set,
    p_poly,
    reduce_by,
    reduce_mod,
    split_coeffs,
)


@dataclass(frozen=True, order=True)
class CycSet:
    """The arc {s^start, ..., s^(start+length-1)}; W itself has start 0."""

    d: int
    start: int
    length: int

    def __post_init__(self):
        if self.d < 2 or not 1 <= self.length <= self.d:
            raise InvalidParameter(f"bad cyclic set d={self.d} length={self.length}")
        if not 0 <= self.start < self.d or (self.length == self.d and self.start != 0):
            raise InvalidParameter(f"non-canonical cyclic set {self.start}, {self.length}")

    @classmethod
    def make(cls, d: int, start: int, length: int) -> CycSet:
        return cls(d, 0 if length == d else start % d, length)

    @classmethod
    def whole(cls, d: int) -> CycSet:
        return cls(d, 0, d)

    @classmethod
    def upto(cls, d: int, j: int) -> CycSet:
        """s^{<= j}."""
        return cls.make(d, 0, j + 1)

    @property
    def is_whole(self) -> bool:
        return self.length == self.d

    @property
    def elements(self) -> frozenset[int]:
        return frozenset((self.start + t) % self.d for t in range(self.length))

    def __str__(self) -> str:
        if self.is_whole:
            return "W"
        if self.length == 1 and self.start == 0:
            return "e"
        return f"s[{self.start}..{self.start + self.length - 1}]"


def twist_product(a: CycSet, m: int) -> CycSet:
    """O(s^m) (x) O(a): the arc rotated by m."""
    return CycSet.make(a.d, a.start + m, a.length)


@dataclass(frozen=True, order=True)
class ShiftedIndec:
    cycset: CycSet
    shift: int = 0

    @property
    def d(self) -> int:
        return self.cycset.d

    def sort_key(self) -> tuple[int, int, int]:
        return (self.cycset.start, self.cycset.length, self.shift)

    def __str__(self) -> str:
        return f"{self.cycset}{{{self.shift}}}"


_LITERAL = re.compile(r"^\s*(?:(e)|(W)|s\[(-?\d+)\.\.(-?\d+)\])\s*(?:\{\s*(-?\d+)\s*\})?\s*$")


def parse_indec(text: str, d: int) -> ShiftedIndec:
    """Parse ``e{k}``, ``W{k}`` or ``s[i..j]{k}`` (the shift may be omitted)."""
    m = _LITERAL.match(text)
    if not m:
        raise ValueError(f"cannot parse object literal {text!r}")
    shift = int(m.group(5)) if m.group(5) is not None else 0
    if m.group(1):
        cs = CycSet.make(d, 0, 1)
    elif m.group(2):
        cs = CycSet.whole(d)
    else:
        i, j = int(m.group(3)), int(m.group(4))
        if j < i or j - i + 1 > d:
            raise ValueError(f"arc s[{i}..{j}] is empty or longer than d={d}")
        cs = CycSet.make(d, i, j - i + 1)
    return ShiftedIndec(cs, shift)


def parse_cycset(text: str, d: int) -> CycSet:
    return parse_indec(text, d).cycset


def enumerate_indecomposables(d: int) -> list[CycSet]:
    """All cyclically connected subsets, singletons first, then by length and start."""
    if d < 2:
        raise InvalidParameter(f"d must be >= 2, got {d}")
    return [CycSet(d, i, ell) for ell in range(1, d) for i in range(d)] + [CycSet.whole(d)]


class DecompList:
    """A multiset of shifted indecomposables (a Krull-Schmidt decomposition)."""

    __slots__ = ("d", "counts")

    def __init__(self, d: int, items=()):
        self.d = d
        self.counts: Counter[ShiftedIndec] = Counter()
        for x in items:
            if x.d != d:
                raise ContextMismatch(f"summand {x} is not for d={d}")
            self.counts[x] += 1

    @classmethod
    def from_counter(cls, d: int, counts: Counter) -> DecompList:
        out = cls(d)
        out.counts = Counter({k: v for k, v in counts.items() if v})
        return out

    def __iter__(self):
        for x in self.sorted():
            yield x

    def sorted(self) -> list[ShiftedIndec]:
        out = []
        for x in sorted(self.counts, key=ShiftedIndec.sort_key):
            out.extend([x] * self.counts[x])
        return out

    def __len__(self) -> int:
        return sum(self.counts.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, DecompList) and self.d == other.d and self.counts == other.counts

    def __add__(self, other: DecompList) -> DecompList:
        return DecompList.from_counter(self.d, self.counts + other.counts)

    def __sub__(self, other: DecompList) -> DecompList:
        for k, v in other.counts.items():
            if self.counts[k] < v:
                raise InternalInconsistency(f"cannot remove {v} x {k} from {self}")
        return DecompList.from_counter(self.d, self.counts - other.counts)

    def shifted(self, n: int) -> DecompList:
        return DecompList.from_counter(
            self.d, Counter({ShiftedIndec(x.cycset, x.shift + n): c for x, c in self.counts.items()})
        )

    def rotated(self, m: int) -> DecompList:
        out: Counter = Counter()
        for x, c in self.counts.items():
            out[ShiftedIndec(twist_product(x.cycset, m), x.shift)] += c
        return DecompList.from_counter(self.d, out)

    def __str__(self) -> str:
        return "{" + ", ".join(str(x) for x in self.sorted()) + "}"

    def __repr__(self) -> str:
        return f"DecompList(d={self.d}, {self})"

    def to_json(self) -> list[dict]:
        return [{"start": x.cycset.start, "len": x.cycset.length, "shift": x.shift} for x in self.sorted()]

    @classmethod
    def from_json(cls, d: int, data) -> DecompList:
        return cls(d, (ShiftedIndec(CycSet.make(d, e["start"], e["len"]), e["shift"]) for e in data))


# graded ranks -------------------------------------------------------------

def graded_rank(m: ShiftedIndec | CycSet) -> LaurentInt:
    """Graded rank as a free left R-module: v^-k (1 + v^2 + ... + v^(2(l-1)))."""
    if isinstance(m, CycSet):
        m = ShiftedIndec(m, 0)
    return LaurentInt({2 * r - m.shift: 1 for r in range(m.cycset.length)})


def decomposition_rank(dl: DecompList) -> LaurentInt:
    total = LaurentInt()
    for x, c in dl.counts.items():
        total = total + graded_rank(x) * c
    return total


# tensor products ------------------------------------------------------------

def _key(d: int, start: int, length: int) -> tuple[int, int]:
    return (0, d) if length == d else (start % d, length)


@lru_cache(maxsize=None)
def _tensor_upto(d: int, j: int, l: int) -> tuple:
    """Decomposition of O(s^{<=j}) (x) O(s^{<=l}) as ((start, length, shift), mult) pairs."""
    if l == 0:
        return (((0, j + 1, 0) if j + 1 < d else (0, d, 0), 1),)
    if j == 0:
        return (((0, l + 1, 0) if l + 1 < d else (0, d, 0), 1),)
    if j == 1 or l == 1:
        i = l if j == 1 else j
        if i == d - 1:
            return (((0, d, 0), 1), ((0, d, -2), 1))
        return (((0, i + 2, 0) if i + 2 < d else (0, d, 0), 1), ((1, i, -2), 1))
    # O(s^{<=j}) (x) O(s^{<=1}) (x) O(s^{<=l-1}) = T(j, l) + O(s) (x) T(j, l-2) [-2]
    total: Counter = Counter()
    for (st, ln, sh), mult in _tensor_upto(d, j, 1):
        for (st2, ln2, sh2), m2 in _tensor_upto(d, ln - 1, l - 1):
            total[(*_key(d, st + st2, ln2), sh + sh2)] += mult * m2
    for (st, ln, sh), mult in _tensor_upto(d, j, l - 2):
        k = (*_key(d, st + 1, ln), sh - 2)
        if total[k] < mult:
            raise InternalInconsistency(f"negative multiplicity for {k} in T({j},{l}), d={d}")
        total[k] -= mult
    return tuple(sorted((k, v) for k, v in total.items() if v))


def _as_indec(x) -> ShiftedIndec:
    return x if isinstance(x, ShiftedIndec) else ShiftedIndec(x, 0)


def tensor_decompose(a, b) -> DecompList:
    """Krull-Schmidt decomposition of O(a) (x)_R O(b), shifts included."""
    a, b = _as_indec(a), _as_indec(b)
    if a.d != b.d:
        raise ContextMismatch(f"d={a.d} vs d={b.d}")
    d = a.d
    rot = a.cycset.start + b.cycset.start
    shift = a.shift + b.shift
    out: Counter = Counter()
    for (st, ln, sh), mult in _tensor_upto(d, a.cycset.length - 1, b.cycset.length - 1):
        out[ShiftedIndec(CycSet.make(d, st + rot, ln), sh + shift)] += mult
    return DecompList.from_counter(d, out)


def _tri_vars(d: int):
    ctx = context(d)
    return ctx, cyc_var(ctx, 0, 3), cyc_var(ctx, 1, 3), cyc_var(ctx, 2, 3)


def tensor_model_generators(a: CycSet, b: CycSet) -> tuple[Poly, Poly]:
    """P_a(X, Z) and P_b(Z, Y) in C[X, Y, Z]: the relations of O(a) (x)_R O(b)."""
    ctx, X, Y, Z = _tri_vars(a.d)
    ga = p_eval(ctx, a.length - 1, X, Z, twist=a.start)
    gb = p_eval(ctx, b.length - 1, Z, Y, twist=b.start)
    return ga, gb


def tensor_rank_oracle(a, b) -> LaurentInt:
    """
    Graded left rank of O(a) (x)_R O(b) read off the trivariate quotient.

    For lex order Y > Z > X the leading monomials of P_b(Z,Y) and P_a(X,Z)
    are Y^|b| and Z^|a|. They are coprime, so the two generators are a
    Groebner basis and the standard monomials X^k Z^alpha Y^beta
    (alpha < |a|, beta < |b|) form a basis; counting them per degree gives
    the rank.
    """
    a, b = _as_indec(a), _as_indec(b)
    if a.d != b.d:
        raise ContextMismatch(f"d={a.d} vs d={b.d}")
    A, B = a.cycset, b.cycset
    ga, gb = tensor_model_generators(A, B)
    if any(e[1] for e in ga.terms):
        raise InternalInconsistency("P_a(X, Z) involves Y")
    if not ga.coeff((0, 0, A.length)) or ga.degree_in(2) != A.length:
        raise InternalInconsistency("P_a(X, Z) has no leading Z power")
    if not gb.coeff((0, B.length, 0)) or gb.degree_in(1) != B.length:
        raise InternalInconsistency("P_b(Z, Y) has no leading Y power")
    counts: Counter = Counter()
    for alpha in range(A.length):
        for beta in range(B.length):
            counts[2 * (alpha + beta) - a.shift - b.shift] += 1
    return LaurentInt(dict(counts))


def tensor_model_reduce(f: Poly, ga: Poly, gb: Poly) -> Poly:
    """Normal form in C[X,Y,Z]/(ga, gb): Y-degree below deg_Y gb, then Z below deg_Z ga."""
    return reduce_by(reduce_by(f, gb, 1), ga, 2)


def quotient_hilbert_function(a: CycSet, b: CycSet, max_n: int) -> list[int]:
    """
    Dimensions of the polynomial-degree n parts of C[X,Y,Z]/(P_a(X,Z), P_b(Z,Y))
    for n = 0..max_n, by linear algebra on all monomials of degree n.
    """
    ga, gb = tensor_model_generators(a, b)
    out = []
    for n in range(max_n + 1):
        monos = [(x, y, n - x - y) for x in range(n + 1) for y in range(n + 1 - x)]
        index = {m: k for k, m in enumerate(monos)}
        rows = []
        for g, deg in ((ga, a.length), (gb, b.length)):
            if n < deg:
                continue
            m = n - deg
            for x in range(m + 1):
                for y in range(m + 1 - x):
                    z = m - x - y
                    row = [0] * len(monos)
                    for e, c in g.terms.items():
                        row[index[(e[0] + x, e[1] + y, e[2] + z)]] = c
                    rows.append(row)
        out.append(len(monos) - rank(rows))
    return out


# Hom spaces ---------------------------------------------------------------

@dataclass(frozen=True)
class HomDescription:
    rank: int
    generator: Poly
    degrees: tuple[int, ...]

    def dims(self, degree_bound: int) -> dict[int, int]:
        """Dimension per even degree of a free right R-module with these generator degrees."""
        return {delta: sum(1 for g in self.degrees if g <= delta) for delta in range(0, degree_bound + 1, 2)}


def hom_describe(A: CycSet, B: CycSet) -> HomDescription:
    if A.d != B.d:
        raise ContextMismatch(f"d={A.d} vs d={B.d}")
    ctx = context(A.d)
    X, Y = cyc_var(ctx, 0, 2), cyc_var(ctx, 1, 2)
    only_b = sorted(B.elements - A.elements)
    r = len(A.elements & B.elements)
    g = Poly.const(ctx.one, 2)
    for i in only_b:
        g = g * (X - Y * ctx.zeta_pow(i))
    base = 2 * len(only_b)
    return HomDescription(r, g, tuple(base + 2 * t for t in range(r)))


def hom_oracle(A: CycSet, B: CycSet, degree_bound: int) -> dict[int, int]:
    """
    Brute-force graded dimensions of Hom(O(A), O(B)).

    A degree-delta map is 1 -> Q with Q in O(B)_delta and Q P_A = 0 in O(B);
    the kernel dimension of Q -> Q P_A is computed exactly per degree.
    """
    if A.d != B.d:
        raise ContextMismatch(f"d={A.d} vs d={B.d}")
    if degree_bound < 0:
        raise InvalidParameter("degree bound must be non-negative")
    pa = p_for_set(A)
    one = context(A.d).one
    # X acts without changing normal forms, so the image of X^t Y^beta is X^t
    # times that of Y^beta and the coordinate vector does not depend on t
    cols = []
    for beta in range(B.length):
        image = reduce_mod(B, Poly.monomial((0, beta), one) * pa).poly
        cols.append([image.coeff((A.length + beta - b, b)) for b in range(B.length)])
    prefix_rank = [0] + [rank(cols[:k]) for k in range(1, B.length + 1)]
    out = {}
    for delta in range(0, degree_bound + 1, 2):
        k = min(delta // 2, B.length - 1) + 1
        out[delta] = k - prefix_rank[k]
    return out


# degreewise verifications -------------------------------------------------

def default_degree_bound(d: int) -> int:
    return 2 * (2 * d + 2)


def verify_ses(d: int, i: int, degree_bound: int | None = None) -> Report:
    """
    0 -> O(s^i)[-2i] -> O(s^{<=i}) -> O(s^{<=i-1}) -> 0 with iota(r) = r P_{i-1}
    and pi the restriction, checked degree by degree.
    """
    if not 1 <= i <= d - 1:
        raise InvalidParameter(f"need 1 <= i <= {d - 1}, got {i}")
    bound = default_degree_bound(d) if degree_bound is None else degree_bound
    ctx = context(d)
    big, small = CycSet.upto(d, i), CycSet.upto(d, i - 1)
    X, Y = cyc_var(ctx, 0, 2), cyc_var(ctx, 1, 2)
    p_prev = p_poly(d, i - 1)
    rep = Report(f"ses d={d} i={i}")
    # right action on O(s^i) is twisted: X acts as zeta^i Y after iota
    rep.record("iota is a bimodule map", not reduce_mod(big, (X - Y * ctx.zeta_pow(i)) * p_prev))
    for delta in range(0, bound + 1, 2):
        n = delta // 2
        src_dim = 1 if n >= i else 0
        image = reduce_mod(big, Poly.monomial((n - i, 0), ctx.one) * p_prev) if src_dim else None
        if src_dim:
            rep.record(f"iota injective in degree {delta}", bool(image), delta)
            rep.record(f"pi o iota = 0 in degree {delta}", not reduce_mod(small, image.poly), delta)
        mid = [Poly.monomial((n - b, b), ctx.one) for b in range(min(n, i) + 1)]
        cols = []
        for f in mid:
            r = reduce_mod(small, f).poly
            cols.append([r.coeff((n - b, b)) for b in range(i)])
        target_dim = min(n, i - 1) + 1
        rk = rank(cols)
        rep.record(f"pi surjective in degree {delta}", rk == target_dim, delta)
        rep.record(f"dim ker pi = dim im iota in degree {delta}", len(mid) - rk == src_dim, delta)
    lhs = graded_rank(big)
    rhs = graded_rank(CycSet.make(d, i, 1)).shift(2 * i) + graded_rank(small)
    rep.record("graded ranks add up", lhs == rhs, (lhs, rhs))
    return rep


def soergel_m(d: int, i: int) -> Poly:
    """m = sigma_i Z - sigma_(i-1) X - zeta^i Y in C[X, Y, Z]."""
    ctx, X, Y, Z = _tri_vars(d)
    return Z * ctx.sigma(i) - X * ctx.sigma(i - 1) - Y * ctx.zeta_pow(i)


def verify_soergel_splitting(d: int, i: int, degree_bound: int | None = None) -> Report:
    """
    O(s^{<=1}) (x) O(s^{<=i}) = O(s^{<=i+1}) + O(s^[1,i])[-2] via 1 -> 1 and 1 -> m,
    checked in the model C[X,Y,Z]/(P_1(X,Z), P_i(Z,Y)).
    """
    if not 1 <= i <= d - 2:
        raise InvalidParameter(f"need 1 <= i <= {d - 2}, got {i}")
    bound = default_degree_bound(d) if degree_bound is None else degree_bound
    ctx, X, Y, Z = _tri_vars(d)
    a, b = CycSet.upto(d, 1), CycSet.upto(d, i)
    ga, gb = tensor_model_generators(a, b)
    rep = Report(f"soergel d={d} i={i}")

    def nf(f: Poly) -> Poly:
        return tensor_model_reduce(f, ga, gb)

    # phi: 1 -> 1 is well defined because P_{i+1} = c P_1(X,Z) + d P_i(Z,Y)
    c, dd = split_coeffs(d, i + 1, 1)
    p_next = p_eval(ctx, i + 1, X, Y)
    rep.record("phi witness: P_{i+1} = c P_1(X,Z) + d P_i(Z,Y)",
               not (p_next - c * p_eval(ctx, 1, X, Z) - dd * p_eval(ctx, i, Z, Y)))
    rep.record("phi kills P_{i+1}(X,Y)", not nf(p_next))

    m = soergel_m(d, i)
    zinv_x = X * ctx.zeta_pow(-1)
    c1, d1 = split_coeffs(d, i, 1)
    c1s, d1s = c1.compose([Z, Y, zinv_x]), d1.compose([Z, Y, zinv_x])
    rep.record("m equals d_i^(i-1)(Z, Y, zeta^-1 X)", d1s == m)
    p_shift = p_eval(ctx, i - 1, zinv_x, Y)
    rep.record(
        "psi witness: P_i(Z,Y) = zeta^-1 c P_1(X,Z) + m P_(i-1)(zeta^-1 X, Y)",
        not (p_eval(ctx, i, Z, Y) - c1s * p_eval(ctx, 1, X, Z) * ctx.zeta_pow(-1) - d1s * p_shift),
    )
    p_arc = p_for_set(CycSet.make(d, 1, i)).compose([X, Y])
    rep.record("psi kills P_[1,i](X,Y)", not nf(m * p_arc))

    basis_of = {}
    for delta in range(0, bound + 1, 2):
        n = delta // 2
        coords = [(al, be) for al in range(2) for be in range(i + 1) if al + be <= n]
        images = []
        for be in range(min(n, i + 1) + 1):
            images.append(nf(Poly.monomial((n - be, be, 0), ctx.one)))
        for be in range(i):
            t = n - 1 - be
            if t >= 0:
                images.append(nf(Poly.monomial((t, be, 0), ctx.one) * m))
        vecs = [[f.coeff((n - al - be, be, al)) for al, be in coords] for f in images]
        rk = rank(vecs)
        basis_of[delta] = (len(images), len(coords))
        rep.record(f"images independent in degree {delta}", rk == len(images), delta)
        rep.record(f"images span in degree {delta}", rk == len(coords), delta)
    rep.details["dims"] = basis_of
    return rep
