"""
The split Grothendieck ring A_W over Z[v, v^-1].

Elements are sparse maps over the basis s^i C_j, (i, j) in
Sigma = {0..d-1} x {0..d-2} + {(0, d-1)}. Multiplication rewrites with

    C_1 C_i = C_{i+1} + s C_{i-1},   C_1 C_{d-1} = (v + v^-1) C_{d-1},
    s C_{d-1} = C_{d-1},             s^d = 1.
"""
from __future__ import annotations

import re
from functools import lru_cache
from math import comb

from .bimodule import CycSet, DecompList, ShiftedIndec, enumerate_indecomposables, tensor_decompose
from .errors import ContextMismatch, InternalInconsistency, InvalidParameter, Report
from .laurent import LaurentInt, V, V_INV, parse_laurent
from .polyring import Poly

Basis = tuple[int, int]


def sigma_basis(d: int) -> list[Basis]:
    if d < 2:
        raise InvalidParameter(f"d must be >= 2, got {d}")
    return [(i, j) for j in range(d - 1) for i in range(d)] + [(0, d - 1)]


def basis_label(b: Basis) -> str:
    return f"s^{b[0]} C_{b[1]}"


_LABEL = re.compile(r"^s\^(\d+) C_(\d+)$")


def _norm(d: int, i: int, j: int) -> Basis:
    return (0, j) if j == d - 1 else (i % d, j)


class AWElement:
    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs=None):
        self.d = d
        self.coeffs: dict[Basis, LaurentInt] = {}
        for (i, j), c in (coeffs or {}).items():
            if not 0 <= j <= d - 1:
                raise InvalidParameter(f"C_{j} is not defined for d={d}")
            self._acc(_norm(d, i, j), c if isinstance(c, LaurentInt) else LaurentInt(c))

    def _acc(self, b: Basis, c: LaurentInt) -> None:
        total = self.coeffs.get(b, LaurentInt()) + c
        if total:
            self.coeffs[b] = total
        else:
            self.coeffs.pop(b, None)

    @classmethod
    def basis(cls, d: int, i: int, j: int, coeff=1) -> AWElement:
        return cls(d, {(i, j): coeff})

    @classmethod
    def one(cls, d: int) -> AWElement:
        return cls.basis(d, 0, 0)

    @classmethod
    def s(cls, d: int, power: int = 1) -> AWElement:
        return cls.basis(d, power, 0)

    @classmethod
    def c(cls, d: int, j: int) -> AWElement:
        return cls.basis(d, 0, j)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, AWElement):
            return self.d == other.d and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.d, frozenset(self.coeffs.items())))

    def __add__(self, other: AWElement) -> AWElement:
        out = AWElement(self.d, self.coeffs)
        for b, c in other.coeffs.items():
            out._acc(b, c)
        return out

    def __neg__(self) -> AWElement:
        return AWElement(self.d, {b: -c for b, c in self.coeffs.items()})

    def __sub__(self, other: AWElement) -> AWElement:
        return self + (-other)

    def scale(self, c) -> AWElement:
        return AWElement(self.d, {b: x * c for b, x in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, AWElement):
            return aw_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> AWElement:
        out = AWElement.one(self.d)
        for _ in range(n):
            out = aw_multiply(out, self)
        return out

    def set_s_to_one(self) -> dict[int, LaurentInt]:
        """Image in A_W/(s - 1): a map j -> coefficient of C_j."""
        out: dict[int, LaurentInt] = {}
        for (_, j), c in self.coeffs.items():
            out[j] = out.get(j, LaurentInt()) + c
        return {j: c for j, c in out.items() if c}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*{basis_label(b)}" for b, c in sorted(self.coeffs.items(), key=lambda t: (t[0][1], t[0][0])))

    __repr__ = __str__

    def to_json(self) -> dict[str, str]:
        return {basis_label(b): str(self.coeffs[b]) for b in sigma_basis(self.d) if b in self.coeffs}

    @classmethod
    def from_json(cls, d: int, data: dict) -> AWElement:
        coeffs = {}
        for label, text in data.items():
            m = _LABEL.match(label)
            if not m:
                raise ValueError(f"bad basis label {label!r}")
            coeffs[(int(m.group(1)), int(m.group(2)))] = parse_laurent(text)
        return cls(d, coeffs)


# multiplication ------------------------------------------------------------

def _times_s(d: int, b: Basis) -> Basis:
    return _norm(d, b[0] + 1, b[1])


@lru_cache(maxsize=None)
def _c1_times(d: int, b: Basis) -> tuple:
    i, j = b
    if j == d - 1:
        return ((b, V + V_INV),)
    if j == 0:
        return ((_norm(d, i, 1), LaurentInt(1)),)
    return ((_norm(d, i, j + 1), LaurentInt(1)), (_norm(d, i + 1, j - 1), LaurentInt(1)))


def _apply_c1(d: int, x: dict) -> dict:
    out: dict = {}
    for b, c in x.items():
        for b2, c2 in _c1_times(d, b):
            out[b2] = out.get(b2, LaurentInt()) + c * c2
    return {b: c for b, c in out.items() if c}


@lru_cache(maxsize=None)
def _cb_times(d: int, k: int, b: Basis) -> tuple:
    """C_k * (basis element b), peeling with C_k = C_1 C_{k-1} - s C_{k-2}."""
    if k == 0:
        return ((b, LaurentInt(1)),)
    if k == 1:
        return _c1_times(d, b)
    out = _apply_c1(d, dict(_cb_times(d, k - 1, b)))
    for b2, c2 in _cb_times(d, k - 2, b):
        b3 = _times_s(d, b2)
        out[b3] = out.get(b3, LaurentInt()) - c2
    return tuple(sorted((b2, c) for b2, c in out.items() if c))


def aw_multiply(x: AWElement, y: AWElement) -> AWElement:
    if x.d != y.d:
        raise ContextMismatch(f"d={x.d} vs d={y.d}")
    d = x.d
    out = AWElement(d)
    for (a, b), cx in x.coeffs.items():
        for (c, e), cy in y.coeffs.items():
            coef = cx * cy
            for (i, j), k in _cb_times(d, b, _norm(d, a + c, e)):
                out._acc((i, j), coef * k)
    return out


def structure_constants(d: int) -> dict[tuple[Basis, Basis], AWElement]:
    basis = sigma_basis(d)
    return {
        (x, y): aw_multiply(AWElement.basis(d, *x), AWElement.basis(d, *y))
        for x in basis for y in basis
    }


# the polynomials Q_i -------------------------------------------------------

@lru_cache(maxsize=None)
def q_poly(i: int) -> Poly:
    """Q_0 = 1, Q_1 = X, Q_{i+1} = X Q_i - Y Q_{i-1}, integer coefficients."""
    if i < 0:
        raise InvalidParameter(f"Q_i needs i >= 0, got {i}")
    if i == 0:
        return Poly.const(1, 2)
    if i == 1:
        return Poly.var(0, 2)
    return Poly.var(0, 2) * q_poly(i - 1) - Poly.var(1, 2) * q_poly(i - 2)


def q_closed(i: int) -> Poly:
    """sum_k binom(i-k, k) (-Y)^k X^(i-2k)."""
    return Poly({(i - 2 * k, k): (-1) ** k * comb(i - k, k) for k in range(i // 2 + 1)}, 2)


def evaluate_in_aw(p: Poly, x: AWElement, y: AWElement) -> AWElement:
    """p(x, y) for a two-variable polynomial with integer or Laurent coefficients."""
    d = x.d
    xp, yp = [AWElement.one(d)], [AWElement.one(d)]
    out = AWElement(d)
    for (a, b), c in p.terms.items():
        while len(xp) <= a:
            xp.append(xp[-1] * x)
        while len(yp) <= b:
            yp.append(yp[-1] * y)
        out = out + (xp[a] * yp[b]).scale(c)
    return out


def presentation2_cd1(d: int) -> AWElement:
    """The binomial expression for C_{d-1} in s and C = C_1, evaluated in A_W."""
    return evaluate_in_aw(q_closed(d - 1), AWElement.c(d, 1), AWElement.s(d))


def verify_binomial_claims(d: int) -> Report:
    rep = Report(f"presentation d={d}")
    c1, s = AWElement.c(d, 1), AWElement.s(d)
    rep.record("C_{d-1} equals the binomial sum", presentation2_cd1(d) == AWElement.c(d, d - 1))
    for k in range(1, d):
        target = AWElement.c(d, k)
        rep.record(f"C_{k} binomial formula", evaluate_in_aw(q_closed(k), c1, s) == target)
        rep.record(f"C_{k} = Q_{k}(C_1, s)", evaluate_in_aw(q_poly(k), c1, s) == target)
    rep.record("s C_{d-1} = C_{d-1}", s * AWElement.c(d, d - 1) == AWElement.c(d, d - 1))
    rep.record("s^d = 1", s ** d == AWElement.one(d))
    return rep


# decategorification -------------------------------------------------------

def decat_indec(x: ShiftedIndec) -> AWElement:
    """<O(s^[i, i+j])[k]> = v^(j-k) s^i C_j."""
    j = x.cycset.length - 1
    return AWElement.basis(x.d, x.cycset.start, j, LaurentInt.v(j - x.shift))


def decat(dl: DecompList) -> AWElement:
    out = AWElement(dl.d)
    for x, mult in dl.counts.items():
        out = out + decat_indec(x).scale(mult)
    return out


def class_object(cs: CycSet) -> ShiftedIndec:
    """The object whose class is the basis element s^i C_j (shift j)."""
    return ShiftedIndec(cs, cs.length - 1)


def categorification_check(d: int, pairs=None) -> Report:
    rep = Report(f"categorification d={d}")
    objs = [class_object(a) for a in enumerate_indecomposables(d)]
    if pairs is None:
        pairs = [(a, b) for a in objs for b in objs]
    for a, b in pairs:
        lhs = decat(tensor_decompose(a, b))
        rhs = aw_multiply(decat_indec(a), decat_indec(b))
        rep.record(f"{a.cycset} x {b.cycset}", lhs == rhs, (str(a), str(b), str(lhs), str(rhs)))
    return rep


# the module U --------------------------------------------------------------

class SparseMatrix:
    """Square matrix over LaurentInt stored by columns: cols[c] = {row: entry}."""

    __slots__ = ("n", "cols")

    def __init__(self, n: int, cols=None):
        self.n = n
        self.cols = {c: dict(col) for c, col in (cols or {}).items() if col}

    @classmethod
    def identity(cls, n: int) -> SparseMatrix:
        return cls(n, {k: {k: LaurentInt(1)} for k in range(n)})

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        for c, x in vec.items():
            for r, a in self.cols.get(c, {}).items():
                out[r] = out.get(r, LaurentInt()) + a * x
        return {r: a for r, a in out.items() if a}

    def __matmul__(self, other: SparseMatrix) -> SparseMatrix:
        return SparseMatrix(self.n, {c: self.apply(col) for c, col in other.cols.items()})

    def __add__(self, other: SparseMatrix) -> SparseMatrix:
        cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            tgt = cols.setdefault(c, {})
            for r, a in col.items():
                tgt[r] = tgt.get(r, LaurentInt()) + a
        return SparseMatrix(self.n, {c: {r: a for r, a in col.items() if a} for c, col in cols.items()})

    def scale(self, k) -> SparseMatrix:
        return SparseMatrix(self.n, {c: {r: a * k for r, a in col.items() if a * k} for c, col in self.cols.items()})

    def __sub__(self, other: SparseMatrix) -> SparseMatrix:
        return self + other.scale(-1)

    def __eq__(self, other) -> bool:
        return isinstance(other, SparseMatrix) and self.n == other.n and self.cols == other.cols

    def __pow__(self, k: int) -> SparseMatrix:
        out = SparseMatrix.identity(self.n)
        for _ in range(k):
            out = self @ out
        return out


def u_module_matrices(d: int) -> tuple[SparseMatrix, SparseMatrix]:
    """Matrices of s and C on U = span{E_(i,j) : (i,j) in Sigma}, same order as sigma_basis."""
    basis = sigma_basis(d)
    index = {b: k for k, b in enumerate(basis)}
    n = len(basis)
    s_cols, c_cols = {}, {}
    for b in basis:
        s_cols[index[b]] = {index[_times_s(d, b)]: LaurentInt(1)}
        c_cols[index[b]] = {index[b2]: c for b2, c in _u_c_action(d, b)}
    return SparseMatrix(n, s_cols), SparseMatrix(n, c_cols)


def _u_c_action(d: int, b: Basis):
    i, j = b
    if j == d - 1:
        return [(b, V + V_INV)]
    if j == 0:
        return [(_norm(d, i, 1), LaurentInt(1))]
    return [(_norm(d, i, j + 1), LaurentInt(1)), (_norm(d, i + 1, j - 1), LaurentInt(1))]


def _poly_of_matrices(p: Poly, cmat: SparseMatrix, smat: SparseMatrix) -> SparseMatrix:
    """p(C, S) for p in Z[X, Y]; C and S commute."""
    n = cmat.n
    out = SparseMatrix(n)
    cpow = [SparseMatrix.identity(n)]
    for (a, b), k in sorted(p.terms.items()):
        while len(cpow) <= a:
            cpow.append(cmat @ cpow[-1])
        term = cpow[a]
        for _ in range(b):
            term = smat @ term
        out = out + term.scale(k)
    return out


def verify_u_module(d: int) -> Report:
    rep = Report(f"umodule d={d}")
    smat, cmat = u_module_matrices(d)
    basis = sigma_basis(d)
    index = {b: k for k, b in enumerate(basis)}
    n = len(basis)
    ident = SparseMatrix.identity(n)
    rep.record("C E_(0,0) = E_(0,1)", cmat.apply({0: LaurentInt(1)}) == {index[_norm(d, 0, 1)]: LaurentInt(1)})
    rep.record("s^d = 1", smat ** d == ident)
    rep.record("s has order exactly d", all(smat ** k != ident for k in range(1, d)))
    rep.record("sC = Cs", smat @ cmat == cmat @ smat)
    cd = _poly_of_matrices(q_closed(d - 1), cmat, smat)
    rep.record("binomial C_{d-1} agrees with Q_{d-1}(C, s)", cd == _poly_of_matrices(q_poly(d - 1), cmat, smat))
    rep.record("s C_{d-1} = C_{d-1}", smat @ cd == cd)
    rep.record("C C_{d-1} = (v + v^-1) C_{d-1}", cmat @ cd == cd.scale(V + V_INV))
    top = index[(0, d - 1)]
    for b in basis:
        col = cd.cols.get(index[b], {})
        rep.record(f"C_(d-1) E_{b} = [v]_j E_(d-1)", col == {top: LaurentInt.quantum(b[1])}, b)
    cj = [_poly_of_matrices(q_closed(j), cmat, smat) for j in range(d)]
    e00 = {index[(0, 0)]: LaurentInt(1)}
    for b in basis:
        vec = cj[b[1]].apply(e00)
        for _ in range(b[0]):
            vec = smat.apply(vec)
        rep.record(f"s^{b[0]} C_{b[1]} E_(0,0) = E_{b}", vec == {index[b]: LaurentInt(1)}, b)
    return rep


def u_products(d: int) -> dict[tuple[Basis, Basis], AWElement]:
    """Products of basis elements computed in U from the generator presentation."""
    smat, cmat = u_module_matrices(d)
    basis = sigma_basis(d)
    cj = [_poly_of_matrices(q_closed(j), cmat, smat) for j in range(d)]
    out = {}
    for x in basis:
        mx = cj[x[1]]
        for _ in range(x[0]):
            mx = smat @ mx
        for k, y in enumerate(basis):
            col = mx.cols.get(k, {})
            out[(x, y)] = AWElement(d, {basis[r]: a for r, a in col.items()})
    return out


def verify_presentations_agree(d: int) -> Report:
    rep = Report(f"presentations agree d={d}")
    table = structure_constants(d)
    for key, prod in u_products(d).items():
        rep.record(f"{basis_label(key[0])} * {basis_label(key[1])}", prod == table[key], key)
    return rep


# Hecke quotient ----------------------------------------------------------

def _tpoly_mul(p: list, q: list) -> list:
    out = [LaurentInt() for _ in range(len(p) + len(q) - 1)]
    for a, x in enumerate(p):
        for b, y in enumerate(q):
            out[a + b] = out[a + b] + x * y
    return out


def _tpoly_add(p: list, q: list) -> list:
    n = max(len(p), len(q))
    return [(p[k] if k < len(p) else LaurentInt()) + (q[k] if k < len(q) else LaurentInt()) for k in range(n)]


def hecke_quotient_full(d: int) -> list[LaurentInt]:
    """All coefficients (low to high) of (T - v^-1) sum_i binom(d-1-i, i)(-1)^i (T + v)^(d-1-2i)."""
    if d < 2:
        raise InvalidParameter(f"d must be >= 2, got {d}")
    t_plus_v = [V, LaurentInt(1)]
    total = [LaurentInt()]
    for i in range((d - 1) // 2 + 1):
        term = [LaurentInt(comb(d - 1 - i, i) * (-1) ** i)]
        for _ in range(d - 1 - 2 * i):
            term = _tpoly_mul(term, t_plus_v)
        total = _tpoly_add(total, term)
    return _tpoly_mul([-V_INV, LaurentInt(1)], total)


def hecke_quotient_poly(d: int) -> list[LaurentInt]:
    """a_0 .. a_{d-1} of the monic degree-d relation satisfied by T = C_1 - v when s = 1."""
    full = hecke_quotient_full(d)
    if len(full) != d + 1 or full[-1] != 1:
        raise InternalInconsistency(f"Hecke relation for d={d} is not monic of degree d")
    return full[:-1]


def c1_matrix_s1(d: int) -> list[list[LaurentInt]]:
    """Matrix of C_1 on A_W/(s - 1) in the basis C_0..C_{d-1}; column k is C_1 C_k."""
    m = [[LaurentInt() for _ in range(d)] for _ in range(d)]
    for k in range(d):
        for j, c in (AWElement.c(d, 1) * AWElement.c(d, k)).set_s_to_one().items():
            m[j][k] = c
    return m


def _dense_mul(a, b):
    n = len(a)
    return [[sum((a[r][k] * b[k][c] for k in range(n) if a[r][k] and b[k][c]), LaurentInt()) for c in range(n)] for r in range(n)]


def hecke_annihilation_check(d: int) -> Report:
    rep = Report(f"hecke d={d}")
    full = hecke_quotient_full(d)
    rep.record("monic of degree d", len(full) == d + 1 and full[-1] == 1)
    m = c1_matrix_s1(d)
    n = [[m[r][c] - (V if r == c else 0) for c in range(d)] for r in range(d)]
    acc = [[LaurentInt() for _ in range(d)] for _ in range(d)]
    power = [[LaurentInt(int(r == c)) for c in range(d)] for r in range(d)]
    for a in full:
        acc = [[acc[r][c] + power[r][c] * a for c in range(d)] for r in range(d)]
        power = _dense_mul(n, power)
    rep.record("relation annihilates C_1 - v when s = 1", all(not x for row in acc for x in row))
    return rep
