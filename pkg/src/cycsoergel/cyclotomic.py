"""
Exact arithmetic in the cyclotomic field Q(zeta_d).

Elements are stored in the power basis 1, zeta, ..., zeta^(n-1), n = phi(d),
as a tuple of integer numerators over one positive common denominator.
Everything is reduced modulo the cyclotomic polynomial Phi_d, so two
elements are equal exactly when their stored coefficients agree.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ContextMismatch, DivisionByZero, InvalidParameter


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic; coefficients low -> high
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for t, b in enumerate(den):
                num[k + t] -= c * b
    assert not any(num), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_d, constant term first."""
    if d < 1:
        raise InvalidParameter(f"d must be positive, got {d}")
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num = _poly_divexact(num, cyclotomic_poly(e))
    return tuple(num)


def totient(d: int) -> int:
    return sum(1 for k in range(1, d + 1) if gcd(k, d) == 1)


class CycContext:
    """Field data for one order d; obtain instances through :func:`context`."""

    __slots__ = ("d", "phi", "n", "_reduce", "_zeta", "_roots")

    def __init__(self, d: int):
        if d < 2:
            raise InvalidParameter(f"d must be >= 2, got {d}")
        self.d = d
        self.phi = cyclotomic_poly(d)
        self.n = len(self.phi) - 1
        assert self.n == totient(d)
        n = self.n
        # _reduce[k] = x^k mod Phi_d for 0 <= k <= 2n - 2
        table = []
        cur = [0] * n
        cur[0] = 1
        for _ in range(max(2 * n - 1, 1)):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for t in range(n):
                    cur[t] -= top * self.phi[t]
        self._reduce = tuple(table)
        self._zeta = tuple(self._power_vector(m) for m in range(d))
        self._roots = tuple(cmath.exp(2j * math.pi * k / d) for k in range(n))

    def _power_vector(self, m: int) -> tuple[int, ...]:
        # x^m mod Phi_d for 0 <= m < d by repeated shifting
        cur = [0] * self.n
        cur[0] = 1
        for _ in range(m):
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for t in range(self.n):
                    cur[t] -= top * self.phi[t]
        return tuple(cur)

    def __repr__(self) -> str:
        return f"CycContext(d={self.d})"

    # constructors

    def _raw(self, num, den: int = 1) -> CycNumber:
        return CycNumber._make(self, num, den)

    @property
    def zero(self) -> CycNumber:
        return self._raw((0,) * self.n)

    @property
    def one(self) -> CycNumber:
        return self.scalar(1)

    def scalar(self, q) -> CycNumber:
        q = Fraction(q)
        return self._raw((q.numerator,) + (0,) * (self.n - 1), q.denominator)

    def __call__(self, value) -> CycNumber:
        if isinstance(value, CycNumber):
            _check(self, value.ctx)
            return value
        return self.scalar(value)

    def from_coeffs(self, coeffs) -> CycNumber:
        """Element with the given power-basis coefficients (any length; reduced)."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [c.numerator * (den // c.denominator) for c in fr]
        return self._raw(self._reduce_long(ints), den)

    def _reduce_long(self, ints: list[int]) -> list[int]:
        n = self.n
        out = [0] * n
        for k, c in enumerate(ints):
            if not c:
                continue
            if k < len(self._reduce):
                row = self._reduce[k]
            else:
                row = self._zeta[k % self.d]
            for t in range(n):
                if row[t]:
                    out[t] += c * row[t]
        return out

    def zeta_pow(self, m: int) -> CycNumber:
        return self._raw(self._zeta[m % self.d])

    @property
    def zeta(self) -> CycNumber:
        return self.zeta_pow(1)

    def sigma(self, i: int) -> CycNumber:
        """The partial geometric sum 1 + zeta + ... + zeta^i."""
        if not 0 <= i <= self.d - 1:
            raise InvalidParameter(f"sigma index {i} outside 0..{self.d - 1}")
        acc = [0] * self.n
        for r in range(i + 1):
            for t, c in enumerate(self._zeta[r]):
                acc[t] += c
        out = self._raw(acc)
        if i < self.d - 1:
            assert out, f"sigma({i}) vanished for d={self.d}"
        return out


@lru_cache(maxsize=None)
def context(d: int) -> CycContext:
    """The shared, immutable context for Q(zeta_d)."""
    return CycContext(d)


def _check(a: CycContext, b: CycContext) -> None:
    if a is not b and a.d != b.d:
        raise ContextMismatch(f"Q(zeta_{a.d}) vs Q(zeta_{b.d})")


class CycNumber:
    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx: CycContext, num, den: int = 1):
        red = ctx._reduce_long(list(num)) if len(num) != ctx.n else list(num)
        obj = CycNumber._make(ctx, red, den)
        self.ctx, self.num, self.den = obj.ctx, obj.num, obj.den

    @staticmethod
    def _make(ctx: CycContext, num, den: int) -> CycNumber:
        if den == 0:
            raise DivisionByZero("zero denominator")
        if den < 0:
            num = [-c for c in num]
            den = -den
        g = den
        for c in num:
            if g == 1:
                break
            g = gcd(g, c)
        if g > 1:
            num = [c // g for c in num]
            den //= g
        obj = object.__new__(CycNumber)
        obj.ctx = ctx
        obj.num = tuple(num)
        obj.den = den
        return obj

    def _coerce(self, other) -> CycNumber | None:
        if isinstance(other, CycNumber):
            _check(self.ctx, other.ctx)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.scalar(other)
        return None

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def __bool__(self) -> bool:
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.den == o.den and self.num == o.num

    def __hash__(self) -> int:
        return hash((self.ctx.d, self.num, self.den))

    def __neg__(self) -> CycNumber:
        return CycNumber._make(self.ctx, [-c for c in self.num], self.den)

    def __add__(self, other) -> CycNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return CycNumber._make(self.ctx, [a + b for a, b in zip(self.num, o.num)], self.den)
        return CycNumber._make(
            self.ctx, [a * o.den + b * self.den for a, b in zip(self.num, o.num)], self.den * o.den
        )

    __radd__ = __add__

    def __sub__(self, other) -> CycNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> CycNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> CycNumber:
        if isinstance(other, int):
            return CycNumber._make(self.ctx, [c * other for c in self.num], self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = self.ctx.n
        a, b = self.num, o.num
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        table = self.ctx._reduce
        out = list(prod[:n])
        for k in range(n, 2 * n - 1):
            c = prod[k]
            if c:
                row = table[k]
                for t in range(n):
                    if row[t]:
                        out[t] += c * row[t]
        return CycNumber._make(self.ctx, out, self.den * o.den)

    __rmul__ = __mul__

    def galois(self, k: int) -> CycNumber:
        """Image under the automorphism zeta -> zeta^k (gcd(k, d) = 1)."""
        d = self.ctx.d
        acc = [0] * self.ctx.n
        for r, c in enumerate(self.num):
            if c:
                for t, z in enumerate(self.ctx._zeta[(r * k) % d]):
                    acc[t] += c * z
        return CycNumber._make(self.ctx, acc, self.den)

    def inverse(self) -> CycNumber:
        if not self:
            raise DivisionByZero("inverse of zero in Q(zeta_%d)" % self.ctx.d)
        d = self.ctx.d
        # product of the non-trivial conjugates; self * conj is the (rational) norm
        conj = self.ctx.one
        for k in range(2, d):
            if gcd(k, d) == 1:
                conj = conj * self.galois(k)
        norm = self * conj
        assert norm.is_rational()
        q = Fraction(norm.num[0], norm.den)
        return conj * (1 / q)

    def __truediv__(self, other) -> CycNumber:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            q = Fraction(other)
            return CycNumber._make(self.ctx, [c * q.denominator for c in self.num], self.den * q.numerator)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> CycNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> CycNumber:
        if e < 0:
            return self.inverse() ** (-e)
        out = self.ctx.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def embed_complex(self) -> complex:
        """
        Value at zeta = exp(2 pi i / d) in double precision.

        Each power of zeta is evaluated directly (not by repeated multiplication),
        so the absolute error is at most about (n + 2) * eps * sum(|c_k|), where
        c_k are the power-basis coefficients and eps = 2**-52.
        """
        den = self.den
        return sum((Fraction(c, den).__float__() * z for c, z in zip(self.num, self.ctx._roots) if c), 0j)

    def __str__(self) -> str:
        return "[" + ", ".join(_fmt_frac(c) for c in self.coeffs) + "]"

    def __repr__(self) -> str:
        return f"CycNumber(d={self.ctx.d}, {self})"

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, ctx: CycContext, data) -> CycNumber:
        if len(data) != ctx.n:
            raise ValueError(f"expected {ctx.n} coefficients, got {len(data)}")
        return ctx.from_coeffs(Fraction(x) for x in data)


def _fmt_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_cyc(ctx: CycContext, text: str) -> CycNumber:
    """Inverse of ``str(CycNumber)``: a bracketed list of rationals."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"not a bracketed cyclotomic literal: {text!r}")
    parts = [p for p in body[1:-1].split(",") if p.strip()]
    if len(parts) != ctx.n:
        raise ValueError(f"expected {ctx.n} coefficients in {text!r}")
    return ctx.from_coeffs(Fraction(p.strip()) for p in parts)


def field_arith(a: CycNumber, b: CycNumber, op: str) -> CycNumber:
    _check(a.ctx, b.ctx)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def zeta_pow(d: int, m: int) -> CycNumber:
    return context(d).zeta_pow(m)


def sigma(d: int, i: int) -> CycNumber:
    return context(d).sigma(i)


def embed_complex(a: CycNumber, precision: int | None = None):
    """Complex value of ``a``; with ``precision`` (decimal digits) an mpmath value."""
    if precision is None or precision <= 15:
        return a.embed_complex()
    import mpmath

    with mpmath.workdps(precision):
        d = a.ctx.d
        return mpmath.fsum(
            mpmath.mpf(c.numerator) / c.denominator * mpmath.expjpi(mpmath.mpf(2 * k) / d)
            for k, c in enumerate(a.coeffs)
            if c
        )
