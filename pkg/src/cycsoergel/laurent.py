"""Laurent polynomials in v with integer coefficients, Z[v, v^-1]."""
from __future__ import annotations

import re


class LaurentInt:
    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self.c = {e: k for e, k in (coeffs or {}).items() if k}

    @classmethod
    def _wrap(cls, c: dict) -> LaurentInt:
        obj = object.__new__(cls)
        obj.c = c
        return obj

    @classmethod
    def v(cls, e: int = 1) -> LaurentInt:
        return cls({e: 1})

    @classmethod
    def quantum(cls, j: int) -> LaurentInt:
        """[v]_j = v^-j + v^(-j+2) + ... + v^j."""
        return cls({e: 1 for e in range(-j, j + 1, 2)})

    @staticmethod
    def _lift(other):
        if isinstance(other, LaurentInt):
            return other
        if isinstance(other, int):
            return LaurentInt(other)
        return None

    def __bool__(self) -> bool:
        return bool(self.c)

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self) -> int:
        return hash(frozenset(self.c.items()))

    def __add__(self, other) -> LaurentInt:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.c)
        for e, k in o.c.items():
            s = out.get(e, 0) + k
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentInt._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentInt:
        return LaurentInt._wrap({e: -k for e, k in self.c.items()})

    def __sub__(self, other) -> LaurentInt:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> LaurentInt:
        return (-self) + other

    def __mul__(self, other) -> LaurentInt:
        if isinstance(other, int):
            return LaurentInt({e: k * other for e, k in self.c.items()})
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, k1 in self.c.items():
            for e2, k2 in o.c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + k1 * k2
        return LaurentInt(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentInt:
        if n < 0:
            if len(self.c) != 1 or next(iter(self.c.values())) not in (1, -1):
                raise ValueError("only monomial units are invertible")
            (e, k), = self.c.items()
            return LaurentInt({e * n: k ** -n})
        out = LaurentInt(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, n: int) -> LaurentInt:
        """Multiply by v^n."""
        return LaurentInt._wrap({e + n: k for e, k in self.c.items()})

    def bar(self) -> LaurentInt:
        """The involution v -> v^-1."""
        return LaurentInt._wrap({-e: k for e, k in self.c.items()})

    def evaluate(self, v):
        return sum((k * v ** e for e, k in self.c.items()), 0 * v)

    def items(self):
        return sorted(self.c.items())

    def __str__(self) -> str:
        if not self.c:
            return "0"
        out = ""
        for e, k in sorted(self.c.items()):
            sign = "-" if k < 0 else "+"
            mag = abs(k)
            if e == 0:
                body = str(mag)
            else:
                mono = "v" if e == 1 else f"v^{e}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not out:
                out = ("-" if sign == "-" else "") + body
            else:
                out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentInt({str(self)!r})"


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(v(?:\^(-?\d+))?)?\s*$")


def parse_laurent(text: str) -> LaurentInt:
    """Inverse of ``str(LaurentInt)``, e.g. ``"v^-2 + 2 + v^2"``."""
    s = text.strip()
    if s == "0":
        return LaurentInt()
    # split on binary +/- (a sign that follows a space), keeping the sign
    pieces = re.split(r"\s+(?=[+-]\s)", s)
    out: dict[int, int] = {}
    for piece in pieces:
        piece = piece.replace(" ", "")
        m = _TERM.match(piece)
        if not m or not (m.group(2) or m.group(3)):
            raise ValueError(f"bad Laurent term {piece!r} in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            e = int(m.group(4)) if m.group(4) is not None else 1
        else:
            e = 0
        out[e] = out.get(e, 0) + sign * mag
    return LaurentInt(out)


V = LaurentInt.v()
V_INV = LaurentInt.v(-1)
