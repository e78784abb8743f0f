"""Dense univariate polynomials over the rationals."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Tuple

from .errors import DivisionByZero


class Poly:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        c = [k if isinstance(k, Fraction) else Fraction(k) for k in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(c)
        self._hash = None

    @classmethod
    def const(cls, k) -> "Poly":
        return cls([k])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    def __neg__(self) -> "Poly":
        return Poly(-k for k in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    def scale(self, k) -> "Poly":
        k = Fraction(k)
        return Poly(c * k for c in self.coeffs)

    def __pow__(self, n: int) -> "Poly":
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other: "Poly"):
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        return _divmod(self, other)

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def monic(self) -> "Poly":
        if self.is_zero() or self.coeffs[-1] == 1:
            return self
        return self.scale(1 / self.lead())

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self})"


@lru_cache(maxsize=65536)
def _divmod(a: Poly, b: Poly):
    rem = list(a.coeffs)
    q = [Fraction(0)] * max(len(rem) - len(b.coeffs) + 1, 0)
    lead = b.lead()
    d = b.degree
    for i in range(len(rem) - 1, d - 1, -1):
        k = rem[i] / lead
        if k:
            q[i - d] = k
            for j, c in enumerate(b.coeffs):
                rem[i - d + j] -= k * c
    return Poly(q), Poly(rem)


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def _monomial_text(k: Fraction, i: int) -> str:
    var = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
    if i == 0:
        return str(k)
    if k == 1:
        return var
    return f"{k}*{var}"


def format_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        k = p.coeffs[i]
        if k == 0:
            continue
        body = _monomial_text(abs(k), i)
        if not parts:
            parts.append(("-" if k < 0 else "") + body)
        else:
            parts.append((" - " if k < 0 else " + ") + body)
    return "".join(parts)


@lru_cache(maxsize=65536)
def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, divmod(a, b)[1]
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """Return ``(g, u, v)`` with ``u*a + v*b = g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return ZERO, ONE, ZERO
    k = 1 / r0.lead()
    return r0.scale(k), s0.scale(k), t0.scale(k)
