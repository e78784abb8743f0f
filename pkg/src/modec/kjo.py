"""Group ring K[G] over the rationals, its fraction field, and content.

Exponents live in the eventually-constant group of :mod:`modec.lgroup`.
Content of a nonzero group-ring element is the lattice meet of its
exponents; it is additive under multiplication, which is what makes the
nonnegative-content fractions a Bezout domain.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, Mapping, Tuple

from .errors import DivisionByZero, ZeroElement
from .lgroup import ZERO, GroupElement, g_add, g_meet, g_neg


class GroupRingElement:
    """Finite formal sum of ``k * X^g``; immutable, terms sorted by exponent."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[GroupElement, Fraction] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[GroupElement, Fraction] = {}
        for g, k in items:
            if not isinstance(k, Fraction):
                k = Fraction(k)
            acc[g] = acc[g] + k if g in acc else k
        self.terms: Tuple[Tuple[GroupElement, Fraction], ...] = tuple(
            sorted((g, k) for g, k in acc.items() if k != 0))
        self._hash = None

    @classmethod
    def monomial(cls, exponent: GroupElement, coeff=1) -> "GroupRingElement":
        return cls([(exponent, Fraction(coeff))])

    @classmethod
    def constant(cls, k) -> "GroupRingElement":
        return cls([(ZERO, Fraction(k))])

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __add__(self, other):
        return rr_add(self, other)

    def __sub__(self, other):
        return rr_add(self, rr_neg(other))

    def __neg__(self):
        return rr_neg(self)

    def __mul__(self, other):
        return rr_mul(self, other)

    def __str__(self):
        return format_group_ring(self)

    def __repr__(self):
        return f"GroupRingElement({self})"


def rr_add(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return GroupRingElement(a.terms + b.terms)


def rr_neg(a: GroupRingElement) -> GroupRingElement:
    return GroupRingElement([(g, -k) for g, k in a.terms])


def rr_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    if a.terms == RR_ONE_TERMS:
        return b
    if b.terms == RR_ONE_TERMS:
        return a
    return GroupRingElement([(g_add(g, h), k * j) for g, k in a.terms for h, j in b.terms])


def rr_shift(a: GroupRingElement, exponent: GroupElement, scale=1) -> GroupRingElement:
    """Multiply by ``scale * X^exponent``."""
    scale = Fraction(scale)
    return GroupRingElement([(g_add(g, exponent), k * scale) for g, k in a.terms])


def content_poly(a: GroupRingElement) -> GroupElement:
    if a.is_zero():
        raise ZeroElement("content of the zero element is undefined")
    return reduce(g_meet, (g for g, _ in a.terms))


def _format_coeff_term(k: Fraction, g: GroupElement) -> str:
    mono = f"X^{g}"
    if g == ZERO:
        return str(k)
    if k == 1:
        return mono
    return f"{k}*{mono}"


def format_group_ring(a: GroupRingElement) -> str:
    if a.is_zero():
        return "0"
    out = []
    for g, k in a.terms:
        sign = "-" if k < 0 else "+"
        body = _format_coeff_term(abs(k), g)
        if not out:
            out.append(("-" if k < 0 else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


RR_ZERO = GroupRingElement()
RR_ONE = GroupRingElement.constant(1)
RR_ONE_TERMS = RR_ONE.terms


class FractionElement:
    """Quotient ``num/den`` in the fraction field of K[G].

    No reduced form exists in general; equality is by cross-multiplication.
    A light normalization keeps sizes down: a monomial denominator is
    absorbed into the numerator, and otherwise the denominator is shifted to
    content zero with leading coefficient one.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: GroupRingElement, den: GroupRingElement = RR_ONE):
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            num, den = RR_ZERO, RR_ONE
        elif den.is_monomial():
            (g, k), = den.terms
            num, den = rr_shift(num, g_neg(g), 1 / k), RR_ONE
        else:
            shift = g_neg(content_poly(den))
            lead = den.terms[0][1]
            num = rr_shift(num, shift, 1 / lead)
            den = rr_shift(den, shift, 1 / lead)
        self.num = num
        self.den = den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, FractionElement):
            return NotImplemented
        return fr_eq(self, other)

    def __hash__(self):
        # Coarse but consistent with semantic equality.
        if self.is_zero():
            return hash(None)
        return hash(content_fraction(self))

    def __add__(self, other):
        return fr_add(self, other)

    def __sub__(self, other):
        return fr_add(self, fr_neg(other))

    def __neg__(self):
        return fr_neg(self)

    def __mul__(self, other):
        return fr_mul(self, other)

    def __truediv__(self, other):
        return fr_div(self, other)

    def __str__(self):
        return format_fraction(self)

    def __repr__(self):
        return f"FractionElement({self})"


def fr_make(num: GroupRingElement, den: GroupRingElement = RR_ONE) -> FractionElement:
    return FractionElement(num, den)


def fr_add(a: FractionElement, b: FractionElement) -> FractionElement:
    if a.den == b.den:
        return FractionElement(a.num + b.num, a.den)
    return FractionElement(a.num * b.den + b.num * a.den, a.den * b.den)


def fr_neg(a: FractionElement) -> FractionElement:
    return FractionElement(rr_neg(a.num), a.den)


def fr_mul(a: FractionElement, b: FractionElement) -> FractionElement:
    return FractionElement(a.num * b.num, a.den * b.den)


def fr_div(a: FractionElement, b: FractionElement) -> FractionElement:
    if b.is_zero():
        raise DivisionByZero("division by zero fraction")
    return FractionElement(a.num * b.den, a.den * b.num)


def fr_eq(a: FractionElement, b: FractionElement) -> bool:
    if a.den == b.den:
        return a.num == b.num
    if a.is_zero() or b.is_zero() or content_fraction(a) != content_fraction(b):
        return False
    return a.num * b.den == b.num * a.den


def content_fraction(a: FractionElement) -> GroupElement:
    if a.is_zero():
        raise ZeroElement("content of zero is undefined")
    return g_add(content_poly(a.num), g_neg(content_poly(a.den)))


def format_fraction(a: FractionElement) -> str:
    if a.den == RR_ONE:
        return format_group_ring(a.num)
    return f"({format_group_ring(a.num)})/({format_group_ring(a.den)})"


FR_ZERO = FractionElement(RR_ZERO)
FR_ONE = FractionElement(RR_ONE)


def fr_monomial(exponent: GroupElement, coeff=1) -> FractionElement:
    return FractionElement(GroupRingElement.monomial(exponent, coeff))
