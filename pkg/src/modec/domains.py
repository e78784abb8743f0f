"""Effective Bezout domains: the KJO domain and the rational polynomial ring.

Both instances share one contract (equality, ring operations,
divisibility, canonical gcd/lcm, extended gcd) and the algorithms built
on it: gamma, Tuganbaev triples, the radical relation and membership of
elements in concrete prime ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, List, Optional, Sequence, Tuple

from . import kjo, qxpoly
from .errors import (BothZero, IdentityViolation, InstanceMismatch, NotDivisible,
                     NotInRing, UnknownFactorization)
from .kjo import FR_ONE, FR_ZERO, FractionElement, content_fraction, fr_monomial
from .lgroup import (ZERO as G_ZERO, GroupElement, g_join, g_leq, g_meet, g_scale,
                     g_support, is_nonnegative)
from .qxpoly import Poly


# -- prime descriptors ------------------------------------------------------

@dataclass(frozen=True)
class ZeroPrime:
    def __str__(self):
        return "0"


@dataclass(frozen=True)
class Coord:
    i: int

    def __str__(self):
        return f"Coord({self.i})"


@dataclass(frozen=True)
class Tail:
    def __str__(self):
        return "Tail"


@dataclass(frozen=True)
class Irreducible:
    p: Poly

    def __str__(self):
        return f"({self.p})"


ZERO_PRIME = ZeroPrime()
TAIL = Tail()


@dataclass(frozen=True)
class TuganbaevTriple:
    alpha: object
    r: object
    s: object


# -- shared contract ----------------------------------------------------------

class BezoutDomain:
    name = "abstract"
    residue_fields_infinite = True
    krull_dimension_one = True

    zero: object
    one: object

    # ring operations
    def eq(self, a, b) -> bool:
        return a == b

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def product(self, elems: Iterable):
        return reduce(self.mul, elems, self.one)

    def gcd_fold(self, elems: Iterable):
        return reduce(self.gcd, elems, self.zero)

    # derived algorithms
    def gamma(self, a, b):
        if self.is_zero(b):
            return self.one
        if self.is_zero(a):
            return self.zero
        return self.div_exact(a, self.gcd(a, b))

    @lru_cache(maxsize=8192)
    def tuganbaev(self, a, b) -> TuganbaevTriple:
        """Witnesses ``a*alpha = b*r`` and ``b*(alpha - 1) = a*s``."""
        if self.is_zero(a):
            t = (self.one, self.zero, self.zero)
        elif self.is_zero(b):
            t = (self.zero, self.zero, self.zero)
        elif self.divides(b, a):
            t = (self.one, self.div_exact(a, b), self.zero)
        elif self.divides(a, b):
            t = (self.zero, self.zero, self.neg(self.div_exact(b, a)))
        else:
            g, u, v = self.xgcd(a, b)
            a1, b1 = self.div_exact(a, g), self.div_exact(b, g)
            t = (v * b1, a1 * v, self.neg(u * b1))
        triple = TuganbaevTriple(*t)
        self.check_tuganbaev(a, b, triple)
        return triple

    def check_tuganbaev(self, a, b, t: TuganbaevTriple):
        if not (a * t.alpha == b * t.r and b * (t.alpha - self.one) == a * t.s):
            raise IdentityViolation(f"Tuganbaev identities fail for ({a}, {b})")

    def leq_p(self, a, b, prime) -> bool:
        return not self.prime_contains(prime, self.gamma(a, b))

    def element_primes(self, elems: Sequence) -> List:
        return self.relevant_primes(elems)

    def __repr__(self):
        return f"<{self.name} domain>"


# -- the Kaplansky-Jaffard-Ohm domain -------------------------------------------

class KJODomain(BezoutDomain):
    """Nonnegative-content fractions over Q[G], G the eventually constant sequences."""

    name = "kjo"
    element_type = FractionElement
    zero = FR_ZERO
    one = FR_ONE

    def element(self, value: FractionElement) -> FractionElement:
        if not value.is_zero() and not is_nonnegative(content_fraction(value)):
            raise NotInRing(f"{value} has negative content; it is not in R")
        return value

    def content(self, a: FractionElement) -> GroupElement:
        return content_fraction(a)

    def is_unit(self, a) -> bool:
        return not a.is_zero() and content_fraction(a) == G_ZERO

    def divides(self, a, b) -> bool:
        if a.is_zero():
            return b.is_zero()
        if b.is_zero():
            return True
        return g_leq(content_fraction(a), content_fraction(b))

    def div_exact(self, a, b):
        if not self.divides(b, a):
            raise NotDivisible(f"{b} does not divide {a}")
        if a.is_zero():
            return self.zero
        return a / b

    def canonical(self, a):
        return self.zero if a.is_zero() else fr_monomial(content_fraction(a))

    def gcd(self, a, b):
        if a.is_zero():
            return self.canonical(b)
        if b.is_zero():
            return self.canonical(a)
        return fr_monomial(g_meet(content_fraction(a), content_fraction(b)))

    def lcm(self, a, b):
        if a.is_zero() or b.is_zero():
            return self.zero
        return fr_monomial(g_join(content_fraction(a), content_fraction(b)))

    @lru_cache(maxsize=8192)
    def xgcd(self, a, b):
        if a.is_zero() and b.is_zero():
            raise BothZero("xgcd(0, 0)")
        g = self.gcd(a, b)
        if b.is_zero():
            u, v = g / a, self.zero
        elif a.is_zero():
            u, v = self.zero, g / b
        else:
            a1, b1 = a / g, b / g
            xa = fr_monomial(content_fraction(a1))
            xb = fr_monomial(content_fraction(b1))
            alpha = xb / (xa + xb)
            v = alpha / b1
            u = (self.one - alpha) / a1
        if not u * a + v * b == g:
            raise IdentityViolation(f"Bezout identity fails for ({a}, {b})")
        return g, u, v

    # radical relation, three ways
    def rad_member(self, a, b) -> bool:
        return self.rad_member_support(a, b)

    def rad_member_scaling(self, a, b) -> bool:
        if b.is_zero():
            return a.is_zero()
        if a.is_zero():
            return True
        ca, cb = content_fraction(a), content_fraction(b)
        n = max(1, max(cb.values()))
        return g_leq(cb, g_scale(n, ca))

    def rad_member_support(self, a, b) -> bool:
        if b.is_zero():
            return a.is_zero()
        if a.is_zero():
            return True
        return g_support(content_fraction(b)).issubset(g_support(content_fraction(a)))

    def prime_contains(self, prime, a) -> bool:
        if isinstance(prime, Irreducible):
            raise InstanceMismatch("polynomial prime used with the KJO domain")
        if a.is_zero():
            return True
        if isinstance(prime, ZeroPrime):
            return False
        c = content_fraction(a)
        if isinstance(prime, Coord):
            return c.coord(prime.i) > 0
        if isinstance(prime, Tail):
            return c.tail > 0
        raise InstanceMismatch(f"unknown prime {prime!r}")

    def valuation(self, prime, a) -> Optional[int]:
        """Value of ``a`` at a nonzero prime; ``None`` stands for zero."""
        if a.is_zero():
            return None
        c = content_fraction(a)
        if isinstance(prime, Coord):
            return c.coord(prime.i)
        if isinstance(prime, Tail):
            return c.tail
        raise InstanceMismatch(f"no valuation at {prime}")

    def relevant_primes(self, elems: Sequence) -> List:
        contents = [content_fraction(e) for e in elems if not e.is_zero()]
        width = max((len(c.prefix) for c in contents), default=0)
        coords = [Coord(i) for i in range(width) if any(c.coord(i) > 0 for c in contents)]
        tail = [TAIL] if any(c.tail > 0 for c in contents) else []
        return [ZERO_PRIME] + coords + tail

    def spare_maximal(self, elems: Sequence):
        return TAIL

    def assoc_key(self, a):
        return None if a.is_zero() else content_fraction(a)

    def format(self, a) -> str:
        return kjo.format_fraction(a)


# -- Q[x] ---------------------------------------------------------------------

DEFAULT_POOL: Tuple[Poly, ...] = (
    qxpoly.X,
    Poly([-1, 1]),
    Poly([1, 1]),
    Poly([1, 0, 1]),
    Poly([-2, 0, 1]),
    Poly([2, 1]),
)


class PolyDomain(BezoutDomain):
    """Q[x]; prime enumeration relies on a declared pool of irreducibles."""

    name = "qx"
    element_type = Poly
    zero = qxpoly.ZERO
    one = qxpoly.ONE

    def __init__(self, pool: Sequence[Poly] = DEFAULT_POOL):
        self.pool = tuple(p.monic() for p in pool)

    def element(self, value: Poly) -> Poly:
        return value

    def is_unit(self, a) -> bool:
        return not a.is_zero() and a.degree == 0

    def divides(self, a, b) -> bool:
        if a.is_zero():
            return b.is_zero()
        return divmod(b, a)[1].is_zero()

    def div_exact(self, a, b):
        if not self.divides(b, a):
            raise NotDivisible(f"{b} does not divide {a}")
        if a.is_zero():
            return self.zero
        return divmod(a, b)[0]

    def canonical(self, a):
        return a.monic()

    def gcd(self, a, b):
        return qxpoly.poly_gcd(a, b)

    def lcm(self, a, b):
        if a.is_zero() or b.is_zero():
            return self.zero
        return divmod(a * b, self.gcd(a, b))[0].monic()

    @lru_cache(maxsize=8192)
    def xgcd(self, a, b):
        if a.is_zero() and b.is_zero():
            raise BothZero("xgcd(0, 0)")
        g, u, v = qxpoly.poly_xgcd(a, b)
        if not u * a + v * b == g:
            raise IdentityViolation(f"Bezout identity fails for ({a}, {b})")
        return g, u, v

    def squarefree_part(self, b: Poly) -> Poly:
        return divmod(b, qxpoly.poly_gcd(b, b.derivative()))[0]

    def rad_member(self, a, b) -> bool:
        if b.is_zero():
            return a.is_zero()
        if a.is_zero():
            return True
        return self.divides(self.squarefree_part(b), a)

    def prime_contains(self, prime, a) -> bool:
        if isinstance(prime, (Coord, Tail)):
            raise InstanceMismatch("KJO prime used with Q[x]")
        if a.is_zero():
            return True
        if isinstance(prime, ZeroPrime):
            return False
        if isinstance(prime, Irreducible):
            return self.divides(prime.p, a)
        raise InstanceMismatch(f"unknown prime {prime!r}")

    def valuation(self, prime, a) -> Optional[int]:
        if a.is_zero():
            return None
        if not isinstance(prime, Irreducible):
            raise InstanceMismatch(f"no valuation at {prime}")
        n = 0
        while True:
            q, r = divmod(a, prime.p)
            if not r.is_zero():
                return n
            a, n = q, n + 1

    def pool_factors(self, a: Poly) -> List[Poly]:
        """Pool irreducibles dividing ``a``; raises if ``a`` leaves the pool."""
        found = []
        rest = a
        for p in self.pool:
            hit = False
            while True:
                q, r = divmod(rest, p)
                if not r.is_zero():
                    break
                rest, hit = q, True
            if hit:
                found.append(p)
        if rest.degree > 0:
            raise UnknownFactorization(f"{a} is not a product of pool irreducibles")
        return found

    def relevant_primes(self, elems: Sequence) -> List:
        hits = set()
        for e in elems:
            if not e.is_zero():
                hits.update(self.pool_factors(e))
        return [ZERO_PRIME] + [Irreducible(p) for p in self.pool if p in hits]

    def spare_maximal(self, elems: Sequence):
        for p in self.pool:
            if not any(not e.is_zero() and self.divides(p, e) for e in elems):
                return Irreducible(p)
        return Irreducible(Poly([-1000003, 1]))

    def assoc_key(self, a):
        return None if a.is_zero() else a.monic()

    def format(self, a) -> str:
        return qxpoly.format_poly(a)


KJO = KJODomain()
QX = PolyDomain()


def domain_of(elem) -> BezoutDomain:
    if isinstance(elem, FractionElement):
        return KJO
    if isinstance(elem, Poly):
        return QX
    raise InstanceMismatch(f"{elem!r} is not a domain element")


def get_domain(name: str) -> BezoutDomain:
    try:
        return {"kjo": KJO, "qx": QX}[name]
    except KeyError:
        raise InstanceMismatch(f"unknown domain {name!r}") from None


# Module-level spellings of the contract; the instance follows the element type.

def divides(a, b) -> bool:
    return domain_of(a).divides(a, b)


def div_exact(a, b):
    return domain_of(a).div_exact(a, b)


def gcd_canon(a, b):
    return domain_of(a).gcd(a, b)


def lcm_canon(a, b):
    return domain_of(a).lcm(a, b)


def xgcd(a, b):
    return domain_of(a).xgcd(a, b)


def gamma(a, b):
    return domain_of(a).gamma(a, b)


def tuganbaev(a, b) -> TuganbaevTriple:
    return domain_of(a).tuganbaev(a, b)


def rad_member(a, b) -> bool:
    return domain_of(a).rad_member(a, b)


def is_unit(a) -> bool:
    return domain_of(a).is_unit(a)


def prime_contains(prime, a) -> bool:
    return domain_of(a).prime_contains(prime, a)


def relevant_primes(elems: Sequence) -> List:
    elems = list(elems)
    if not elems:
        return [ZERO_PRIME]
    return domain_of(elems[0]).relevant_primes(elems)
