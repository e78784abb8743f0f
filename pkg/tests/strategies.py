"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from modec.kjo import FractionElement, GroupRingElement
from modec.lgroup import canon
from modec.qxpoly import Poly

WIDTH = 4

small = st.integers(-3, 3)


@st.composite
def group_elements(draw, lo=-3, hi=3, width=WIDTH):
    prefix = draw(st.lists(st.integers(lo, hi), max_size=width))
    return canon(prefix, draw(st.integers(lo, hi)))


nonneg_groups = group_elements(lo=0, hi=3)

coefficients = st.builds(Fraction, st.integers(-10, 10).filter(bool), st.integers(1, 10))


@st.composite
def ring_elements(draw, max_terms=4, nonzero=True):
    n = draw(st.integers(1 if nonzero else 0, max_terms))
    terms = {}
    for _ in range(n):
        terms[draw(group_elements(0, 3))] = draw(coefficients)
    return GroupRingElement(terms)


@st.composite
def kjo_elements(draw, allow_zero=True):
    """Elements of R: nonnegative exponents over a content-zero denominator."""
    if allow_zero and draw(st.integers(0, 9)) == 0:
        return FractionElement(GroupRingElement())
    num = draw(ring_elements(max_terms=3))
    if draw(st.booleans()):
        return FractionElement(num)
    den = GroupRingElement.constant(draw(coefficients)) + GroupRingElement.monomial(draw(nonneg_groups))
    if den.is_zero():
        return FractionElement(num)
    return FractionElement(num, den)


@st.composite
def kjo_fractions(draw):
    return FractionElement(draw(ring_elements(max_terms=3)), draw(ring_elements(max_terms=3)))


POOL_FACTORS = [Poly([0, 1]), Poly([-1, 1]), Poly([1, 1]), Poly([1, 0, 1])]


@st.composite
def pool_polys(draw, allow_zero=True):
    """Products of pool primes times a nonzero constant, so factorizations are known."""
    if allow_zero and draw(st.integers(0, 9)) == 0:
        return Poly()
    p = Poly.const(draw(st.sampled_from([1, -1, 2, Fraction(1, 3)])))
    for f in POOL_FACTORS:
        for _ in range(draw(st.integers(0, 2))):
            p = p * f
    return p


@st.composite
def polys(draw, max_degree=4):
    return Poly(draw(st.lists(st.integers(-5, 5), max_size=max_degree + 1)))


def plain_atoms(elems):
    from modec.pp import BOT, TOP, Ann, Div
    return st.one_of(st.builds(Div, elems), st.builds(Ann, elems), st.sampled_from([TOP, BOT]))



def left_atoms(elems):
    """Atoms allowed in a conjunction on the left of a pair."""
    from modec.pp import DualPair
    return st.one_of(plain_atoms(elems), st.builds(DualPair, elems, elems))


def right_atoms(elems):
    """Atoms allowed in a sum on the right of a pair."""
    from modec.pp import DivMul
    return st.one_of(plain_atoms(elems), st.builds(DivMul, elems, elems))


def open_pairs(left, right, max_parts=2, max_atoms=2):
    from modec.pp import OpenPair
    def side(atoms):
        group = st.lists(atoms, min_size=1, max_size=max_atoms).map(tuple)
        return st.lists(group, min_size=1, max_size=max_parts).map(tuple)
    return st.builds(OpenPair, side(left), side(right))


def simple_pairs(left, right, max_atoms=2):
    from modec.pp import SimplePair
    def group(atoms):
        return st.lists(atoms, min_size=1, max_size=max_atoms).map(tuple)
    return st.builds(SimplePair, group(left), group(right))
