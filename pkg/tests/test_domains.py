from itertools import product

import pytest
from hypothesis import assume, given, settings, strategies as st

from modec.domains import KJO, QX, TAIL, ZERO_PRIME, Coord, Irreducible
from modec.errors import (BothZero, InstanceMismatch, NotDivisible, NotInRing,
                          UnknownFactorization)
from modec.kjo import FractionElement, GroupRingElement
from modec.lgroup import parse_group_literal as G
from modec.qxpoly import Poly

from strategies import kjo_elements, pool_polys

x = Poly.x()
ONE_P = Poly.const(1)


def X(text, k=1):
    return FractionElement(GroupRingElement.monomial(G(text), k))


def K(k):
    return FractionElement(GroupRingElement.constant(k))


def both(strategy_kjo=kjo_elements(), strategy_qx=pool_polys()):
    return st.one_of(st.tuples(st.just(KJO), strategy_kjo, strategy_kjo),
                     st.tuples(st.just(QX), strategy_qx, strategy_qx))


# examples

def test_units():
    assert KJO.is_unit(K(1) + X("[1;0]"))
    assert not KJO.is_unit(X("[1;0]"))
    assert QX.is_unit(Poly.const(1.5))
    assert not QX.is_unit(x)


def test_membership_in_ring():
    with pytest.raises(NotInRing):
        KJO.element(FractionElement(GroupRingElement.constant(1), X("[1;0]").num))


def test_divides_examples():
    assert KJO.divides(X("[1;0]"), X("[2,1;0]"))
    assert not KJO.divides(X("[2,1;0]"), X("[1;0]"))
    assert QX.divides(x - ONE_P, x * x - ONE_P)
    assert KJO.divides(X("[1;0]"), K(0)) and not KJO.divides(K(0), X("[1;0]"))
    with pytest.raises(NotDivisible):
        QX.div_exact(x, x + ONE_P)


def test_gcd_examples():
    a = X("[1,2;0]") + X("[2,1;0]")
    assert KJO.gcd(a, X("[0,3;1]")) == X("[0,1;0]")
    assert QX.gcd(x * x - ONE_P, x * x - x) == x - ONE_P
    assert QX.gcd(Poly.const(3) * x, Poly()) == x
    assert KJO.gcd(K(0), K(0)).is_zero()


def test_xgcd_examples():
    g, u, v = KJO.xgcd(X("[1;0]"), X("[0,1;0]"))
    inv = FractionElement(GroupRingElement.constant(1), (X("[1;0]") + X("[0,1;0]")).num)
    assert g == K(1) and u == inv and v == inv
    assert QX.xgcd(x, x - ONE_P) == (ONE_P, ONE_P, -ONE_P)
    with pytest.raises(BothZero):
        QX.xgcd(Poly(), Poly())


def test_gamma_examples():
    assert QX.gamma(x * x, x) == x
    assert QX.gamma(x, Poly()) == ONE_P
    assert QX.gamma(Poly(), x).is_zero()
    assert QX.gamma(Poly(), Poly()) == ONE_P


def test_tuganbaev_examples():
    t = QX.tuganbaev(x, x - ONE_P)
    assert (t.alpha, t.r, t.s) == (ONE_P - x, -x, -(x - ONE_P))
    t = QX.tuganbaev(x + ONE_P, x + ONE_P)
    assert (t.alpha, t.r, t.s) == (ONE_P, ONE_P, Poly())
    t = KJO.tuganbaev(X("[1;0]"), X("[0,1;0]"))
    assert t.alpha == X("[0,1;0]") / (X("[1;0]") + X("[0,1;0]"))


def test_rad_examples():
    assert KJO.rad_member(X("[1;0]"), X("[3;0]"))
    assert not QX.rad_member(x, x * (x - ONE_P))
    assert QX.rad_member(Poly(), Poly()) and KJO.rad_member(K(0), K(0))


def test_prime_examples():
    assert KJO.prime_contains(Coord(0), X("[1;0]"))
    assert not KJO.prime_contains(TAIL, X("[1;0]"))
    assert QX.prime_contains(Irreducible(x), Poly())
    with pytest.raises(InstanceMismatch):
        QX.prime_contains(TAIL, x)


def test_relevant_primes_examples():
    assert set(KJO.relevant_primes([X("[1,0,2;0]")])) == {ZERO_PRIME, Coord(0), Coord(2)}
    assert set(KJO.relevant_primes([X("[0;1]")])) == {ZERO_PRIME, TAIL}
    got = set(QX.relevant_primes([x * (x - ONE_P)]))
    assert got == {ZERO_PRIME, Irreducible(x), Irreducible(x - ONE_P)}
    with pytest.raises(UnknownFactorization):
        QX.relevant_primes([x * x + Poly.const(3)])


# properties

@settings(max_examples=400)
@given(both())
def test_bezout_identity(args):
    dom, a, b = args
    assume(not (a.is_zero() and b.is_zero()))
    g, u, v = dom.xgcd(a, b)
    assert u * a + v * b == g
    assert g == dom.gcd(a, b)
    for e in (u, v):
        dom.element(e)


@settings(max_examples=300)
@given(both())
def test_tuganbaev_identities(args):
    dom, a, b = args
    t = dom.tuganbaev(a, b)
    assert a * t.alpha == b * t.r
    assert b * (t.alpha - dom.one) == a * t.s


@given(both())
def test_gcd_laws(args):
    dom, a, b = args
    g, m = dom.gcd(a, b), dom.lcm(a, b)
    assert dom.divides(g, a) and dom.divides(g, b)
    assert dom.divides(a, m) and dom.divides(b, m)
    assert dom.divides(g * m, a * b) and dom.divides(a * b, g * m)


@given(both(), st.sampled_from([0, 1, 2]))
def test_common_divisors_divide_gcd(args, k):
    dom, a, b = args
    c = X("[1,0;1]") if dom is KJO else x + ONE_P
    ck = dom.one
    for _ in range(k):
        a, b, ck = a * c, b * c, ck * c
    assert dom.divides(ck, dom.gcd(a, b))


@given(both())
def test_localization_totality(args):
    dom, a, b = args
    assume(not a.is_zero() and not b.is_zero())
    for p in dom.relevant_primes([a, b]) + [dom.spare_maximal([a, b])]:
        assert not (dom.prime_contains(p, dom.gamma(a, b)) and dom.prime_contains(p, dom.gamma(b, a)))


def _rad_by_primes(dom, a, b):
    """a in rad(b) iff every relevant prime holding b holds a."""
    return all(dom.prime_contains(p, a) for p in dom.relevant_primes([a, b])
               if dom.prime_contains(p, b))


def test_kjo_radical_paths_agree_exhaustively():
    vals = [G(f"[{i},{j};{t}]") for i, j, t in product(range(3), repeat=3)]
    elems = [K(0)] + [X(str(g)) for g in vals]
    for a, b in product(elems, repeat=2):
        r = KJO.rad_member(a, b)
        if not b.is_zero() and not a.is_zero():
            assert r == KJO.rad_member_scaling(a, b) == KJO.rad_member_support(a, b)
        assert r == _rad_by_primes(KJO, a, b)


@given(pool_polys(), pool_polys())
def test_poly_radical_matches_primes(a, b):
    assert QX.rad_member(a, b) == _rad_by_primes(QX, a, b)
