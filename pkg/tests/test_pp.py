import pytest
from hypothesis import given, settings, strategies as st

from modec.domains import KJO, QX
from modec.errors import PreconditionViolation, UnsupportedShape
from modec.kjo import FractionElement, GroupRingElement
from modec.lgroup import parse_group_literal as G
from modec.pp import (BOT, TOP, Ann, Div, DivMul, DualPair, OpenPair, SimplePair,
                      WProblemTerm, WSet, bezout_expand, dagger_decompose, intersect_terms,
                      intersection_split, normal_form, pair_empty_criterion,
                      pair_is_trivially_empty, rewrite_atomic,
                      rw_ann_ann, rw_div_ann, rw_div_div, rw_dual_pair, simplify_pair,
                      split_conj, split_sum, to_wset, whole)
from modec.primes import FALSE, TRUE, evaluate, mem_p, mem_q
from modec.qxpoly import Poly

from strategies import (kjo_elements, left_atoms, open_pairs, plain_atoms, pool_polys,
                        right_atoms, simple_pairs)
from zg_model import in_simple_pair, in_term, pair_elements, points, wset_pair

x = Poly.x()
one = Poly.const(1)
zero = Poly()


def X(text):
    return FractionElement(GroupRingElement.monomial(G(text)))


def sp(f, s):
    return SimplePair((f,), (s,))


def model_points(dom, *pairs):
    elems = [e for p in pairs for e in pair_elements(p)]
    return points(dom, elems)


DOMAINS = st.sampled_from([(QX, pool_polys()), (KJO, kjo_elements())])


@st.composite
def dom_and(draw, make):
    dom, elems = draw(DOMAINS)
    return dom, draw(make(elems))


# structure

def test_dagger_examples():
    a, b, c, d = Div(x), Ann(x), Div(x + one), Ann(x - one)
    pairs = dagger_decompose(OpenPair(((a,), (b,)), ((c,), (d,))))
    assert pairs == (sp(a, c), sp(a, d), sp(b, c), sp(b, d))
    single = OpenPair(((a,),), ((c,),))
    assert dagger_decompose(single) == (sp(a, c),)


@given(open_pairs(plain_atoms(pool_polys()), plain_atoms(pool_polys())))
def test_dagger_cardinality(pair):
    assert len(dagger_decompose(pair)) == len(pair.phi) * len(pair.psi)


def test_intersection_split_display():
    a, b, c, d = x, x * x, x + one, x - one
    got = intersection_split(SimplePair((Div(a), Ann(b)), (Div(c), Ann(d))))
    assert got == (sp(Div(a), Div(c)), sp(Div(a), Ann(d)), sp(Ann(b), Div(c)), sp(Ann(b), Ann(d)))


def test_trivial_simplification():
    assert simplify_pair(sp(Div(one), Ann(zero)), QX) == sp(TOP, TOP)
    assert simplify_pair(sp(Div(zero), Ann(Poly.const(2))), QX) == sp(BOT, BOT)
    got = simplify_pair(SimplePair((Div(one), Ann(x)), (Div(x),)), QX)
    assert got == sp(Ann(x), Div(x))


def test_split_cases_cover_each_position():
    cases = split_conj(SimplePair((Ann(x), Div(x + one)), (Div(x),)))
    assert [c[0] for c in cases] == [sp(Ann(x), Div(x)), sp(Div(x + one), Div(x))]
    assert cases[0][1] == (sp(Ann(x), Div(x + one)),)
    cases = split_sum(SimplePair((Ann(x),), (Div(x), Ann(one + x))))
    assert [c[0] for c in cases] == [sp(Ann(x), Div(x)), sp(Ann(x), Ann(one + x))]


# atomic rewrites

def test_div_div_examples():
    t = rw_div_div(x, x * x, QX)
    assert t.main == WSet(x, zero, zero)
    tri = QX.tuganbaev(x, x * x)
    assert x * tri.alpha == x * x * tri.r and x * x * (tri.alpha - one) == x * tri.s
    assert rw_div_div(x, x, QX).constraint == FALSE
    assert rewrite_atomic(sp(Div(one), Div(x)), QX) == WProblemTerm(whole(QX), mem_q(x))


def test_ann_ann_examples():
    assert rw_ann_ann(x * x, x, QX).main == WSet(x, zero, zero)
    assert rw_ann_ann(x, x, QX).constraint == FALSE
    assert rewrite_atomic(sp(Ann(x), Ann(zero)), QX).is_empty()


def test_div_ann_examples():
    assert rw_div_ann(x, x + one, QX) == WSet(x * (x + one), zero, zero)
    assert rw_div_ann(one, x, QX) == WSet(x, zero, zero)
    assert rw_div_ann(x, zero, QX).is_empty()


def test_to_wset_examples_and_round_trip():
    cases = [
        (sp(TOP, Ann(x)), WProblemTerm(WSet(x, zero, zero), TRUE)),
        (sp(Ann(x), Div(x + one)), WProblemTerm(WSet(one, x, x + one), TRUE)),
        (sp(TOP, BOT), WProblemTerm(whole(QX), TRUE)),
        (sp(Ann(x), BOT), WProblemTerm(whole(QX), mem_p(x))),
        (sp(TOP, Div(x)), WProblemTerm(whole(QX), mem_q(x))),
    ]
    for pair, term in cases:
        assert to_wset(pair, QX) == term
    for pair, term in cases[:3]:
        assert simplify_pair(wset_pair(term.main), QX) == simplify_pair(pair, QX)
    with pytest.raises(UnsupportedShape):
        to_wset(sp(Div(x), Div(x)), QX)


def test_rewrites_on_kjo():
    a, c = X("[1;0]"), X("[0,1;0]")
    for t in (rw_div_div(a, c, KJO), rw_ann_ann(a, c, KJO)):
        assert t.main.is_suffix()


@settings(max_examples=300)
@given(dom_and(lambda e: st.tuples(plain_atoms(e), plain_atoms(e))))
def test_atomic_rewrite_preserves_points(args):
    dom, (f, s) = args
    pair = sp(f, s)
    term = rewrite_atomic(pair, dom)
    for pt in model_points(dom, OpenPair(((f,),), ((s,),))):
        assert in_simple_pair(dom, pair, pt) == in_term(dom, term, pt), pt.label


@settings(max_examples=150)
@given(dom_and(lambda e: st.tuples(st.builds(DualPair, e, e), st.builds(DivMul, e, e))))
def test_dual_pair_rewrite_preserves_points(args):
    dom, (f, s) = args
    pair = sp(f, s)
    out, (c1, c2) = rw_dual_pair(pair, dom)
    for pt in model_points(dom, OpenPair(((f,),), ((s,),))):
        got = (in_simple_pair(dom, out, pt) and evaluate(c1, pt.ass, pt.div)
               and evaluate(c2, pt.ass, pt.div))
        assert in_simple_pair(dom, pair, pt) == got, pt.label


def test_dual_pair_degenerate():
    out, conds = rw_dual_pair(sp(DualPair(one, zero), DivMul(one, one)), QX)
    assert simplify_pair(out, QX).summ == (TOP,) or FALSE in conds


@settings(max_examples=80)
@given(dom_and(lambda e: simple_pairs(left_atoms(e), right_atoms(e))))
def test_expansion_and_normal_form_preserve_points(args):
    dom, pair = args
    expanded = bezout_expand(pair, dom)
    nf = normal_form(expanded, dom)
    if not pair_is_trivially_empty(nf):
        assert len(nf.conj) <= 2 and len(nf.summ) <= 2
    for pt in model_points(dom, OpenPair((pair.conj,), (pair.summ,))):
        inside = in_simple_pair(dom, pair, pt)
        assert inside == in_simple_pair(dom, expanded, pt) == in_simple_pair(dom, nf, pt)


def test_intersection_of_terms():
    s1 = WProblemTerm(WSet(x, zero, zero), TRUE)
    s2 = WProblemTerm(WSet(x + one, zero, zero), mem_p(x))
    got = intersect_terms([s1, s2, WProblemTerm(whole(QX), TRUE)], QX)
    assert got == WProblemTerm(WSet(x * (x + one), zero, zero), mem_p(x))
    prefix = WProblemTerm(WSet(one, x, x), TRUE)
    assert intersect_terms([prefix, WProblemTerm(whole(QX), mem_q(x))], QX).main == prefix.main
    with pytest.raises(UnsupportedShape):
        intersect_terms([prefix, s1], QX)


# emptiness criterion

def test_pair_empty_examples():
    g, h = x, x + one
    assert pair_empty_criterion(one, h, g, one)
    assert not pair_empty_criterion(one, x, x, one)
    assert pair_empty_criterion(zero, x, zero, one)
    assert not pair_empty_criterion(one, zero, zero, one)
    with pytest.raises(PreconditionViolation):
        pair_empty_criterion(x, one, x + one, one)
