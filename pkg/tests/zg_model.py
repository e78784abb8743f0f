"""Finite semantic model of the indecomposable pure-injectives, for testing only.

Every localization at a listed maximal ideal is a discrete valuation ring,
so the points over it are R/m^n, the Pruefer module E, the completion and
its fraction field.  The global fraction field is one more point.  A
nonzero element of a point has a type ``(i, j)``: it is killed exactly by
valuation ``>= i`` and divisible exactly by valuation ``< j``.  Each pp
atom is decided by the type alone, so a pair ``(phi/psi)`` contains a
point iff some realized type satisfies ``phi`` and not ``psi``.

None of this touches the rewriting code.  Valuations are read straight off
contents (KJO) or by repeated division (polynomials).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from typing import List, Sequence, Tuple

from modec.domains import Coord, Irreducible, TAIL, ZERO_PRIME
from modec.pp import (BOT, TOP, Ann, Div, DivMul, DualPair, OpenPair, SimplePair,
                      WProblemTerm, WSet)
from modec.primes import evaluate

INF = math.inf


@dataclass(frozen=True)
class Point:
    label: str
    maximal: object
    ass: object
    div: object
    types: Tuple[Tuple[float, float], ...]


def _valuation(dom, m, r):
    if r.is_zero():
        return INF
    if m is None:
        return 0
    return dom.valuation(m, r)


def maximal_family(dom, elems: Sequence):
    elems = [e for e in elems if not e.is_zero()]
    if dom.name == "kjo":
        from modec.kjo import content_fraction
        width = max((len(content_fraction(e).prefix) for e in elems), default=0)
        return [Coord(i) for i in range(width + 1)] + [TAIL]
    primes = [p for p in dom.relevant_primes(elems) if isinstance(p, Irreducible)]
    return primes + [dom.spare_maximal(elems)]


def points(dom, elems: Sequence, depth: int = None) -> List[Point]:
    """All model points over the maximal ideals relevant to ``elems``."""
    family = maximal_family(dom, elems)
    vmax = 0
    for m in family:
        for e in elems:
            v = _valuation(dom, m, e)
            if v != INF:
                vmax = max(vmax, v)
    k = depth if depth is not None else 2 * vmax + 3
    out = []
    for m in family:
        for n in range(1, k + 1):
            out.append(Point(f"R/{m}^{n}", m, m, m,
                             tuple((i, n + 1 - i) for i in range(1, n + 1))))
        out.append(Point(f"E({m})", m, m, ZERO_PRIME, tuple((i, INF) for i in range(1, k + 1))))
        out.append(Point(f"hat({m})", m, ZERO_PRIME, m, tuple((INF, j) for j in range(1, k + 1))))
        out.append(Point(f"Q(hat {m})", m, ZERO_PRIME, ZERO_PRIME, ((INF, INF),)))
    out.append(Point("Q(R)", None, ZERO_PRIME, ZERO_PRIME, ((INF, INF),)))
    return out


def atom_holds(dom, atom, m, typ) -> bool:
    i, j = typ
    v = lambda r: _valuation(dom, m, r)
    if atom == TOP:
        return True
    if atom == BOT:
        return False
    if isinstance(atom, Div):
        return v(atom.a) < j
    if isinstance(atom, Ann):
        return v(atom.b) >= i
    if isinstance(atom, DualPair):
        # x = y a with y b = 0: the preimage y has type (i + v(a), j - v(a))
        return v(atom.a) < j and v(atom.b) >= i + v(atom.a)
    if isinstance(atom, DivMul):
        # x d is zero, or has divisibility j + v(d)
        return v(atom.d) >= i or v(atom.c) < j + v(atom.d)
    raise TypeError(atom)


def _phi(dom, phi_sum, m, typ):
    return any(all(atom_holds(dom, a, m, typ) for a in c) for c in phi_sum)


def _psi(dom, psi_conj, m, typ):
    return all(any(atom_holds(dom, a, m, typ) for a in s) for s in psi_conj)


def in_open_pair(dom, pair: OpenPair, pt: Point) -> bool:
    return any(_phi(dom, pair.phi, pt.maximal, t) and not _psi(dom, pair.psi, pt.maximal, t)
               for t in pt.types)


def in_simple_pair(dom, sp: SimplePair, pt: Point) -> bool:
    return in_open_pair(dom, OpenPair((sp.conj,), (sp.summ,)), pt)


def wset_pair(w: WSet) -> SimplePair:
    return SimplePair((Ann(w.lam * w.h),), (Div(w.g), Ann(w.lam)))


def in_term(dom, term: WProblemTerm, pt: Point) -> bool:
    return (in_simple_pair(dom, wset_pair(term.main), pt)
            and evaluate(term.constraint, pt.ass, pt.div))


def pair_elements(pair) -> list:
    atoms = [a for c in pair.phi for a in c] + [a for s in pair.psi for a in s]
    return [getattr(a, f.name) for a in atoms for f in fields(a)]


def inclusion_model(dom, lhs: OpenPair, rhs: Sequence[OpenPair]) -> bool:
    elems = pair_elements(lhs) + [e for p in rhs for e in pair_elements(p)]
    for pt in points(dom, elems):
        if in_open_pair(dom, lhs, pt) and not any(in_open_pair(dom, r, pt) for r in rhs):
            return False
    return True


def wproblem_model(dom, problem, elems: Sequence) -> bool:
    lhs = WProblemTerm(problem.lhs_main, problem.lhs_constraint)
    for pt in points(dom, list(elems)):
        if in_term(dom, lhs, pt) and not any(in_term(dom, t, pt) for t in problem.rhs_terms):
            return False
    return True
