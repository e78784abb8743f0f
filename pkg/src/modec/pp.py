"""pp-pairs over a Bezout domain and the rewrites that turn them into W-sets.

An open pair ``(phi/psi)`` has ``phi`` a sum of conjunctions of atoms and
``psi`` a conjunction of sums.  Splitting both gives simple pairs
``(conj / sum)``.  A simple pair is an intersection of atomic pairs.  Each
atomic pair equals one W-set ``(x lam h = 0 / g|x + x lam = 0)`` cut down
by conditions on the associated primes ``P`` (annihilator side) and ``Q``
(divisibility side).

Every function here is pure, so each step can be replayed from its
inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .domains import BezoutDomain, domain_of
from .errors import IdentityViolation, PreconditionViolation, UnsupportedShape
from .primes import FALSE, TRUE, conj, disj, mem_p, mem_q


# -- atoms --------------------------------------------------------------------

def _fmt(r) -> str:
    text = domain_of(r).format(r)
    return f"({text})" if " " in text else text


@dataclass(frozen=True)
class Top:
    def __str__(self):
        return "T"


@dataclass(frozen=True)
class Bot:
    def __str__(self):
        return "Z"


@dataclass(frozen=True)
class Div:
    a: object

    def __str__(self):
        return f"{_fmt(self.a)}|x"


@dataclass(frozen=True)
class Ann:
    b: object

    def __str__(self):
        return f"x.{_fmt(self.b)}=0"


@dataclass(frozen=True)
class DualPair:
    """``exists y (x = y a and y b = 0)``."""

    a: object
    b: object

    def __str__(self):
        return f"dual({_fmt(self.a)},{_fmt(self.b)})"


@dataclass(frozen=True)
class DivMul:
    """``c | x d``."""

    c: object
    d: object

    def __str__(self):
        return f"divmul({_fmt(self.c)},{_fmt(self.d)})"


TOP = Top()
BOT = Bot()


@dataclass(frozen=True)
class OpenPair:
    """``phi``: sum of conjunctions; ``psi``: conjunction of sums."""

    phi: Tuple[Tuple, ...]
    psi: Tuple[Tuple, ...]

    def __str__(self):
        lhs = ", ".join(" & ".join(map(str, c)) for c in self.phi)
        rhs = ", ".join(" + ".join(map(str, s)) for s in self.psi)
        return f"pair({lhs} / {rhs})"


@dataclass(frozen=True)
class SimplePair:
    conj: Tuple
    summ: Tuple

    def __str__(self):
        return f"({' & '.join(map(str, self.conj))} / {' + '.join(map(str, self.summ))})"

    def is_atomic(self) -> bool:
        return len(self.conj) == 1 and len(self.summ) == 1


def simple_pair(phi, psi) -> SimplePair:
    return SimplePair(tuple(phi), tuple(psi))


def open_pair(phi_sum: Sequence[Sequence], psi_conj: Sequence[Sequence]) -> OpenPair:
    return OpenPair(tuple(tuple(c) for c in phi_sum), tuple(tuple(s) for s in psi_conj))


@dataclass(frozen=True)
class WSet:
    """``(x lam h = 0 / g|x + x lam = 0)``; ``lam = 0`` is the empty set."""

    lam: object
    h: object
    g: object

    def __str__(self):
        return f"W({_fmt(self.lam)},{_fmt(self.h)},{_fmt(self.g)})"

    def is_suffix(self) -> bool:
        return self.h.is_zero() and self.g.is_zero()

    def is_prefix(self) -> bool:
        return domain_of(self.lam).is_unit(self.lam)

    def is_empty(self) -> bool:
        return self.lam.is_zero()

    def is_whole(self) -> bool:
        return self.is_prefix() and self.is_suffix()


@dataclass(frozen=True)
class WProblemTerm:
    main: WSet
    constraint: object

    def __str__(self):
        if self.constraint == TRUE:
            return str(self.main)
        return f"{self.main} & [{self.constraint}]"

    def is_empty(self) -> bool:
        return self.main.is_empty() or self.constraint == FALSE


def whole(dom: BezoutDomain) -> WSet:
    return WSet(dom.one, dom.zero, dom.zero)


def empty_term(dom: BezoutDomain) -> WProblemTerm:
    return WProblemTerm(WSet(dom.zero, dom.zero, dom.zero), FALSE)


# -- trivial-formula simplification ---------------------------------------------

def simplify_atom(atom, dom: BezoutDomain):
    if isinstance(atom, Div):
        if dom.is_zero(atom.a):
            return BOT
        return TOP if dom.is_unit(atom.a) else atom
    if isinstance(atom, Ann):
        if dom.is_zero(atom.b):
            return TOP
        return BOT if dom.is_unit(atom.b) else atom
    if isinstance(atom, DualPair):
        a, b = atom.a, atom.b
        if dom.is_zero(a) or dom.is_unit(b):
            return BOT
        if dom.is_zero(b):
            return simplify_atom(Div(a), dom)
        if dom.is_unit(a):
            return simplify_atom(Ann(b), dom)
        return atom
    if isinstance(atom, DivMul):
        c, d = atom.c, atom.d
        if dom.is_unit(c) or dom.is_zero(d):
            return TOP
        if dom.is_zero(c):
            return simplify_atom(Ann(d), dom)
        if dom.is_unit(d):
            return simplify_atom(Div(c), dom)
        return atom
    return atom


def _dedupe(atoms):
    out = []
    for a in atoms:
        if a not in out:
            out.append(a)
    return tuple(out)


def simplify_conj(atoms: Sequence, dom: BezoutDomain) -> Tuple:
    atoms = [simplify_atom(a, dom) for a in atoms]
    if BOT in atoms:
        return (BOT,)
    atoms = _dedupe(a for a in atoms if a != TOP)
    return atoms or (TOP,)


def simplify_sum(atoms: Sequence, dom: BezoutDomain) -> Tuple:
    atoms = [simplify_atom(a, dom) for a in atoms]
    if TOP in atoms:
        return (TOP,)
    atoms = _dedupe(a for a in atoms if a != BOT)
    return atoms or (BOT,)


def simplify_pair(sp: SimplePair, dom: BezoutDomain) -> SimplePair:
    return SimplePair(simplify_conj(sp.conj, dom), simplify_sum(sp.summ, dom))


def pair_is_trivially_empty(sp: SimplePair) -> bool:
    return sp.conj == (BOT,) or sp.summ == (TOP,)


# -- structural splitting ----------------------------------------------------------

def dagger_decompose(pair: OpenPair) -> Tuple[SimplePair, ...]:
    """``(sum_i phi_i / and_j psi_j)`` is the union of the cross pairs ``(phi_i/psi_j)``."""
    return tuple(SimplePair(tuple(c), tuple(s)) for c in pair.phi for s in pair.psi)


def intersection_split(sp: SimplePair) -> Tuple[SimplePair, ...]:
    """A simple pair as the intersection of its atomic pairs."""
    return tuple(SimplePair((f,), (s,)) for f in sp.conj for s in sp.summ)


def split_conj(sp: SimplePair) -> Tuple[Tuple[SimplePair, Tuple[SimplePair, ...]], ...]:
    """Cases for a conjunction on the left: the conjunct realizing the minimum.

    ``(and_k f_k / psi) & W <= U`` iff for every k,
    ``(f_k / psi) & W <= U | union_{l != k} (f_k / f_l)``.
    """
    fs = sp.conj
    if len(fs) == 1:
        return ((sp, ()),)
    return tuple((SimplePair((f,), sp.summ),
                  tuple(SimplePair((f,), (g,)) for j, g in enumerate(fs) if j != k))
                 for k, f in enumerate(fs))


def split_sum(sp: SimplePair) -> Tuple[Tuple[SimplePair, Tuple[SimplePair, ...]], ...]:
    """Cases for a sum on the right: the summand realizing the maximum."""
    ss = sp.summ
    if len(ss) == 1:
        return ((sp, ()),)
    return tuple((SimplePair(sp.conj, (s,)),
                  tuple(SimplePair((t,), (s,)) for j, t in enumerate(ss) if j != k))
                 for k, s in enumerate(ss))


# -- dual pairs and divisibility-of-multiple atoms ----------------------------------

def _as_dual(atom, dom):
    if isinstance(atom, DualPair):
        return atom
    if isinstance(atom, Div):
        return DualPair(atom.a, dom.zero)
    if isinstance(atom, Ann):
        return DualPair(dom.one, atom.b)
    if atom == TOP:
        return DualPair(dom.one, dom.zero)
    raise UnsupportedShape(f"cannot read {atom} as a dual pair")


def _as_divmul(atom, dom):
    if isinstance(atom, DivMul):
        return atom
    if isinstance(atom, Div):
        return DivMul(atom.a, dom.one)
    if isinstance(atom, Ann):
        return DivMul(dom.zero, atom.b)
    if atom == BOT:
        return DivMul(dom.zero, dom.one)
    raise UnsupportedShape(f"cannot read {atom} as a divisibility of a multiple")


def has_prufer_atoms(sp: SimplePair) -> bool:
    return any(isinstance(a, (DualPair, DivMul)) for a in sp.conj + sp.summ)


def rw_dual_pair(sp: SimplePair, dom: BezoutDomain):
    """``(dual(a,b) / divmul(c,d))`` as a simple pair cut by two non-invertibility conditions.

    With ``a alpha = b r``, ``b (alpha - 1) = a s`` and ``d delta = c t``,
    ``c (delta - 1) = d u`` the set is
    ``(a|x & x.s=0 / u|x + x.d=0)`` intersected with the modules on which
    neither ``alpha`` nor ``delta`` acts invertibly.
    """
    if not sp.is_atomic():
        raise UnsupportedShape("dual-pair rewrite needs a single atom on each side")
    dp = _as_dual(sp.conj[0], dom)
    dm = _as_divmul(sp.summ[0], dom)
    t1 = dom.tuganbaev(dp.a, dp.b)
    t2 = dom.tuganbaev(dm.d, dm.c)
    pair = SimplePair((Div(dp.a), Ann(t1.s)), (Div(t2.s), Ann(dm.d)))
    noninvertible = (disj(mem_p(t1.alpha), mem_q(t1.alpha)),
                     disj(mem_p(t2.alpha), mem_q(t2.alpha)))
    return pair, noninvertible


def bezout_expand_atom(atom, dom: BezoutDomain):
    """Rewrite a dual pair or divisibility of a multiple without quantifiers.

    ``dual(a,b)`` is ``a|x & x.gamma(b,a)=0`` and ``divmul(c,d)`` is
    ``gamma(c,d)|x + x.d=0``; both identities hold in every module.
    """
    if isinstance(atom, DualPair):
        return (Div(atom.a), Ann(dom.gamma(atom.b, atom.a)))
    if isinstance(atom, DivMul):
        return (Div(dom.gamma(atom.c, atom.d)), Ann(atom.d))
    return (atom,)


def bezout_expand(sp: SimplePair, dom: BezoutDomain) -> SimplePair:
    conj_atoms = []
    for a in sp.conj:
        if isinstance(a, DivMul):
            raise UnsupportedShape(f"{a} may not appear in a conjunction on the left of a pair")
        conj_atoms.extend(bezout_expand_atom(a, dom))
    sum_atoms = []
    for a in sp.summ:
        if isinstance(a, DualPair):
            raise UnsupportedShape(f"{a} may not appear in a sum on the right of a pair")
        sum_atoms.extend(bezout_expand_atom(a, dom))
    return SimplePair(tuple(conj_atoms), tuple(sum_atoms))


def normal_form(sp: SimplePair, dom: BezoutDomain) -> SimplePair:
    """Merge to ``(a|x & x.b=0 / c|x + x.d=0)`` with lcm/gcd on each kind of atom."""
    sp = simplify_pair(sp, dom)
    if pair_is_trivially_empty(sp):
        return sp
    conj_atoms = []
    divs = [a.a for a in sp.conj if isinstance(a, Div)]
    anns = [a.b for a in sp.conj if isinstance(a, Ann)]
    if divs:
        conj_atoms.append(Div(divs[0] if len(divs) == 1 else _fold(dom.lcm, divs)))
    if anns:
        conj_atoms.append(Ann(anns[0] if len(anns) == 1 else dom.gcd_fold(anns)))
    sum_atoms = []
    divs = [a.a for a in sp.summ if isinstance(a, Div)]
    anns = [a.b for a in sp.summ if isinstance(a, Ann)]
    if divs:
        sum_atoms.append(Div(divs[0] if len(divs) == 1 else dom.gcd_fold(divs)))
    if anns:
        sum_atoms.append(Ann(anns[0] if len(anns) == 1 else _fold(dom.lcm, anns)))
    return simplify_pair(SimplePair(tuple(conj_atoms) or (TOP,), tuple(sum_atoms) or (BOT,)), dom)


def _fold(op, elems):
    out = elems[0]
    for e in elems[1:]:
        out = op(out, e)
    return out


# -- atomic rewrites ------------------------------------------------------------------

def rw_div_div(a, c, dom: BezoutDomain) -> WProblemTerm:
    """``(a|x / c|x)``: ``s`` and ``alpha`` non-surjective and ``x.a=0`` proper."""
    t = dom.tuganbaev(a, c)
    return WProblemTerm(WSet(a, dom.zero, dom.zero), conj(mem_q(t.s), mem_q(t.alpha)))


def rw_ann_ann(b, d, dom: BezoutDomain) -> WProblemTerm:
    """``(x.b=0 / x.d=0)``: dual of :func:`rw_div_div`, using ``d alpha = b r``, ``b(1 - alpha) = d s``."""
    t = dom.tuganbaev(d, b)
    s = dom.neg(t.s)
    if not (d * t.alpha == b * t.r and b * (dom.one - t.alpha) == d * s):
        raise IdentityViolation(f"sign-adjusted triple fails for ({d}, {b})")
    return WProblemTerm(WSet(d, dom.zero, dom.zero), conj(mem_p(s), mem_p(t.alpha)))


def rw_div_ann(a, d, dom: BezoutDomain) -> WSet:
    """``(a|x / x.d=0)`` is ``(x=x / x.ad=0)``."""
    return WSet(a * d, dom.zero, dom.zero)


def to_wset(sp: SimplePair, dom: BezoutDomain) -> WProblemTerm:
    """The five atomic shapes that are W-sets or bare prime conditions as they stand."""
    (f,), (s,) = sp.conj, sp.summ
    if f == TOP and s == BOT:
        return WProblemTerm(whole(dom), TRUE)
    if f == TOP and isinstance(s, Ann):
        return WProblemTerm(WSet(s.b, dom.zero, dom.zero), TRUE)
    if isinstance(f, Ann) and isinstance(s, Div):
        return WProblemTerm(WSet(dom.one, f.b, s.a), TRUE)
    if isinstance(f, Ann) and s == BOT:
        return WProblemTerm(whole(dom), mem_p(f.b))
    if f == TOP and isinstance(s, Div):
        return WProblemTerm(whole(dom), mem_q(s.a))
    raise UnsupportedShape(f"{sp} is not directly a W-set")


def rewrite_atomic(sp: SimplePair, dom: BezoutDomain) -> WProblemTerm:
    """Any atomic pair of plain atoms to a single term."""
    sp = simplify_pair(sp, dom)
    if not sp.is_atomic():
        raise UnsupportedShape(f"{sp} is not atomic")
    if pair_is_trivially_empty(sp):
        return empty_term(dom)
    (f,), (s,) = sp.conj, sp.summ
    if isinstance(f, Div) and isinstance(s, Div):
        return rw_div_div(f.a, s.a, dom)
    if isinstance(f, Ann) and isinstance(s, Ann):
        return rw_ann_ann(f.b, s.b, dom)
    if isinstance(f, Div) and isinstance(s, Ann):
        return WProblemTerm(rw_div_ann(f.a, s.b, dom), TRUE)
    if isinstance(f, Div) and s == BOT:
        return WProblemTerm(rw_div_ann(f.a, dom.one, dom), TRUE)
    return to_wset(sp, dom)


def intersect_terms(terms: Sequence[WProblemTerm], dom: BezoutDomain) -> WProblemTerm:
    """Intersection of single-main terms, when it is again a single prefix or suffix term.

    Suffix mains ``W(mu,0,0)`` intersect to ``W(lcm,0,0)``.  A nontrivial
    prefix together with any other nontrivial main is an interval strictly
    inside the value chain and is rejected.
    """
    if any(t.is_empty() for t in terms):
        return empty_term(dom)
    constraint = conj(*(t.constraint for t in terms))
    if constraint == FALSE:
        return empty_term(dom)
    mains = [t.main for t in terms if not t.main.is_whole()]
    prefixes = [m for m in mains if not m.is_suffix()]
    suffixes = [m for m in mains if m.is_suffix()]
    if prefixes and (suffixes or len(prefixes) > 1):
        raise UnsupportedShape(
            "right-hand term mixes a prefix interval W(1,h,g) with another bound "
            "(a middle interval); covering such terms needs an interval-coverage "
            "criterion that the reduction does not provide")
    if prefixes:
        return WProblemTerm(prefixes[0], constraint)
    if suffixes:
        mu = _fold(dom.lcm, [m.lam for m in suffixes]) if len(suffixes) > 1 else suffixes[0].lam
        return WProblemTerm(WSet(mu, dom.zero, dom.zero), constraint)
    return WProblemTerm(whole(dom), constraint)


# -- emptiness criterion ---------------------------------------------------------------

def pair_empty_criterion(a, b, c, d) -> bool:
    """Emptiness of ``(a|x & x.b=0 / c|x + x.d=0)`` when ``c = g a`` and ``b = d h``.

    Empty iff ``a = 0``, ``d = 0`` or ``gcd(g, h)`` is a unit; a zero ``g``
    or ``h`` does not by itself empty the set.
    """
    dom = domain_of(a)
    if not dom.divides(a, c) or not dom.divides(d, b):
        raise PreconditionViolation("criterion needs a | c and d | b")
    if dom.is_zero(a) or dom.is_zero(d):
        return True
    g, h = dom.div_exact(c, a), dom.div_exact(b, d)
    return dom.is_unit(dom.gcd(g, h))
