"""Conditions on pairs of primes, CNF reduction and the DPR decision.

A condition is a boolean formula over the atoms ``r in P`` and ``r in Q``.
It is meant to hold at every pair of primes ``(P, Q)`` with ``P + Q``
proper.  In dimension one that quantifier collapses to the radical tests
in :func:`dpr`.  The enumeration and localization oracles at the bottom
are independent of that route.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from .domains import BezoutDomain, ZERO_PRIME, ZeroPrime, domain_of
from .errors import DimensionUnsupported, InstanceMismatch
from .lgroup import EMPTY_SUPPORT, FULL_SUPPORT, g_support
from .kjo import content_fraction


# -- condition AST --------------------------------------------------------------

@dataclass(frozen=True)
class Const:
    value: bool

    def __str__(self):
        return "true" if self.value else "false"


@dataclass(frozen=True)
class MemP:
    r: object

    def __str__(self):
        return f"{domain_of(self.r).format(self.r)} in P"


@dataclass(frozen=True)
class MemQ:
    r: object

    def __str__(self):
        return f"{domain_of(self.r).format(self.r)} in Q"


@dataclass(frozen=True)
class Not:
    arg: object

    def __str__(self):
        return f"not ({self.arg})"


@dataclass(frozen=True)
class And:
    args: Tuple

    def __str__(self):
        return "(" + " and ".join(map(str, self.args)) + ")"


@dataclass(frozen=True)
class Or:
    args: Tuple

    def __str__(self):
        return "(" + " or ".join(map(str, self.args)) + ")"


TRUE = Const(True)
FALSE = Const(False)


def _membership(cls, r):
    dom = domain_of(r)
    if dom.is_zero(r):
        return TRUE
    if dom.is_unit(r):
        return FALSE
    return cls(dom.canonical(r))


def mem_p(r):
    """``r in P`` with associates identified and constants folded."""
    return _membership(MemP, r)


def mem_q(r):
    return _membership(MemQ, r)


def neg(c):
    if isinstance(c, Const):
        return FALSE if c.value else TRUE
    if isinstance(c, Not):
        return c.arg
    return Not(c)


def _flatten(cls, args):
    out = []
    for a in args:
        if isinstance(a, cls):
            out.extend(a.args)
        else:
            out.append(a)
    return out


def conj(*args):
    parts = []
    for a in _flatten(And, args):
        if a == FALSE:
            return FALSE
        if a != TRUE and a not in parts:
            parts.append(a)
    if not parts:
        return TRUE
    return parts[0] if len(parts) == 1 else And(tuple(parts))


def disj(*args):
    parts = []
    for a in _flatten(Or, args):
        if a == TRUE:
            return TRUE
        if a != FALSE and a not in parts:
            parts.append(a)
    if not parts:
        return FALSE
    return parts[0] if len(parts) == 1 else Or(tuple(parts))


def evaluate(c, p, q) -> bool:
    if isinstance(c, Const):
        return c.value
    if isinstance(c, MemP):
        return domain_of(c.r).prime_contains(p, c.r)
    if isinstance(c, MemQ):
        return domain_of(c.r).prime_contains(q, c.r)
    if isinstance(c, Not):
        return not evaluate(c.arg, p, q)
    if isinstance(c, And):
        return all(evaluate(a, p, q) for a in c.args)
    if isinstance(c, Or):
        return any(evaluate(a, p, q) for a in c.args)
    raise TypeError(f"not a condition: {c!r}")


def condition_elements(c) -> List:
    if isinstance(c, (MemP, MemQ)):
        return [c.r]
    if isinstance(c, Not):
        return condition_elements(c.arg)
    if isinstance(c, (And, Or)):
        return [r for a in c.args for r in condition_elements(a)]
    return []


def substitute_both(c):
    """Replace each atom ``r in P`` or ``r in Q`` by ``r in P and r in Q``."""
    if isinstance(c, (MemP, MemQ)):
        return conj(MemP(c.r), MemQ(c.r))
    if isinstance(c, Not):
        return neg(substitute_both(c.arg))
    if isinstance(c, And):
        return conj(*(substitute_both(a) for a in c.args))
    if isinstance(c, Or):
        return disj(*(substitute_both(a) for a in c.args))
    return c


# -- localization order ---------------------------------------------------------------

def leq_p(a, b, prime) -> bool:
    dom = domain_of(a)
    return not dom.prime_contains(prime, dom.gamma(a, b))


def lt_p(a, b, prime) -> bool:
    return leq_p(a, b, prime) and not leq_p(b, a, prime)


def leq_p_tuganbaev(a, b, prime) -> bool:
    """Order at a prime read off a Tuganbaev triple for ``(b, a)``.

    With ``b*alpha = a*r1`` and ``a*(alpha - 1) = b*s1``, ``a`` divides ``b``
    locally iff ``alpha`` or ``s1`` is a unit there.
    """
    dom = domain_of(a)
    t = dom.tuganbaev(b, a)
    return not dom.prime_contains(prime, t.alpha) or not dom.prime_contains(prime, t.s)


def leq_pq_condition(a, b):
    g = domain_of(a).gamma(a, b)
    return disj(neg(mem_p(g)), neg(mem_q(g)))


def lt_pq_condition(a, b):
    h = domain_of(a).gamma(b, a)
    return conj(leq_pq_condition(a, b), mem_p(h), mem_q(h))


# -- CNF --------------------------------------------------------------------------------

Literal = Tuple[str, object, bool]


@dataclass(frozen=True)
class Clause:
    p_pos: Tuple
    p_neg: Tuple
    q_pos: Tuple
    q_neg: Tuple

    def __str__(self):
        def fmt(side, elems, positive):
            rel = "in" if positive else "notin"
            return [f"{domain_of(r).format(r)} {rel} {side}" for r in elems]
        lits = (fmt("P", self.p_pos, True) + fmt("P", self.p_neg, False)
                + fmt("Q", self.q_pos, True) + fmt("Q", self.q_neg, False))
        return "{" + ", ".join(lits) + "}"


def _nnf_clauses(c, positive: bool) -> List[FrozenSet[Literal]]:
    if isinstance(c, Const):
        return [] if c.value == positive else [frozenset()]
    if isinstance(c, (MemP, MemQ)):
        atom = _membership(type(c), c.r)
        if isinstance(atom, Const):
            return _nnf_clauses(atom, positive)
        side = "P" if isinstance(c, MemP) else "Q"
        return [frozenset([(side, atom.r, positive)])]
    if isinstance(c, Not):
        return _nnf_clauses(c.arg, not positive)
    conjunctive = isinstance(c, And) == positive
    parts = [_nnf_clauses(a, positive) for a in c.args]
    if conjunctive:
        return _simplify([cl for p in parts for cl in p])
    acc = [frozenset()]
    for p in parts:
        acc = _simplify([x | y for x in acc for y in p])
    return acc


def _simplify(clauses: Iterable[FrozenSet[Literal]]) -> List[FrozenSet[Literal]]:
    kept = []
    for cl in clauses:
        if any((s, r, not pos) in cl for s, r, pos in cl):
            continue
        kept.append(cl)
    kept = sorted(set(kept), key=len)
    out = []
    for cl in kept:
        if not any(o <= cl for o in out):
            out.append(cl)
    return out


def _elem_key(r):
    return domain_of(r).format(r)


def cond_cnf(c) -> List[Clause]:
    out = []
    for cl in _nnf_clauses(c, True):
        def pick(side, pos):
            return tuple(sorted((r for s, r, p in cl if s == side and p == pos), key=_elem_key))
        out.append(Clause(pick("P", True), pick("P", False), pick("Q", True), pick("Q", False)))
    return sorted(out, key=str)


@dataclass(frozen=True)
class DPRTuple:
    a: object
    b: object
    c: object
    d: object

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))

    def __str__(self):
        dom = domain_of(self.a)
        return "(" + ", ".join(dom.format(x) for x in self) + ")"


def clause_to_dpr(clause: Clause, dom: BezoutDomain) -> DPRTuple:
    return DPRTuple(dom.product(clause.p_pos), dom.gcd_fold(clause.p_neg),
                    dom.product(clause.q_pos), dom.gcd_fold(clause.q_neg))


# -- DPR ---------------------------------------------------------------------------------

def _require_dim_one(dom: BezoutDomain):
    if not dom.krull_dimension_one:
        raise DimensionUnsupported(f"{dom.name}: DPR needs Krull dimension one")


def dpr(t) -> bool:
    """For all primes P, Q with P + Q proper: a in P, b notin P, c in Q or d notin Q."""
    a, b, c, d = t
    dom = domain_of(a)
    _require_dim_one(dom)
    if not dom.rad_member(a * c, dom.gcd(b, d)):
        return False
    if dom.is_zero(d) and not dom.is_zero(c) and not dom.rad_member(a, b):
        return False
    if dom.is_zero(b) and not dom.is_zero(a) and not dom.rad_member(c, d):
        return False
    return True


def dpr_n(a, bs: Sequence, c, ds: Sequence) -> bool:
    if not bs or len(bs) != len(ds):
        raise ValueError("dpr_n needs nonempty lists of equal length")
    dom = domain_of(a)
    return dpr((a, dom.gcd_fold(bs), c, dom.gcd_fold(ds)))


def holds_for_all_pairs(c, dom: BezoutDomain) -> bool:
    _require_dim_one(dom)
    return all(dpr(clause_to_dpr(cl, dom)) for cl in cond_cnf(c))


# -- oracles -------------------------------------------------------------------------

def compatible_pairs(primes: Sequence) -> List[Tuple]:
    """Pairs with proper sum in dimension one: equal primes or one side zero."""
    nonzero = [p for p in primes if not isinstance(p, ZeroPrime)]
    pairs = [(p, p) for p in nonzero]
    pairs += [(p, ZERO_PRIME) for p in nonzero]
    pairs += [(ZERO_PRIME, p) for p in nonzero]
    pairs.append((ZERO_PRIME, ZERO_PRIME))
    return pairs


def dpr_oracle_enum(t) -> bool:
    a, b, c, d = t
    dom = domain_of(a)
    primes = dom.relevant_primes([a, b, c, d])
    for p, q in compatible_pairs(primes):
        if not (dom.prime_contains(p, a) or not dom.prime_contains(p, b)
                or dom.prime_contains(q, c) or not dom.prime_contains(q, d)):
            return False
    return True


def _local_rad(dom, x, y, m) -> bool:
    if dom.is_zero(y):
        return dom.is_zero(x)
    return not dom.prime_contains(m, y) or dom.prime_contains(m, x)


def dpr_oracle_localization(t) -> bool:
    """DPR fails iff at some maximal ideal neither local radical membership holds."""
    a, b, c, d = t
    dom = domain_of(a)
    elems = [a, b, c, d]
    maximals = [p for p in dom.relevant_primes(elems) if not isinstance(p, ZeroPrime)]
    maximals.append(dom.spare_maximal(elems))
    return not any(not _local_rad(dom, a, b, m) and not _local_rad(dom, c, d, m)
                   for m in maximals)


def _witness_support(dom, x, y):
    if dom.is_zero(x):
        return EMPTY_SUPPORT
    if dom.is_zero(y):
        return FULL_SUPPORT
    return g_support(content_fraction(y)) - g_support(content_fraction(x))


def kjo_quotient_proper(t) -> bool:
    """Whether the ideal quotient for ``(a, b, c, d)`` is proper, via supports."""
    a, b, c, d = t
    dom = domain_of(a)
    if dom.name != "kjo":
        raise InstanceMismatch("support criterion applies to the KJO domain only")
    s1 = _witness_support(dom, a, b)
    s2 = _witness_support(dom, c, d)
    return not (s1 & s2).is_empty()


def evaluate_all_pairs(c, dom: BezoutDomain) -> bool:
    """Direct check of a condition over every compatible pair of relevant primes."""
    elems = condition_elements(c)
    primes = dom.relevant_primes(elems) if elems else [ZERO_PRIME]
    return all(evaluate(c, p, q) for p, q in compatible_pairs(primes))
