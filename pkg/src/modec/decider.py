"""Inclusion of basic open sets, decided through prime-pair conditions.

``decide_inclusion(lhs, rhs, dom)`` normalizes the query into W-problems
``W(lam,h,g) & C <= union of prefix terms W(1,h_i,g_i) & C_i and suffix
terms W(mu_j,0,0) & C_j``.  It writes the covering requirement as a
condition on prime pairs and checks that condition through CNF and DPR.
Every step is recorded, and :func:`replay` re-executes the record.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Sequence, Tuple

from .domains import BezoutDomain
from .errors import DimensionUnsupported, UnsupportedShape
from .pp import (BOT, TOP, Ann, Div, OpenPair, SimplePair, WProblemTerm, WSet,
                 bezout_expand, dagger_decompose, has_prufer_atoms, intersect_terms,
                 intersection_split, normal_form, pair_is_trivially_empty,
                 rewrite_atomic, rw_dual_pair, simplify_pair, split_conj, split_sum,
                 whole)
from .primes import (FALSE, TRUE, clause_to_dpr, cond_cnf, conj, disj, dpr,
                     leq_pq_condition, lt_pq_condition, mem_p, mem_q, neg,
                     substitute_both)


@dataclass(frozen=True)
class WProblem:
    lhs_main: WSet
    lhs_constraint: object
    rhs_terms: Tuple[WProblemTerm, ...]

    def __str__(self):
        lhs = str(WProblemTerm(self.lhs_main, self.lhs_constraint))
        rhs = " | ".join(map(str, self.rhs_terms)) or "empty"
        return f"{lhs} <= {rhs}"


@dataclass(frozen=True)
class Step:
    rule: str
    inputs: Tuple
    output: object


@dataclass
class Trace:
    steps: List[Step] = field(default_factory=list)

    def record(self, rule: str, inputs: Tuple, output):
        self.steps.append(Step(rule, tuple(inputs), output))
        return output


@dataclass(frozen=True)
class Verdict:
    included: bool
    trace: Tuple[Step, ...]
    domain: BezoutDomain


def _require_flags(dom: BezoutDomain):
    if not (dom.residue_fields_infinite and dom.krull_dimension_one):
        raise DimensionUnsupported(
            f"{dom.name}: the decision procedure needs infinite residue fields and Krull dimension one")


# -- normalization ------------------------------------------------------------

def _pieces(pair: OpenPair, dom: BezoutDomain, trace: Trace):
    """Simple pairs of a union, each in normal form with its side condition."""
    out = []
    for sp in trace.record("split-union", (pair,), dagger_decompose(pair)):
        sp = simplify_pair(sp, dom)
        if pair_is_trivially_empty(sp):
            continue
        constraint = TRUE
        if has_prufer_atoms(sp):
            if sp.is_atomic():
                sp, conds = trace.record("dual-pair", (sp,), rw_dual_pair(sp, dom))
                constraint = conj(*conds)
            else:
                sp = trace.record("expand-quantified", (sp,), bezout_expand(sp, dom))
        nf = normal_form(sp, dom)
        if nf != sp:
            trace.record("normal-form", (sp,), nf)
        if pair_is_trivially_empty(nf) or constraint == FALSE:
            continue
        out.append((nf, constraint))
    return out


def _atomic_term(sp: SimplePair, dom: BezoutDomain, trace: Trace) -> WProblemTerm:
    return trace.record("atomic-rewrite", (sp,), rewrite_atomic(sp, dom))


def rhs_terms(pair: OpenPair, dom: BezoutDomain, trace: Trace) -> List[WProblemTerm]:
    terms = []
    for sp, constraint in _pieces(pair, dom, trace):
        atoms = trace.record("split-intersection", (sp,), intersection_split(sp))
        parts = [_atomic_term(a, dom, trace) for a in atoms]
        parts.append(WProblemTerm(whole(dom), constraint))
        t = trace.record("intersect", tuple(parts), intersect_terms(parts, dom))
        if not t.is_empty():
            terms.append(t)
    return terms


def normalize_problem(lhs: OpenPair, rhs: Sequence[OpenPair], dom: BezoutDomain,
                      trace: Trace = None) -> List[WProblem]:
    trace = trace if trace is not None else Trace()
    base = [t for pair in rhs for t in rhs_terms(pair, dom, trace)]
    problems = []
    for sp, constraint in _pieces(lhs, dom, trace):
        for sp1, extra1 in trace.record("split-left-conjunction", (sp,), split_conj(sp)):
            for sp2, extra2 in trace.record("split-left-sum", (sp1,), split_sum(sp1)):
                t = _atomic_term(sp2, dom, trace)
                c = conj(constraint, t.constraint)
                if t.main.is_empty() or c == FALSE:
                    continue
                extras = [_atomic_term(e, dom, trace) for e in extra1 + extra2]
                rhs_all = tuple(base + [e for e in extras if not e.is_empty()])
                problems.append(WProblem(t.main, c, rhs_all))
    return problems


# -- the covering condition ------------------------------------------------------

def _classify(terms: Sequence[WProblemTerm]):
    suffixes, prefixes = [], []
    for t in terms:
        if t.is_empty():
            continue
        if t.main.is_suffix():
            suffixes.append((t.main.lam, t.constraint))
        elif t.main.is_prefix():
            prefixes.append((t.main.h, t.main.g, t.constraint))
        else:
            raise UnsupportedShape(f"right-hand term {t} is neither a prefix nor a suffix interval")
    return suffixes, prefixes


def _both(r):
    return conj(mem_p(r), mem_q(r))


def build_condition(p: WProblem, dom: BezoutDomain):
    """Prime-pair condition equivalent to the W-problem.

    The first half covers pairs with distinct primes by closed intervals.
    The second half reads every membership in both primes.  That puts it
    at the smaller prime of a comparable pair, where the value intervals
    are open, so the mixed clause compares strictly.
    """
    lam, h, g = p.lhs_main.lam, p.lhs_main.h, p.lhs_main.g
    suffixes, prefixes = _classify(p.rhs_terms)
    top = lam * g * h

    hyp1 = conj(p.lhs_constraint, mem_p(h), mem_q(g))
    alts1 = [conj(cj, leq_pq_condition(mu, lam)) for mu, cj in suffixes]
    alts1 += [conj(ci, mem_p(hi), mem_q(gi), leq_pq_condition(top, gi * hi))
              for hi, gi, ci in prefixes]
    alts1 += [conj(ci, cj, mem_p(hi), mem_q(gi), leq_pq_condition(mu, gi * hi))
              for hi, gi, ci in prefixes for mu, cj in suffixes]
    off_diagonal = disj(neg(hyp1), *alts1)

    sb = substitute_both
    hyp2 = conj(sb(p.lhs_constraint), _both(h), _both(g))
    alts2 = [conj(sb(cj), leq_pq_condition(mu, lam)) for mu, cj in suffixes]
    alts2 += [conj(sb(ci), _both(hi), _both(gi), leq_pq_condition(top, gi * hi))
              for hi, gi, ci in prefixes]
    alts2 += [conj(sb(ci), sb(cj), _both(hi), _both(gi), lt_pq_condition(mu, gi * hi))
              for hi, gi, ci in prefixes for mu, cj in suffixes]
    diagonal = disj(neg(hyp2), *alts2)
    return conj(off_diagonal, diagonal)


def decide_w(p: WProblem, dom: BezoutDomain, trace: Trace = None) -> bool:
    trace = trace if trace is not None else Trace()
    if p.lhs_main.is_empty() or p.lhs_constraint == FALSE:
        return trace.record("empty-left", (p,), True)
    cond = trace.record("condition", (p,), build_condition(p, dom))
    clauses = trace.record("cnf", (cond,), tuple(cond_cnf(cond)))
    for cl in clauses:
        t = trace.record("clause-dpr", (cl,), clause_to_dpr(cl, dom))
        if not trace.record("dpr", (t,), dpr(t)):
            return False
    return True


def decide_inclusion(lhs: OpenPair, rhs: Sequence[OpenPair], dom: BezoutDomain) -> Verdict:
    _require_flags(dom)
    trace = Trace()
    problems = normalize_problem(lhs, rhs, dom, trace)
    included = True
    for p in problems:
        if not decide_w(p, dom, trace):
            included = False
            break
    return Verdict(included, tuple(trace.steps), dom)


def nonempty(pair: OpenPair, dom: BezoutDomain) -> Verdict:
    v = decide_inclusion(pair, [], dom)
    return Verdict(not v.included, v.trace, dom)


def atom_pair(phi: Sequence, psi: Sequence) -> OpenPair:
    """Open pair with one conjunction on the left and one sum on the right."""
    return OpenPair((tuple(phi),), (tuple(psi),))


def dpr_inclusion_query(a, b, c, d):
    lhs = atom_pair([Ann(b)], [Div(d)])
    rhs = [atom_pair([Ann(a)], [BOT]), atom_pair([TOP], [Div(c)])]
    return lhs, rhs


def check_dpr_inclusion(a, b, c, d, dom: BezoutDomain) -> bool:
    """``(x.b=0 / d|x) <= (x.a=0 / x=0) | (x=x / c|x)``; agrees with DPR of ``(a,b,c,d)``."""
    return decide_inclusion(*dpr_inclusion_query(a, b, c, d), dom).included


def radical_inclusion_query(a, bs: Sequence):
    return atom_pair([Ann(b) for b in bs], [BOT]), [atom_pair([Ann(a)], [BOT])]


def check_radical_inclusion(a, bs: Sequence, dom: BezoutDomain) -> bool:
    """Every module with a nonzero element killed by all ``bs`` has one killed by ``a``."""
    if not bs:
        raise ValueError("need at least one annihilator")
    return decide_inclusion(*radical_inclusion_query(a, bs), dom).included


# -- replay ------------------------------------------------------------------------------

REPLAY: Dict[str, Callable] = {
    "split-union": lambda dom, pair: dagger_decompose(pair),
    "dual-pair": lambda dom, sp: rw_dual_pair(sp, dom),
    "expand-quantified": lambda dom, sp: bezout_expand(sp, dom),
    "normal-form": lambda dom, sp: normal_form(sp, dom),
    "split-intersection": lambda dom, sp: intersection_split(sp),
    "atomic-rewrite": lambda dom, sp: rewrite_atomic(sp, dom),
    "intersect": lambda dom, *parts: intersect_terms(parts, dom),
    "split-left-conjunction": lambda dom, sp: split_conj(sp),
    "split-left-sum": lambda dom, sp: split_sum(sp),
    "empty-left": lambda dom, p: True,
    "condition": lambda dom, p: build_condition(p, dom),
    "cnf": lambda dom, cond: tuple(cond_cnf(cond)),
    "clause-dpr": lambda dom, cl: clause_to_dpr(cl, dom),
    "dpr": lambda dom, t: dpr(t),
}


def replay_step(step: Step, dom: BezoutDomain) -> bool:
    return REPLAY[step.rule](dom, *step.inputs) == step.output


def replay(verdict: Verdict) -> bool:
    """Re-run every recorded step; true iff all reproduce their outputs."""
    return all(replay_step(s, verdict.domain) for s in verdict.trace)
