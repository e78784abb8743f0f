"""Command-line front end: batch scripts and a REPL over one domain."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .decider import (REPLAY, Step, Verdict, decide_inclusion, dpr_inclusion_query,
                      radical_inclusion_query)
from .domains import BezoutDomain, get_domain
from .errors import InstanceMismatch, ModecError, NotDivisible, ParseError
from .kjo import FractionElement, GroupRingElement, content_fraction
from .lgroup import GroupElement
from .pp import BOT, TOP, Ann, Div, DivMul, DualPair, OpenPair
from .primes import DPRTuple, dpr, dpr_n
from .qxpoly import Poly
from .syntax import (BinOp, Let, Mono, Neg, Num, PairSyntax, PolyX, Pow, Var,
                     parse_script, parse_statement)

EXIT_OK, EXIT_ERROR, EXIT_SYNTAX = 0, 1, 2

BASIC_REPLAY: Dict[str, Callable] = {
    "eq": lambda dom, a, b: dom.eq(a, b),
    "divides": lambda dom, a, b: dom.divides(a, b),
    "gcd": lambda dom, a, b: dom.gcd(a, b),
    "xgcd": lambda dom, a, b: dom.xgcd(a, b),
    "content": lambda dom, a: content_fraction(a),
    "radmem": lambda dom, a, b: dom.rad_member(a, b),
    "dprn": lambda dom, a, c, bs, ds: dpr_n(a, bs, c, ds),
}


def replay_steps(steps: Sequence[Step], dom: BezoutDomain) -> bool:
    table = {**REPLAY, **BASIC_REPLAY}
    return all(table[s.rule](dom, *s.inputs) == s.output for s in steps)


@dataclass(frozen=True)
class Output:
    query: str
    result: object
    steps: Tuple[Step, ...] = ()


def _show(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, tuple):
        return "(" + ", ".join(_show(x) for x in v) + ")"
    return str(v)


class Session:
    """Name bindings plus statement evaluation for one domain."""

    def __init__(self, dom: BezoutDomain):
        self.dom = dom
        self.env: Dict[str, object] = {}
        self.line = 1

    # elements
    def element(self, node):
        return self.dom.element(self._eval(node))

    def _const(self, k):
        if self.dom.name == "kjo":
            return FractionElement(GroupRingElement.constant(k))
        return Poly.const(k)

    def _eval(self, node):
        dom = self.dom
        if isinstance(node, Num):
            return self._const(node.value)
        if isinstance(node, Var):
            if node.name not in self.env:
                raise ParseError(f"unbound name {node.name!r}", self.line, node.col)
            return self.env[node.name]
        if isinstance(node, PolyX):
            if dom.name != "qx":
                raise InstanceMismatch("'x' is the polynomial variable; use X^[...] in the KJO domain")
            return Poly.x()
        if isinstance(node, Mono):
            if dom.name != "kjo":
                raise InstanceMismatch("X^[...] monomials belong to the KJO domain")
            return FractionElement(GroupRingElement.monomial(node.exponent))
        if isinstance(node, Neg):
            return -self._eval(node.arg)
        if isinstance(node, Pow):
            base = self._eval(node.base)
            out = dom.one
            for _ in range(node.exponent):
                out = out * base
            return out
        if isinstance(node, BinOp):
            a, b = self._eval(node.left), self._eval(node.right)
            if node.op == "+":
                return a + b
            if node.op == "-":
                return a - b
            if node.op == "*":
                return a * b
            return self._divide(a, b)
        raise TypeError(node)

    def _divide(self, a, b):
        if self.dom.name == "kjo":
            return a / b
        if b.is_zero():
            raise NotDivisible("division by zero")
        q, r = divmod(a, b)
        if not r.is_zero():
            raise NotDivisible(f"{b} does not divide {a}")
        return q

    # pairs
    def atom(self, node):
        k = node.kind
        if k == "T":
            return TOP
        if k == "Z":
            return BOT
        args = [self.element(a) for a in node.args]
        return {"div": Div, "ann": Ann, "dual": DualPair, "divmul": DivMul}[k](*args)

    def pair(self, node: PairSyntax) -> OpenPair:
        return OpenPair(tuple(tuple(self.atom(a) for a in c) for c in node.phi),
                        tuple(tuple(self.atom(a) for a in s) for s in node.psi))

    # statements
    def execute(self, stmt, src: str) -> Output:
        dom = self.dom
        if isinstance(stmt, Let):
            value = self.element(stmt.expr)
            self.env[stmt.name] = value
            return Output(src, f"{stmt.name} = {dom.format(value)}")
        kind, args = stmt.kind, stmt.args
        if kind in BASIC_REPLAY and kind != "dprn":
            vals = tuple(self.element(a) for a in args)
            if kind == "content" and dom.name != "kjo":
                raise InstanceMismatch("content is defined for the KJO domain only")
            out = BASIC_REPLAY[kind](dom, *vals)
            return Output(src, self._render(kind, out), (Step(kind, vals, out),))
        if kind == "dpr":
            t = DPRTuple(*(self.element(a) for a in args))
            out = dpr(t)
            return Output(src, out, (Step("dpr", (t,), out),))
        if kind == "dprn":
            a, c = self.element(args[0]), self.element(args[1])
            bs = tuple(self.element(b) for b in args[2])
            ds = tuple(self.element(d) for d in args[3])
            out = dpr_n(a, bs, c, ds)
            return Output(src, out, (Step("dprn", (a, c, bs, ds), out),))
        if kind == "dprsets":
            lhs, rhs = dpr_inclusion_query(*(self.element(a) for a in args))
            return self._verdict(src, decide_inclusion(lhs, rhs, dom))
        if kind == "radsets":
            a = self.element(args[0])
            bs = [self.element(b) for b in args[1]]
            lhs, rhs = radical_inclusion_query(a, bs)
            return self._verdict(src, decide_inclusion(lhs, rhs, dom))
        if kind in ("empty", "nonempty"):
            v = decide_inclusion(self.pair(args[0]), [], dom)
            return self._verdict(src, v, negate=kind == "nonempty")
        lhs = self.pair(args[0])
        rhs = [self.pair(p) for p in args[1]]
        return self._verdict(src, decide_inclusion(lhs, rhs, dom))

    def _verdict(self, src: str, v: Verdict, negate: bool = False) -> Output:
        return Output(src, v.included != negate, v.trace)

    def _render(self, kind: str, out):
        if isinstance(out, bool):
            return out
        if kind == "xgcd":
            return [self.dom.format(e) for e in out]
        if isinstance(out, GroupElement):
            return str(out)
        return self.dom.format(out)


# -- output ----------------------------------------------------------------------

def _strings(v) -> List[str]:
    if isinstance(v, tuple):
        return [_show(x) for x in v]
    return [_show(v)]


def format_output(o: Output, mode: str, with_trace: bool) -> str:
    if mode == "json":
        record = {"query": o.query, "result": o.result}
        if with_trace:
            record["trace"] = [{"lemma": s.rule, "in": _strings(s.inputs), "out": _strings(s.output)}
                               for s in o.steps]
        return json.dumps(record)
    if isinstance(o.result, list):
        text = ", ".join(f"{k} = {v}" for k, v in zip("guv", o.result))
    else:
        text = _show(o.result)
    if not with_trace:
        return text
    lines = [text]
    for s in o.steps:
        lines.append(f"  [{s.rule}] {'; '.join(_strings(s.inputs))} => {'; '.join(_strings(s.output))}")
    return "\n".join(lines)


# -- drivers -----------------------------------------------------------------------

def run_script_text(text: str, dom: BezoutDomain, mode: str = "text", with_trace: bool = False,
                    out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    try:
        statements = parse_script(text)
    except ParseError as e:
        print(f"syntax error at {e}", file=err)
        return EXIT_SYNTAX
    session = Session(dom)
    for line, src, stmt in statements:
        session.line = line
        try:
            o = session.execute(stmt, src)
        except ParseError as e:
            print(f"syntax error at {e}", file=err)
            return EXIT_SYNTAX
        except ModecError as e:
            print(f"error at line {line}: {type(e).__name__}: {e}", file=err)
            return EXIT_ERROR
        print(format_output(o, mode, with_trace), file=out)
    return EXIT_OK


def repl(dom: BezoutDomain, mode: str, with_trace: bool, inp=None, out=None) -> int:
    inp, out = inp or sys.stdin, out or sys.stdout
    session = Session(dom)
    interactive = inp.isatty()
    n = 0
    while True:
        if interactive:
            out.write("modec> ")
            out.flush()
        raw = inp.readline()
        if not raw:
            return EXIT_OK
        n += 1
        src = raw.split("#", 1)[0].strip()
        if not src:
            continue
        session.line = n
        try:
            o = session.execute(parse_statement(src, n), src)
            print(format_output(o, mode, with_trace), file=out)
        except ParseError as e:
            print(f"syntax error at {e}", file=out)
        except ModecError as e:
            print(f"error: {type(e).__name__}: {e}", file=out)


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="modec", description="Decide inclusions of basic open sets "
                                 "and radical relations over the KJO domain or Q[x].")
    ap.add_argument("--domain", required=True, choices=["kjo", "qx"])
    ap.add_argument("--trace", action="store_true", help="attach the rewrite steps to each result")
    ap.add_argument("--format", choices=["text", "json"], default="text")
    ap.add_argument("script", nargs="?", help="statement file; omit for a REPL")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_arg_parser().parse_args(argv)
    dom = get_domain(args.domain)
    if args.script is None:
        return repl(dom, args.format, args.trace)
    try:
        with open(args.script, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        print(f"cannot read {args.script}: {e.strerror}", file=sys.stderr)
        return EXIT_ERROR
    return run_script_text(text, dom, args.format, args.trace)


if __name__ == "__main__":
    sys.exit(main())
