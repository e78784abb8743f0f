"""The lattice-ordered group of eventually constant integer sequences.

An element is stored as a finite prefix followed by a tail value that
repeats forever.  ``[1,3;0]`` denotes ``1, 3, 0, 0, ...``.  Canonical
form strips trailing prefix entries equal to the tail, so structural
equality is equality of the denoted sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from .errors import NegativeElement, ParseError


@dataclass(frozen=True, order=True)
class GroupElement:
    prefix: Tuple[int, ...]
    tail: int

    def __post_init__(self):
        if self.prefix and self.prefix[-1] == self.tail:
            raise ValueError("GroupElement must be built through canon()")

    def coord(self, i: int) -> int:
        return self.prefix[i] if i < len(self.prefix) else self.tail

    def window(self, length: int) -> Tuple[int, ...]:
        return tuple(self.coord(i) for i in range(length))

    def values(self) -> Tuple[int, ...]:
        return self.prefix + (self.tail,)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return g_add(self, other)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return g_add(self, g_neg(other))

    def __neg__(self) -> "GroupElement":
        return g_neg(self)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.prefix)) + ";" + str(self.tail) + "]"

    __repr__ = __str__


@dataclass(frozen=True)
class SupportSet:
    """Coordinates where a nonnegative element is positive.

    ``finite_indices`` lists positive coordinates below ``window``; every
    coordinate at or beyond ``window`` is positive iff ``tail_flag``.  Built
    through :func:`make_support`, which keeps ``window`` minimal so equality
    is equality of the denoted index sets.
    """

    finite_indices: FrozenSet[int]
    tail_flag: bool
    window: int = 0

    def __contains__(self, i: int) -> bool:
        return i in self.finite_indices if i < self.window else self.tail_flag

    def _combine(self, other: "SupportSet", op) -> "SupportSet":
        n = max(self.window, other.window)
        return make_support([op(i in self, i in other) for i in range(n)],
                            op(self.tail_flag, other.tail_flag))

    def __or__(self, other: "SupportSet") -> "SupportSet":
        return self._combine(other, lambda x, y: x or y)

    def __and__(self, other: "SupportSet") -> "SupportSet":
        return self._combine(other, lambda x, y: x and y)

    def __sub__(self, other: "SupportSet") -> "SupportSet":
        return self._combine(other, lambda x, y: x and not y)

    def issubset(self, other: "SupportSet") -> bool:
        return self - other == EMPTY_SUPPORT

    def is_empty(self) -> bool:
        return self == EMPTY_SUPPORT


def make_support(flags: Iterable[bool], tail_flag: bool) -> SupportSet:
    flags = [bool(f) for f in flags]
    while flags and flags[-1] == tail_flag:
        flags.pop()
    return SupportSet(frozenset(i for i, f in enumerate(flags) if f),
                      bool(tail_flag), len(flags))


def canon(prefix: Iterable[int], tail: int) -> GroupElement:
    return _canon([int(v) for v in prefix], int(tail))


def _canon(p: list, tail: int) -> GroupElement:
    while p and p[-1] == tail:
        p.pop()
    return GroupElement(tuple(p), tail)


ZERO = canon((), 0)
EMPTY_SUPPORT = SupportSet(frozenset(), False, 0)
FULL_SUPPORT = SupportSet(frozenset(), True, 0)


def _zip(a: GroupElement, b: GroupElement):
    """Both prefixes padded with their tails to a common length."""
    pa, pb = a.prefix, b.prefix
    if len(pa) < len(pb):
        pa = pa + (a.tail,) * (len(pb) - len(pa))
    elif len(pb) < len(pa):
        pb = pb + (b.tail,) * (len(pa) - len(pb))
    return zip(pa, pb)


def g_add(a: GroupElement, b: GroupElement) -> GroupElement:
    return _canon([x + y for x, y in _zip(a, b)], a.tail + b.tail)


def g_neg(a: GroupElement) -> GroupElement:
    return _canon([-x for x in a.prefix], -a.tail)


def g_meet(a: GroupElement, b: GroupElement) -> GroupElement:
    return _canon([min(x, y) for x, y in _zip(a, b)], min(a.tail, b.tail))


def g_join(a: GroupElement, b: GroupElement) -> GroupElement:
    return _canon([max(x, y) for x, y in _zip(a, b)], max(a.tail, b.tail))


def g_leq(a: GroupElement, b: GroupElement) -> bool:
    return a.tail <= b.tail and all(x <= y for x, y in _zip(a, b))


def g_scale(n: int, a: GroupElement) -> GroupElement:
    if n < 1:
        raise ValueError("g_scale needs n >= 1")
    return canon([n * x for x in a.prefix], n * a.tail)


def is_nonnegative(a: GroupElement) -> bool:
    return g_leq(ZERO, a)


def g_support(a: GroupElement) -> SupportSet:
    if not is_nonnegative(a):
        raise NegativeElement(f"support of {a} is undefined: negative coordinate")
    return make_support([v > 0 for v in a.prefix], a.tail > 0)


def parse_group_literal(text: str) -> GroupElement:
    """Parse ``[a0,...,ak;t]``."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")) or ";" not in s:
        raise ParseError(f"bad group literal {text!r}")
    body = s[1:-1]
    head, _, tail = body.partition(";")
    try:
        prefix = [int(t) for t in head.split(",") if t.strip()]
        return canon(prefix, int(tail))
    except ValueError:
        raise ParseError(f"bad group literal {text!r}") from None
