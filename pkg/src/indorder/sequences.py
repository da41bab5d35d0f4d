"""Lexicographic and dominance orders on non-increasing integer sequences,
and constructive convertibility by unit transfers."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, List, Sequence, Tuple

from .errors import LengthMismatch, NotConvertible

IntSequence = Tuple[int, ...]


class Lex(str, enum.Enum):
    GREATER = "Greater"
    EQUAL = "Equal"
    LESS = "Less"


class Dom(str, enum.Enum):
    GREATER_EQ = "GreaterEq"
    EQUAL = "Equal"
    LESS_EQ = "LessEq"
    INCOMPARABLE = "Incomparable"


def as_sequence(xs: Iterable[int]) -> IntSequence:
    """Validate a non-empty non-increasing integer sequence."""
    out = tuple(xs)
    if not out:
        raise ValueError("sequence must be non-empty")
    for x in out:
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"entries must be integers, got {x!r}")
    if any(a < b for a, b in zip(out, out[1:])):
        raise ValueError(f"sequence {out} is not non-increasing")
    return out


def parse_sequence(text: str) -> IntSequence:
    return as_sequence(int(t) for t in text.replace(" ", "").split(",") if t)


def _same_length(x: Sequence[int], y: Sequence[int]) -> None:
    if len(x) != len(y):
        raise LengthMismatch(f"lengths differ: {len(x)} vs {len(y)}")


def lex_compare(x: Sequence[int], y: Sequence[int]) -> Lex:
    _same_length(x, y)
    for a, b in zip(x, y):
        if a != b:
            return Lex.GREATER if a > b else Lex.LESS
    return Lex.EQUAL


def dominates_d(x: Sequence[int], y: Sequence[int]) -> bool:
    """Every prefix sum of ``x`` is at least the matching prefix sum of ``y``."""
    _same_length(x, y)
    return all(a >= b for a, b in zip(accumulate(x), accumulate(y)))


def dominance_compare(x: Sequence[int], y: Sequence[int]) -> Dom:
    """Prefix-sum comparison.  Totals need not agree."""
    _same_length(x, y)
    if tuple(x) == tuple(y):
        return Dom.EQUAL
    ge = dominates_d(x, y)
    le = dominates_d(y, x)
    if ge and le:
        # equal prefix sums force equal sequences
        return Dom.EQUAL
    if ge:
        return Dom.GREATER_EQ
    if le:
        return Dom.LESS_EQ
    return Dom.INCOMPARABLE


def multiset_order(xs: Iterable[int], ys: Iterable[int], kind: str = "lex"):
    """Compare multisets through their non-increasing arrangements."""
    a = tuple(sorted(xs, reverse=True))
    b = tuple(sorted(ys, reverse=True))
    if len(a) != len(b):
        raise LengthMismatch(f"multiset sizes differ: {len(a)} vs {len(b)}")
    if kind == "lex":
        return lex_compare(a, b)
    if kind == "dominance":
        return dominance_compare(a, b)
    raise ValueError(f"unknown kind {kind!r}")


def _lex_ge(a: Iterable[int], b: Iterable[int]) -> bool:
    return multiset_order(a, b, "lex") in (Lex.GREATER, Lex.EQUAL)


def _dom_ge(a: Iterable[int], b: Iterable[int]) -> bool:
    return multiset_order(a, b, "dominance") in (Dom.GREATER_EQ, Dom.EQUAL)


def check_adding_invariance(xs: Sequence[int], ys: Sequence[int], extension: Sequence[int]) -> bool:
    """Adding the same elements to both multisets preserves both orders, in
    both directions."""
    if len(xs) != len(ys):
        raise LengthMismatch(f"multiset sizes differ: {len(xs)} vs {len(ys)}")
    xe = list(xs) + list(extension)
    ye = list(ys) + list(extension)
    lex_ok = _lex_ge(xs, ys) == _lex_ge(xe, ye)
    dom_ok = _dom_ge(xs, ys) == _dom_ge(xe, ye)
    return lex_ok and dom_ok


def dominance_implies_lex_check(x: Sequence[int], y: Sequence[int]) -> bool:
    _same_length(x, y)
    if not dominates_d(x, y):
        return True
    return lex_compare(x, y) in (Lex.GREATER, Lex.EQUAL)


@dataclass(frozen=True)
class ConversionStep:
    """Add 1 at position ``j`` and subtract 1 at position ``k`` (1-indexed, ``j < k``)."""

    j: int
    k: int

    def apply(self, seq: Sequence[int]) -> IntSequence:
        if not 1 <= self.j < self.k <= len(seq):
            raise ValueError(f"bad step indices ({self.j},{self.k}) for length {len(seq)}")
        out = list(seq)
        out[self.j - 1] += 1
        out[self.k - 1] -= 1
        return tuple(out)

    def to_jsonable(self) -> dict:
        return {"j": self.j, "k": self.k}


def is_non_increasing(seq: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(seq, seq[1:]))


def replay(x: Sequence[int], steps: Sequence[ConversionStep]) -> List[IntSequence]:
    """All intermediate sequences, starting with ``x``."""
    path = [tuple(x)]
    for s in steps:
        path.append(s.apply(path[-1]))
    return path


def convert(x: Sequence[int], y: Sequence[int]) -> List[ConversionStep]:
    """Unit transfers turning ``x`` into ``y`` through non-increasing sequences.

    Each step acts at the first position where the current sequence falls
    short of ``y``: it adds 1 there and takes 1 from the last entry of the
    run that follows, which keeps the sequence non-increasing.  The
    returned certificate has been replayed and checked.

    Raises :class:`NotConvertible` when ``y`` does not dominate ``x`` or
    the totals differ.
    """
    x = as_sequence(x)
    y = as_sequence(y)
    _same_length(x, y)
    if sum(x) != sum(y):
        raise NotConvertible(f"totals differ: {sum(x)} vs {sum(y)}")
    for j, (a, b) in enumerate(zip(accumulate(y), accumulate(x)), start=1):
        if a < b:
            raise NotConvertible(f"prefix {j} of target is smaller ({a} < {b})", prefix_index=j)
    steps: List[ConversionStep] = []
    cur = list(x)
    n = len(cur)
    while True:
        i = next((i for i in range(n) if cur[i] != y[i]), None)
        if i is None:
            break
        # dominance plus equal prefixes force cur[i] < y[i] and i < n - 1
        k = i + 1
        while k + 1 < n and cur[k + 1] == cur[i + 1]:
            k += 1
        step = ConversionStep(i + 1, k + 1)
        cur = list(step.apply(cur))
        steps.append(step)
    path = replay(x, steps)
    assert path[-1] == y
    for prev, nxt in zip(path, path[1:]):
        assert is_non_increasing(nxt) and dominates_d(nxt, prev) and dominates_d(y, nxt)
    return steps
