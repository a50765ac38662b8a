"""Cyclic / anticyclic classification of finite sequences of naturals.

``is_increasing``, ``augment``, ``is_cyclic_aux``, ``is_cyclic``,
``is_anticyclic`` and ``orientation`` peel the sequence from the left, one
pattern-match clause at a time.  The only recursive calls in those
definitions are tail calls, so they are written as loops over an offset
rather than as Python recursion (which would cap the sequence length at the
interpreter's recursion limit).

``is_cyclic_by_count`` and ``is_cyclic_by_rotation`` are independent
definitions kept for differential testing; neither shares code with the
recursive path.
"""

from __future__ import annotations

import enum
from typing import Sequence

Seq = tuple[int, ...]


class OrientationSort(enum.Enum):
    NONE = "none"
    CYCLIC = "cyclic"
    ANTICYCLIC = "anticyclic"
    BOTH = "both"

    @classmethod
    def from_flags(cls, cyclic: bool, anticyclic: bool) -> OrientationSort:
        if cyclic:
            return cls.BOTH if anticyclic else cls.CYCLIC
        return cls.ANTICYCLIC if anticyclic else cls.NONE

    @property
    def admits_cyclic(self) -> bool:
        return self in (OrientationSort.CYCLIC, OrientationSort.BOTH)

    @property
    def admits_anticyclic(self) -> bool:
        return self in (OrientationSort.ANTICYCLIC, OrientationSort.BOTH)

    def __str__(self) -> str:
        return self.value


def _increasing_from(s: Sequence[int], i: int) -> bool:
    while True:
        if i >= len(s):  # nil
            return True
        if i + 1 == len(s):  # cons _ nil
            return True
        # cons a (cons b bs)
        if not s[i] <= s[i + 1]:
            return False
        i += 1


def is_increasing(s: Sequence[int]) -> bool:
    """True iff every adjacent pair satisfies ``a <= b``."""
    return _increasing_from(s, 0)


def augment(s: Sequence[int]) -> Seq:
    """Prepend the last element: ``(x1, ..., xn) -> (xn, x1, ..., xn)``.

    The empty sequence and singletons are returned unchanged.
    """
    s = tuple(s)
    if not s:
        return ()
    rest = s[1:]
    if len(rest) > 0:
        return (rest[-1],) + s
    return (s[0],)


def _cyclic_aux_from(s: Sequence[int], i: int) -> bool:
    while True:
        if i >= len(s) or i + 1 == len(s):
            return True
        if s[i] <= s[i + 1]:
            i += 1
            continue
        # first strict descent: the remainder must be increasing
        return _increasing_from(s, i + 1)


def is_cyclic_aux(s: Sequence[int]) -> bool:
    """At most one strict descent among adjacent, non-wrapping pairs."""
    return _cyclic_aux_from(s, 0)


def is_cyclic(s: Sequence[int]) -> bool:
    return is_cyclic_aux(augment(s))


def is_anticyclic(s: Sequence[int]) -> bool:
    return is_cyclic(tuple(reversed(s)))


def orientation(s: Sequence[int]) -> OrientationSort:
    if is_cyclic(s):
        if is_anticyclic(s):
            return OrientationSort.BOTH
        return OrientationSort.CYCLIC
    if is_anticyclic(s):
        return OrientationSort.ANTICYCLIC
    return OrientationSort.NONE


# -- independent oracles -----------------------------------------------------


def cyclic_descent_count(s: Sequence[int]) -> int:
    """Number of i with ``s[i] > s[i+1]``, indices taken modulo ``len(s)``."""
    t = len(s)
    if t <= 1:
        return 0
    return sum(1 for i in range(t) if s[i] > s[(i + 1) % t])


def cyclic_ascent_count(s: Sequence[int]) -> int:
    """Number of i with ``s[i] < s[i+1]``, indices taken modulo ``len(s)``."""
    t = len(s)
    if t <= 1:
        return 0
    return sum(1 for i in range(t) if s[i] < s[(i + 1) % t])


def is_cyclic_by_count(s: Sequence[int]) -> bool:
    return cyclic_descent_count(s) <= 1


def is_anticyclic_by_count(s: Sequence[int]) -> bool:
    return cyclic_ascent_count(s) <= 1


def rotate(s: Sequence[int], r: int) -> Seq:
    """Move the first ``r`` elements (mod length) to the end."""
    s = tuple(s)
    if not s:
        return s
    r %= len(s)
    return s[r:] + s[:r]


def is_cyclic_by_rotation(s: Sequence[int]) -> bool:
    """True iff some rotation of ``s`` is weakly increasing."""
    s = tuple(s)
    if not s:
        return True
    return any(
        all(a <= b for a, b in zip(rot, rot[1:]))
        for rot in (rotate(s, r) for r in range(len(s)))
    )


def rank(s: Sequence[int]) -> int:
    """Number of distinct values in ``s``."""
    return len(set(s))
