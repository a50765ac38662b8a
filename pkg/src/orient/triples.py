"""Length-3 subsequence profiles and exhaustive sweeps over small sequences.

The all-triples rule predicts that a sequence is cyclic iff every length-3
subsequence is cyclic, and anticyclic iff every length-3 subsequence is
anticyclic.  ``verify_theorem3`` checks that prediction against the actual
orientation for every sequence within the given bounds; failures with rank
other than 2 are violations, failures with rank 2 are the expected
exceptions and are collected as counterexamples.

Sweeps are split into chunks keyed by (length, first element).  Chunks may
run in worker processes; partial reports are merged and their lists sorted
by (length, values), which is the single-threaded enumeration order, so the
result does not depend on the number of workers.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from orient.sequences import (
    OrientationSort,
    Seq,
    is_cyclic,
    is_increasing,
    orientation,
    rank,
)

DEFAULT_BUDGET = 10**7

OrientationProfile = dict[tuple[int, int, int], OrientationSort]


class BudgetExceededError(RuntimeError):
    def __init__(self, needed: int, budget: int):
        super().__init__(f"sweep needs {needed} objects, budget is {budget}")
        self.needed = needed
        self.budget = budget


class UndefinedPredictionError(ValueError):
    pass


def _seq_key(s: Seq) -> tuple[int, Seq]:
    return (len(s), s)


@dataclass
class VerificationReport:
    kind: str
    max_length: int
    alphabet_size: int
    min_length: int = 3
    checked: int = 0
    violations: list[Seq] = field(default_factory=list)
    counterexamples: list[Seq] = field(default_factory=list)
    census: dict[OrientationSort, int] = field(
        default_factory=lambda: {o: 0 for o in OrientationSort}
    )
    # rank -> [checked, failed]; length -> [checked, failed]
    by_rank: dict[int, list[int]] = field(default_factory=dict)
    by_length: dict[int, list[int]] = field(default_factory=dict)
    subsequence_pairs: int = 0

    @property
    def bounds(self) -> tuple[int, int]:
        return (self.max_length, self.alphabet_size)

    @property
    def ok(self) -> bool:
        return not self.violations

    def _tally(self, s: Seq, sort: OrientationSort, failed: bool) -> None:
        self.checked += 1
        self.census[sort] += 1
        for table, key in ((self.by_rank, rank(s)), (self.by_length, len(s))):
            row = table.setdefault(key, [0, 0])
            row[0] += 1
            row[1] += failed

    def merge(self, other: VerificationReport) -> VerificationReport:
        """Combine two partial reports over disjoint parts of the same sweep."""
        if (self.kind, self.bounds, self.min_length) != (
            other.kind,
            other.bounds,
            other.min_length,
        ):
            raise ValueError("cannot merge reports of different sweeps")
        out = VerificationReport(
            self.kind, self.max_length, self.alphabet_size, self.min_length
        )
        out.checked = self.checked + other.checked
        out.subsequence_pairs = self.subsequence_pairs + other.subsequence_pairs
        out.violations = sorted(self.violations + other.violations, key=_seq_key)
        out.counterexamples = sorted(
            self.counterexamples + other.counterexamples, key=_seq_key
        )
        out.census = {o: self.census[o] + other.census[o] for o in OrientationSort}
        for name in ("by_rank", "by_length"):
            mine, theirs = getattr(self, name), getattr(other, name)
            merged = {
                k: [
                    mine.get(k, [0, 0])[0] + theirs.get(k, [0, 0])[0],
                    mine.get(k, [0, 0])[1] + theirs.get(k, [0, 0])[1],
                ]
                for k in sorted(set(mine) | set(theirs))
            }
            setattr(out, name, merged)
        return out

    def to_dict(self) -> dict:
        d = {
            "kind": self.kind,
            "bounds": {
                "min_length": self.min_length,
                "max_length": self.max_length,
                "alphabet_size": self.alphabet_size,
            },
            "checked": self.checked,
            "violations": [list(s) for s in self.violations],
            "counterexamples": [list(s) for s in self.counterexamples],
            "census": {o.value: self.census[o] for o in OrientationSort},
            "by_rank": {
                str(k): {"checked": v[0], "failed": v[1]}
                for k, v in sorted(self.by_rank.items())
            },
            "by_length": {
                str(k): {"checked": v[0], "failed": v[1]}
                for k, v in sorted(self.by_length.items())
            },
        }
        if self.kind == "closure":
            d["subsequence_pairs"] = self.subsequence_pairs
        return d


# -- profiles ----------------------------------------------------------------


def subsequences(s: Sequence[int], k: int) -> list[tuple[tuple[int, ...], Seq]]:
    """All ``(indices, values)`` pairs for length-``k`` subsequences of ``s``.

    Index tuples are strictly increasing and listed lexicographically.  When
    ``k`` exceeds ``len(s)`` the result is empty.
    """
    s = tuple(s)
    return [
        (idx, tuple(s[i] for i in idx))
        for idx in itertools.combinations(range(len(s)), k)
    ]


@lru_cache(maxsize=None)
def _triple_sort(t: Seq) -> OrientationSort:
    return orientation(t)


def triple_profile(s: Sequence[int]) -> OrientationProfile:
    return {idx: _triple_sort(sub) for idx, sub in subsequences(s, 3)}


def predicted_orientation_from_triples(s: Sequence[int]) -> OrientationSort:
    if len(s) < 3:
        raise UndefinedPredictionError(
            f"length {len(s)} sequence has no length-3 subsequences"
        )
    sorts = triple_profile(s).values()
    return OrientationSort.from_flags(
        all(o.admits_cyclic for o in sorts),
        all(o.admits_anticyclic for o in sorts),
    )


def is_determined_by_triples(s: Sequence[int]) -> bool:
    return predicted_orientation_from_triples(s) == orientation(s)


# -- sweeps ------------------------------------------------------------------


def _sweep_size(lengths: range, alphabet_size: int) -> int:
    return sum(alphabet_size**length for length in lengths)


def _check_budget(needed: int, budget: int | None) -> None:
    if budget is None:
        budget = DEFAULT_BUDGET
    if needed > budget:
        raise BudgetExceededError(needed, budget)


def _chunk(length: int, first: int, alphabet_size: int):
    for rest in itertools.product(range(alphabet_size), repeat=length - 1):
        yield (first,) + rest


def _theorem3_chunk(args: tuple[int, int, int, int]) -> VerificationReport:
    length, first, max_length, alphabet_size = args
    rep = VerificationReport("theorem3", max_length, alphabet_size, 3)
    for s in _chunk(length, first, alphabet_size):
        actual = orientation(s)
        failed = predicted_orientation_from_triples(s) != actual
        rep._tally(s, actual, failed)
        if failed:
            if rank(s) == 2:
                rep.counterexamples.append(s)
            else:
                rep.violations.append(s)
    return rep


def _closure_chunk(args: tuple[int, int, int, int]) -> VerificationReport:
    length, first, max_length, alphabet_size = args
    rep = VerificationReport("closure", max_length, alphabet_size, 1)
    for s in _chunk(length, first, alphabet_size):
        inc, cyc = is_increasing(s), is_cyclic(s)
        failed = False
        for mask in itertools.product((False, True), repeat=length):
            u = tuple(itertools.compress(s, mask))
            rep.subsequence_pairs += 1
            if (inc and not is_increasing(u)) or (cyc and not is_cyclic(u)):
                failed = True
        rep._tally(s, orientation(s), failed)
        if failed:
            rep.violations.append(s)
    return rep


def _run_sweep(
    worker: Callable[[tuple[int, int, int, int]], VerificationReport],
    empty: VerificationReport,
    lengths: range,
    jobs: int,
) -> VerificationReport:
    tasks = [
        (length, first, empty.max_length, empty.alphabet_size)
        for length in lengths
        for first in range(empty.alphabet_size)
    ]
    if jobs <= 1 or len(tasks) <= 1:
        parts = map(worker, tasks)
        report = empty
        for part in parts:
            report = report.merge(part)
        return report
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        report = empty
        for part in pool.map(worker, tasks):
            report = report.merge(part)
    return report


def verify_theorem3(
    max_length: int,
    alphabet_size: int,
    *,
    budget: int | None = None,
    jobs: int = 1,
) -> VerificationReport:
    """Check the all-triples rule on every sequence of length 3..max_length."""
    if max_length < 3:
        raise ValueError("max_length must be at least 3")
    if alphabet_size < 1:
        raise ValueError("alphabet_size must be at least 1")
    lengths = range(3, max_length + 1)
    _check_budget(_sweep_size(lengths, alphabet_size), budget)
    empty = VerificationReport("theorem3", max_length, alphabet_size, 3)
    return _run_sweep(_theorem3_chunk, empty, lengths, jobs)


def subsequence_closure_check(
    max_length: int,
    alphabet_size: int,
    *,
    budget: int | None = None,
    jobs: int = 1,
) -> VerificationReport:
    """Check that subsequences of increasing (cyclic) sequences stay so.

    Every sequence of length 1..max_length is paired with each of its
    2**length index-subsequences, the empty one included.
    """
    if max_length < 1:
        raise ValueError("max_length must be at least 1")
    if alphabet_size < 1:
        raise ValueError("alphabet_size must be at least 1")
    lengths = range(1, max_length + 1)
    _check_budget(_sweep_size(lengths, alphabet_size), budget)
    empty = VerificationReport("closure", max_length, alphabet_size, 1)
    return _run_sweep(_closure_chunk, empty, lengths, jobs)


def find_rank2_counterexamples(
    length: int, alphabet_size: int, *, budget: int | None = None
) -> list[Seq]:
    """Rank-2 sequences of exactly ``length`` not determined by their triples."""
    if length < 3:
        raise ValueError("length must be at least 3")
    _check_budget(alphabet_size**length, budget)
    return [
        s
        for s in itertools.product(range(alphabet_size), repeat=length)
        if rank(s) == 2 and not is_determined_by_triples(s)
    ]


def reverify(report: VerificationReport) -> bool:
    """Recompute every listed violation / counterexample from scratch."""
    if report.kind == "theorem3":
        return all(
            rank(s) != 2 and not is_determined_by_triples(s) for s in report.violations
        ) and all(
            rank(s) == 2 and not is_determined_by_triples(s)
            for s in report.counterexamples
        )
    for s in report.violations:
        subs = [u for k in range(len(s) + 1) for _, u in subsequences(s, k)]
        if not any(
            (is_increasing(s) and not is_increasing(u))
            or (is_cyclic(s) and not is_cyclic(u))
            for u in subs
        ):
            return False
    return not report.counterexamples
