"""Full-domain orientation census over all n**n transformations of [n]."""

from __future__ import annotations

from dataclasses import dataclass, field

from orient.mappings import all_transformations, mapping_orientation
from orient.sequences import OrientationSort, Seq, is_cyclic_by_rotation
from orient.triples import DEFAULT_BUDGET, BudgetExceededError


class CrossCheckError(RuntimeError):
    """Two independent derivations of the same quantity disagree."""


@dataclass
class MappingCensus:
    n: int
    total: int
    counts: dict[OrientationSort, int]
    samples: dict[OrientationSort, list[Seq]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "counts": {o.value: self.counts[o] for o in OrientationSort},
            "samples": {
                o.value: [list(s) for s in self.samples.get(o, [])]
                for o in OrientationSort
            },
            "cross_check": "rotation-oracle",
        }


def _rotation_sort(images: Seq) -> OrientationSort:
    return OrientationSort.from_flags(
        is_cyclic_by_rotation(images), is_cyclic_by_rotation(images[::-1])
    )


def run_enumerate(
    n: int, *, budget: int | None = None, samples: int = 3
) -> MappingCensus:
    """Classify every transformation of [n] over its full domain.

    Counts are derived twice, once with the recursive classifier and once
    with the rotation oracle; a mismatch raises ``CrossCheckError``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if budget is None:
        budget = DEFAULT_BUDGET
    total = n**n
    if total > budget:
        raise BudgetExceededError(total, budget)

    counts = {o: 0 for o in OrientationSort}
    oracle = {o: 0 for o in OrientationSort}
    picked: dict[OrientationSort, list[Seq]] = {o: [] for o in OrientationSort}
    for f in all_transformations(n):
        sort = mapping_orientation(f)
        counts[sort] += 1
        oracle[_rotation_sort(f.images)] += 1
        if len(picked[sort]) < samples:
            picked[sort].append(f.images)

    if counts != oracle:
        raise CrossCheckError(
            f"census mismatch for n={n}: recursive {counts} vs rotation {oracle}"
        )
    if sum(counts.values()) != total:
        raise CrossCheckError(f"census for n={n} does not sum to {total}")
    return MappingCensus(n, total, counts, picked)
