"""Transformations of the chain [n] = {0, ..., n-1} and their orientation."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from orient.sequences import (
    OrientationSort,
    Seq,
    is_anticyclic,
    is_cyclic,
    orientation,
    rank,
)

_TOKEN = re.compile(r"[0-9]+")


class InvalidDomainError(ValueError):
    pass


class ParseError(ValueError):
    """Raised for a malformed sequence literal; ``position`` is 1-based."""

    def __init__(self, token: str, position: int):
        super().__init__(f"invalid token {token!r} at position {position}")
        self.token = token
        self.position = position


def parse_naturals(text: str) -> Seq:
    """Parse ``"0, 1,0,1"`` into ``(0, 1, 0, 1)``.

    Only ASCII decimal digits, commas and surrounding spaces are accepted.
    A blank string is the empty sequence.
    """
    if not text.strip():
        return ()
    out = []
    for pos, raw in enumerate(text.split(","), start=1):
        tok = raw.strip(" \t")
        if not _TOKEN.fullmatch(tok):
            raise ParseError(tok, pos)
        out.append(int(tok))
    return tuple(out)


@dataclass(frozen=True)
class Transformation:
    """A total map of [n] into itself, stored as its image tuple."""

    images: Seq

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0:
            raise ValueError("a transformation needs n >= 1")
        for d, v in enumerate(images):
            if not isinstance(v, int) or not 0 <= v < n:
                raise ValueError(f"image f({d}) = {v!r} is outside [{n}]")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.images)) + ")"

    @classmethod
    def parse(cls, text: str) -> Transformation:
        return cls(parse_naturals(text))

    @classmethod
    def identity(cls, n: int) -> Transformation:
        return cls(tuple(range(n)))


def all_transformations(n: int) -> Iterator[Transformation]:
    """All n**n transformations of [n], lexicographic in the image tuple."""
    for images in itertools.product(range(n), repeat=n):
        yield Transformation(images)


def _check_domain(f: Transformation, domain: Sequence[int]) -> Seq:
    domain = tuple(domain)
    prev = -1
    for a in domain:
        if not 0 <= a < f.n:
            raise InvalidDomainError(f"domain member {a} is not in [{f.n}]")
        if a <= prev:
            raise InvalidDomainError(f"domain {domain} is not strictly increasing")
        prev = a
    return domain


def image_seq(f: Transformation, domain: Optional[Sequence[int]] = None) -> Seq:
    """Images of the (sorted) domain members, in domain order.

    ``domain`` defaults to the whole of [n].
    """
    if domain is None:
        return f.images
    return tuple(f.images[a] for a in _check_domain(f, domain))


def is_orientation_preserving(
    f: Transformation, domain: Optional[Sequence[int]] = None
) -> bool:
    return is_cyclic(image_seq(f, domain))


def is_orientation_reversing(
    f: Transformation, domain: Optional[Sequence[int]] = None
) -> bool:
    return is_anticyclic(image_seq(f, domain))


def mapping_orientation(
    f: Transformation, domain: Optional[Sequence[int]] = None
) -> OrientationSort:
    return orientation(image_seq(f, domain))


def rank_of(f: Transformation) -> int:
    """Size of the image of ``f``."""
    return rank(f.images)
