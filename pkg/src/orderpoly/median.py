"""Median orders of a profile of relations, by exhaustive scan."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .relations import (
    OrderClass,
    Relation,
    arcs,
    enumerate_relations,
    relation_from_json,
    relation_to_json,
)


@dataclass(frozen=True)
class Profile:
    n: int
    relations: tuple[Relation, ...]

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        if not self.relations:
            raise ValueError("a profile needs at least one relation")
        if any(r.n != self.n for r in self.relations):
            raise ValueError("all profile members must share n")

    @classmethod
    def of(cls, relations: Sequence[Relation]) -> Profile:
        relations = tuple(relations)
        if not relations:
            raise ValueError("a profile needs at least one relation")
        return cls(relations[0].n, relations)

    def to_json(self) -> list:
        return [relation_to_json(r) for r in self.relations]

    @classmethod
    def from_json(cls, obj) -> Profile:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls.of([relation_from_json(x) for x in obj])


def remoteness(p: Relation, prof: Profile) -> int:
    """Total size of the symmetric differences between p and the profile members."""
    if p.n != prof.n:
        raise ValueError("relation and profile have different n")
    return sum((p.bits ^ r.bits).bit_count() for r in prof.relations)


def c_vector(prof: Profile) -> tuple[int, ...]:
    """c_ij = #members containing (i,j) minus #members not containing it."""
    m = len(prof.relations)
    out = []
    for k in range(len(arcs(prof.n))):
        inside = sum(r.bits >> k & 1 for r in prof.relations)
        out.append(inside - (m - inside))
    return tuple(out)


def linear_value(c: Sequence[int], p: Relation) -> int:
    return sum(v for k, v in enumerate(c) if p.bits >> k & 1)


@dataclass(frozen=True)
class MedianResult:
    value: int
    medians: tuple[Relation, ...]

    def to_json(self) -> dict:
        return {"value": self.value, "medians": [relation_to_json(r) for r in self.medians]}


def median_order(prof: Profile, cls: OrderClass | str) -> MedianResult:
    """All relations of the class at minimum remoteness, in canonical order."""
    best = None
    ties: list[Relation] = []
    for r in enumerate_relations(prof.n, OrderClass.parse(cls)):
        d = remoteness(r, prof)
        if best is None or d < best:
            best, ties = d, [r]
        elif d == best:
            ties.append(r)
    return MedianResult(best, tuple(ties))
