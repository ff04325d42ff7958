"""Representations of G(E) by partial transformations."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, Path, enumerate_paths
from .semigroup import (
    ZERO,
    Element,
    enumerate_elements,
    format_element,
    invert,
    is_idempotent,
    multiply,
)

INFINITE = math.inf


@dataclass(frozen=True)
class PartialMap:
    """Partial self-map of ``0..degree-1``; ``images[i]`` is None off the domain."""

    images: tuple[int | None, ...]

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.images) if x is not None)

    def __call__(self, i: int) -> int | None:
        return self.images[i]

    def then(self, other: PartialMap) -> PartialMap:
        """Left-to-right composition: apply ``self`` first."""
        return PartialMap(tuple(None if x is None else other.images[x] for x in self.images))

    def __str__(self):
        return ", ".join(f"{i}->{x}" for i, x in enumerate(self.images) if x is not None)


@dataclass(frozen=True)
class Representation:
    elements: tuple[Element, ...]
    maps: tuple[PartialMap, ...]

    @property
    def degree(self) -> int:
        return self.maps[0].degree if self.maps else 0

    @property
    def assignment(self) -> dict[Element, PartialMap]:
        return dict(zip(self.elements, self.maps))

    def is_faithful(self) -> bool:
        return len(set(self.maps)) == len(self.maps)

    def is_homomorphism(self, g: Graph) -> bool:
        rep = self.assignment
        return all(
            rep[multiply(g, a, b)] == rep[a].then(rep[b])
            for a in self.elements for b in self.elements
        )

    def format(self) -> str:
        return "\n".join(
            f"{format_element(a)} : {m}" for a, m in zip(self.elements, self.maps)
        ) + "\n"


def is_join_irreducible(g: Graph, x: Path) -> bool:
    """Whether ``x x^-1`` is join-irreducible among the idempotents."""
    g.check_path(x)
    return g.out_degree(x.end) <= 1


def min_faithful_degree(g: Graph) -> int | float:
    """Least degree of a faithful representation by partial transformations.

    For acyclic ``g`` this counts paths ending at a vertex of out-degree at
    most one; otherwise G(E) is countably infinite and ``INFINITE`` is returned.
    """
    if not g.is_acyclic():
        return INFINITE
    return sum(1 for x in enumerate_paths(g) if g.out_degree(x.end) <= 1)


def join_irreducible_count(g: Graph) -> int:
    g.require_acyclic()
    return sum(
        1 for a in enumerate_elements(g)
        if a is not ZERO and is_idempotent(a) and is_join_irreducible(g, a.x)
    )


def vagner_preston(g: Graph) -> Representation:
    """Right regular action of G(E) on itself, restricted to ``x a a^-1 = x``."""
    g.require_acyclic()
    elements = enumerate_elements(g)
    index = {a: i for i, a in enumerate(elements)}
    maps = []
    for a in elements:
        proj = multiply(g, a, invert(a))
        images: list[int | None] = []
        for x in elements:
            if multiply(g, x, proj) == x:
                images.append(index[multiply(g, x, a)])
            else:
                images.append(None)
        maps.append(PartialMap(tuple(images)))
    return Representation(tuple(elements), tuple(maps))


def representation_from_images(elements: Sequence[Element], images) -> Representation:
    return Representation(tuple(elements), tuple(PartialMap(tuple(images[i])) for i in range(len(elements))))
