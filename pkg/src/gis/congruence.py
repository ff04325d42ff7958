"""Ideals, Rees quotients, and the non-Rees congruences of G(E)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import HypothesisFails, NotACongruence, ParseError, SizeGuard, UnknownIdentifier
from .graph import Graph, Path, reachable, scc
from .oracle import MulTable, Partition, build_table, congruence_closure, congruence_violation
from .semigroup import (
    ZERO,
    Element,
    NonZero,
    check_element,
    element_key,
    enumerate_elements,
    parse_element,
)


@dataclass(frozen=True)
class Ideal:
    """An ideal of G(E), recorded by the vertices it contains.

    The semigroup ideal is ``{0} | {u v^-1 : r(u) in vertices}``.
    """

    vertices: frozenset[str] = frozenset()

    def __contains__(self, v: str) -> bool:
        return v in self.vertices


@dataclass(frozen=True)
class ReesOf:
    ideal: Ideal


@dataclass(frozen=True)
class GeneratedBy:
    pairs: frozenset[tuple[Element, Element]]


@dataclass(frozen=True)
class NonReesCanonical:
    """The least congruence containing ``(v, e e^-1)`` where ``v = s(e)``."""

    v: str
    e: str

    @classmethod
    def for_edge(cls, g: Graph, e: str) -> NonReesCanonical:
        spec = cls(g.source(e), e)
        spec.validate(g)
        return spec

    def validate(self, g: Graph) -> None:
        if g.source(self.e) != self.v:
            raise HypothesisFails(f"edge {self.e!r} does not start at {self.v!r}")
        if not hypothesis_holds(g, self.e):
            raise HypothesisFails(
                f"some path from {self.v} to {g.range(self.e)} avoids {self.e!r} as its first edge"
            )


CongruenceSpec = ReesOf | GeneratedBy | NonReesCanonical


# -- ideals -----------------------------------------------------------------


def ideal_closure(g: Graph, seed: Iterable[str]) -> Ideal:
    """Smallest reachability-closed vertex set containing ``seed``."""
    out: set[str] = set()
    for v in seed:
        out |= g.reachable_from(v)
    return Ideal(frozenset(out))


def is_ideal(g: Graph, i: Ideal) -> bool:
    return all(g.has_vertex(v) and g.reachable_from(v) <= i.vertices for v in i.vertices)


def all_ideals(g: Graph) -> list[Ideal]:
    """Every ideal of G(E), i.e. every reachability-closed vertex set."""
    found = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        cur = frontier.pop()
        for v in g.vertices:
            if v not in cur:
                nxt = cur | g.reachable_from(v)
                if nxt not in found:
                    found.add(nxt)
                    frontier.append(nxt)
    return [Ideal(s) for s in sorted(found, key=lambda s: (len(s), sorted(s)))]


def ideal_contains(g: Graph, i: Ideal, a: Element) -> bool:
    check_element(g, a)
    return a is ZERO or a.range in i.vertices


def rees_quotient_graph(g: Graph, i: Ideal) -> Graph:
    """``E`` with the ideal's vertices and every incident edge removed."""
    return g.remove_vertices(i.vertices)


def rees_congruence_classes(g: Graph, i: Ideal) -> list[tuple[Element, ...]]:
    """Classes of the Rees congruence: the ideal in one block, singletons elsewhere."""
    g.require_acyclic()
    elements = enumerate_elements(g)
    inside = tuple(a for a in elements if ideal_contains(g, i, a))
    classes = [inside] + [(a,) for a in elements if not ideal_contains(g, i, a)]
    return sorted(classes, key=lambda c: element_key(c[0]))


# -- classification ---------------------------------------------------------


def hypothesis_holds(g: Graph, e: str) -> bool:
    """Every nontrivial path from ``s(e)`` to ``r(e)`` starts with ``e``.

    A path not starting with ``e`` starts with some other edge ``f`` at
    ``s(e)`` and continues from ``r(f)`` to ``r(e)``, so checking reachability
    from each such ``r(f)`` suffices.
    """
    v, target = g.source(e), g.range(e)
    return not any(f != e and reachable(g, g.range(f), target) for f in g.out_edges(v))


def has_only_rees_congruences(g: Graph) -> bool:
    return all(not hypothesis_holds(g, e) for e in g.edges)


def is_congruence_free(g: Graph) -> bool:
    """One strongly connected component and every out-degree at least 2.

    Only meaningful when ``|G(E)| > 2``, so the empty graph and the single
    edgeless vertex are refused.
    """
    if len(g.vertices) == 0 or (len(g.vertices) == 1 and not g.edges):
        raise SizeGuard("congruence-freeness is classified only for |G(E)| > 2")
    return len(scc(g)) == 1 and all(g.out_degree(v) >= 2 for v in g.vertices)


# -- the canonical non-Rees congruence ----------------------------------------


def nonrees_ideal(g: Graph, spec: NonReesCanonical) -> Ideal:
    """The ideal generated by ``r(f)`` for edges ``f != e`` leaving ``s(e)``."""
    return ideal_closure(g, [g.range(f) for f in g.out_edges(spec.v) if f != spec.e])


def nonrees_canon(g: Graph, spec: NonReesCanonical, a: Element) -> Element:
    """Strip a common trailing ``e`` from both paths until none remains.

    Each strip lands both ranges back on ``s(e)``, so the result is again a
    valid element; every class of the non-ideal part is one such tower.
    """
    check_element(g, a)
    if a is ZERO:
        return a
    x, y = a.x.edges, a.y.edges
    n = 0
    while n < len(x) and n < len(y) and x[-1 - n] == spec.e and y[-1 - n] == spec.e:
        n += 1
    if n == 0:
        return a
    return NonZero(_drop_tail(a.x, n, spec.v), _drop_tail(a.y, n, spec.v))


def _drop_tail(p: Path, n: int, end: str) -> Path:
    edges = p.edges[: len(p.edges) - n]
    return Path(p.source, edges, end) if edges else Path.vertex(p.source)


def nonrees_member(g: Graph, spec: NonReesCanonical, a: Element, b: Element) -> bool:
    """Membership of ``(a, b)`` in the least congruence containing ``(v, e e^-1)``."""
    spec.validate(g)
    if nonrees_canon(g, spec, a) == nonrees_canon(g, spec, b):
        return True
    i = nonrees_ideal(g, spec)
    return ideal_contains(g, i, a) and ideal_contains(g, i, b)


# -- quotients ------------------------------------------------------------------


def quotient_table(g: Graph, classes: Iterable[Iterable[Element]]) -> MulTable:
    """Multiplication table of G(E) modulo a congruence given by its classes.

    The quotient's elements are the least member of each class.
    """
    t = build_table(g)
    classes = [sorted(c, key=element_key) for c in classes]
    seen: set[Element] = set()
    for c in classes:
        for a in c:
            check_element(g, a)
            if a in seen:
                raise NotACongruence(f"{a} occurs in two classes")
            seen.add(a)
    missing = [a for a in t.elements if a not in seen]
    if missing:
        raise NotACongruence(f"classes do not cover {missing[0]}")
    part = classes_to_partition(list(t.elements), classes)
    bad = congruence_violation(t, part)
    if bad is not None:
        a, b, z = (t.elements[k] for k in bad)
        raise NotACongruence(f"{a} ~ {b} but their products with {z} are not related", witness=(a, b, z))
    reps = [t.index[c[0]] for c in classes]
    cls_of = {}
    for k, c in enumerate(classes):
        for a in c:
            cls_of[t.index[a]] = k
    table = [[cls_of[t.rows[a][b]] for b in reps] for a in reps]
    return MulTable([c[0] for c in classes], table)


def congruence_classes(g: Graph, spec: CongruenceSpec) -> list[tuple[Element, ...]]:
    """Resolve any congruence descriptor to its classes on a finite G(E)."""
    g.require_acyclic()
    elements = enumerate_elements(g)
    if isinstance(spec, ReesOf):
        return rees_congruence_classes(g, spec.ideal)
    if isinstance(spec, GeneratedBy):
        index = {a: k for k, a in enumerate(elements)}
        t = build_table(g)
        part = congruence_closure(t, [(index[a], index[b]) for a, b in spec.pairs])
        return [tuple(elements[k] for k in block) for block in part.blocks]
    if isinstance(spec, NonReesCanonical):
        spec.validate(g)
        blocks: list[list[Element]] = []
        for a in elements:
            for block in blocks:
                if nonrees_member(g, spec, block[0], a):
                    block.append(a)
                    break
            else:
                blocks.append([a])
        return [tuple(b) for b in blocks]
    raise TypeError(f"not a congruence descriptor: {spec!r}")


def classes_to_partition(elements: list[Element], classes) -> Partition:
    index = {a: k for k, a in enumerate(elements)}
    return Partition.from_blocks(len(elements), [[index[a] for a in c] for c in classes])


# -- text format ---------------------------------------------------------------


def parse_pairs(g: Graph, text: str) -> GeneratedBy:
    """Parse ``pair ELEMENT ELEMENT`` lines."""
    pairs = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        words = line.split()
        if words[0] != "pair" or len(words) != 3:
            raise ParseError(f"syntax error: {line!r}", lineno)
        try:
            pairs.add((parse_element(g, words[1]), parse_element(g, words[2])))
        except (ParseError, UnknownIdentifier) as exc:
            raise ParseError(str(exc), lineno) from None
    return GeneratedBy(frozenset(pairs))

