"""Green's relations on G(E), the poset of J-classes, and poset realization."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import NotAPartialOrder, ParseError, UnknownIdentifier
from .graph import NAME_RE, Graph, reachable, scc
from .semigroup import ZERO, Element, check_element


class GreenRelation(enum.Enum):
    L = "L"
    R = "R"
    J = "J"
    H = "H"
    D = "D"


def _prefixed(p, q) -> bool:
    """True iff ``p = q t`` for some path ``t``."""
    return p.strip_prefix(q) is not None


def leq_l(g: Graph, a: Element, b: Element) -> bool:
    """``L_a <= L_b``: for ``a = u v^-1``, ``b = x y^-1``, iff ``v = y t``."""
    check_element(g, a)
    check_element(g, b)
    if a is ZERO:
        return True
    if b is ZERO:
        return False
    return _prefixed(a.y, b.y)


def leq_r(g: Graph, a: Element, b: Element) -> bool:
    check_element(g, a)
    check_element(g, b)
    if a is ZERO:
        return True
    if b is ZERO:
        return False
    return _prefixed(a.x, b.x)


def leq_j(g: Graph, a: Element, b: Element) -> bool:
    """``J_a <= J_b`` iff the range of ``a`` is reachable from the range of ``b``."""
    check_element(g, a)
    check_element(g, b)
    if a is ZERO:
        return True
    if b is ZERO:
        return False
    return reachable(g, b.range, a.range)


def related(g: Graph, rel: GreenRelation | str, a: Element, b: Element) -> bool:
    rel = GreenRelation(rel)
    check_element(g, a)
    check_element(g, b)
    if a is ZERO or b is ZERO:
        return a is b
    if rel is GreenRelation.L:
        return a.y == b.y
    if rel is GreenRelation.R:
        return a.x == b.x
    if rel is GreenRelation.H:
        return a == b
    if rel is GreenRelation.D:
        return a.range == b.range
    part = scc(g)
    return part.component_of[a.range] == part.component_of[b.range]


# -- posets ----------------------------------------------------------------


@dataclass(frozen=True)
class Poset:
    """A finite poset; ``leq`` holds every pair ``(a, b)`` with ``a <= b``."""

    carrier: tuple[str, ...]
    leq: frozenset[tuple[str, str]]

    @classmethod
    def from_relation(cls, carrier: Iterable[str], pairs: Iterable[tuple[str, str]]) -> Poset:
        """Close ``pairs`` reflexively and transitively; reject cycles."""
        carrier = tuple(carrier)
        if len(set(carrier)) != len(carrier):
            raise NotAPartialOrder("duplicate poset element")
        members = set(carrier)
        up: dict[str, set[str]] = {c: {c} for c in carrier}
        for a, b in pairs:
            if a not in members or b not in members:
                raise UnknownIdentifier(f"pair ({a}, {b}) mentions an unknown element")
            up[a].add(b)
        changed = True
        while changed:
            changed = False
            for a in carrier:
                new = set().union(*(up[b] for b in up[a]))
                if new != up[a]:
                    up[a] = new
                    changed = True
        for a in carrier:
            for b in up[a]:
                if a != b and a in up[b]:
                    raise NotAPartialOrder(f"{a} <= {b} <= {a} violates antisymmetry")
        return cls(carrier, frozenset((a, b) for a in carrier for b in up[a]))

    def le(self, a: str, b: str) -> bool:
        return (a, b) in self.leq

    def is_partial_order(self) -> bool:
        c = self.carrier
        if any((a, a) not in self.leq for a in c):
            return False
        for a, b in self.leq:
            if a != b and (b, a) in self.leq:
                return False
        return all(
            (a, d) in self.leq
            for a, b in self.leq for (b2, d) in self.leq if b == b2
        )

    def covers(self) -> list[tuple[str, str]]:
        """Pairs ``(a, b)`` with ``a < b`` and nothing strictly between."""
        out = []
        for a, b in sorted(self.leq):
            if a == b:
                continue
            if not any(
                m not in (a, b) and (a, m) in self.leq and (m, b) in self.leq
                for m in self.carrier
            ):
                out.append((a, b))
        return out

    def __len__(self) -> int:
        return len(self.carrier)


def j_poset(g: Graph) -> Poset:
    """Nonzero J-classes of G(E), i.e. the components of ``g`` under reachability.

    Component ``U <= V`` iff a vertex of ``U`` is reachable from a vertex of
    ``V``.  Components are labelled by their least vertex.
    """
    part = scc(g)
    labels = [part.label(i) for i in range(len(part))]
    pairs = []
    for i, comp_u in enumerate(part.components):
        u = labels[i]
        for j, comp_v in enumerate(part.components):
            v = labels[j]
            if reachable(g, v, u):
                pairs.append((u, v))
    return Poset(tuple(labels), frozenset(pairs))


def _rank_key(p: Poset, a: str) -> tuple[int, int]:
    below = sum(1 for b in p.carrier if (b, a) in p.leq)
    above = sum(1 for b in p.carrier if (a, b) in p.leq)
    return (below, above)


def order_isomorphisms(p: Poset, q: Poset) -> Iterator[dict[str, str]]:
    """All order-isomorphisms ``p -> q`` by backtracking over rank classes."""
    if len(p) != len(q) or len(p.leq) != len(q.leq):
        return
    order = sorted(p.carrier, key=lambda a: (_rank_key(p, a), a))
    cand = {a: [b for b in sorted(q.carrier) if _rank_key(q, b) == _rank_key(p, a)] for a in order}
    image: dict[str, str] = {}
    used: set[str] = set()

    def rec(k):
        if k == len(order):
            yield dict(image)
            return
        a = order[k]
        for b in cand[a]:
            if b in used:
                continue
            if all(
                ((a, c) in p.leq) == ((b, image[c]) in q.leq)
                and ((c, a) in p.leq) == ((image[c], b) in q.leq)
                for c in image
            ):
                image[a] = b
                used.add(b)
                yield from rec(k + 1)
                del image[a]
                used.discard(b)

    yield from rec(0)


def order_isomorphic(p: Poset, q: Poset) -> dict[str, str] | None:
    return next(order_isomorphisms(p, q), None)


def realize_poset(p: Poset) -> Graph:
    """A simple acyclic graph whose J-class poset is ``p``.

    One vertex per element and an edge ``b -> a`` for every covering pair
    ``a < b``.  Edges are named ``h0``, ``h1``, ... in cover order.
    """
    if not p.is_partial_order():
        raise NotAPartialOrder("relation is not a partial order")
    for a in p.carrier:
        if not NAME_RE.match(a):
            raise ParseError(f"poset element {a!r} is not a valid vertex name")
    edges = [(f"h{i}", b, a) for i, (a, b) in enumerate(p.covers())]
    g = Graph(p.carrier, edges)
    realized = j_poset(g)
    if realized != Poset(tuple(sorted(p.carrier)), p.leq):
        raise RuntimeError("realized graph does not reproduce the poset")
    return g


# -- text format -------------------------------------------------------------


def parse_poset(text: str) -> Poset:
    """Parse ``element NAME`` / ``leq NAME NAME`` lines."""
    carrier: list[str] = []
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        words = line.split()
        if any(not NAME_RE.match(w) for w in words[1:]):
            raise ParseError(f"bad identifier in {line!r}", lineno)
        if words[0] == "element" and len(words) == 2:
            if words[1] in carrier:
                raise ParseError(f"duplicate element {words[1]!r}", lineno)
            carrier.append(words[1])
        elif words[0] == "leq" and len(words) == 3:
            pairs.append((words[1], words[2]))
        else:
            raise ParseError(f"syntax error: {line!r}", lineno)
    return Poset.from_relation(carrier, pairs)


def format_poset(p: Poset) -> str:
    lines = [f"element {a}" for a in p.carrier]
    lines += [f"leq {a} {b}" for a, b in sorted(p.leq) if a != b]
    return "\n".join(lines) + "\n"


def hasse_dot(p: Poset, name: str = "J") -> str:
    """DOT for the Hasse diagram, larger elements drawn above."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    lines += [f"  {a};" for a in p.carrier]
    lines += [f"  {a} -> {b};" for a, b in p.covers()]
    lines.append("}")
    return "\n".join(lines) + "\n"
