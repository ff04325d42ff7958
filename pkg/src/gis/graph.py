"""Finite directed multigraphs, paths, and strongly connected components."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import CyclicGraph, InputError, InvalidPath, ParseError, UnknownIdentifier

NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")


@dataclass(frozen=True, order=False)
class Path:
    """A path: a start vertex followed by a (possibly empty) edge sequence.

    ``end`` is the range vertex.  It is determined by the edges, and stored
    so that arithmetic on paths never needs the graph.
    """

    source: str
    edges: tuple[str, ...] = ()
    end: str = ""

    def __post_init__(self):
        if not self.end:
            if self.edges:
                raise ValueError("a path with edges needs its end vertex")
            object.__setattr__(self, "end", self.source)

    @classmethod
    def vertex(cls, v: str) -> Path:
        return cls(v, (), v)

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def key(self) -> tuple:
        return (len(self.edges), self.edges, self.source)

    def is_vertex(self) -> bool:
        return not self.edges

    def concat(self, other: Path) -> Path:
        if self.end != other.source:
            raise ValueError(f"cannot concatenate {self} and {other}")
        if not other.edges:
            return self
        if not self.edges:
            return other
        return Path(self.source, self.edges + other.edges, other.end)

    def __add__(self, other: Path) -> Path:
        return self.concat(other)

    def strip_prefix(self, prefix: Path) -> Path | None:
        """Return ``t`` with ``self == prefix + t``, or None."""
        if prefix.source != self.source:
            return None
        n = len(prefix.edges)
        if self.edges[:n] != prefix.edges:
            return None
        return Path(prefix.end, self.edges[n:], self.end)

    def __str__(self) -> str:
        return ".".join(self.edges) if self.edges else self.source


@dataclass(frozen=True)
class SccPartition:
    components: tuple[frozenset[str], ...]
    component_of: dict[str, int] = field(compare=False, hash=False)

    def __len__(self) -> int:
        return len(self.components)

    def label(self, index: int) -> str:
        """Least vertex identifier of a component; used as its name."""
        return min(self.components[index])


class Graph:
    """Immutable finite directed multigraph with named vertices and edges."""

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[tuple[str, str, str]] = ()):
        verts = list(vertices)
        if len(set(verts)) != len(verts):
            dup = next(v for v in verts if verts.count(v) > 1)
            raise InputError(f"duplicate vertex {dup!r}")
        vset = set(verts)
        src: dict[str, str] = {}
        rng: dict[str, str] = {}
        for e, s, r in edges:
            if e in src:
                raise InputError(f"duplicate edge {e!r}")
            for x in (s, r):
                if x not in vset:
                    raise UnknownIdentifier(f"edge {e!r} references unknown vertex {x!r}")
            src[e] = s
            rng[e] = r
        self.vertices: tuple[str, ...] = tuple(sorted(vset))
        self.edges: tuple[str, ...] = tuple(sorted(src))
        self._src = src
        self._rng = rng

    # -- basic structure -------------------------------------------------

    def source(self, e: str) -> str:
        try:
            return self._src[e]
        except KeyError:
            raise UnknownIdentifier(f"unknown edge {e!r}") from None

    def range(self, e: str) -> str:
        try:
            return self._rng[e]
        except KeyError:
            raise UnknownIdentifier(f"unknown edge {e!r}") from None

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_set

    def has_edge(self, e: str) -> bool:
        return e in self._src

    @cached_property
    def _vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def check_vertex(self, v: str) -> None:
        if v not in self._vertex_set:
            raise UnknownIdentifier(f"unknown vertex {v!r}")

    def triples(self) -> list[tuple[str, str, str]]:
        return [(e, self._src[e], self._rng[e]) for e in self.edges]

    @cached_property
    def _out(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[self._src[e]].append(e)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def _in(self) -> dict[str, tuple[str, ...]]:
        inc: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[self._rng[e]].append(e)
        return {v: tuple(es) for v, es in inc.items()}

    def out_edges(self, v: str) -> tuple[str, ...]:
        self.check_vertex(v)
        return self._out[v]

    def in_edges(self, v: str) -> tuple[str, ...]:
        self.check_vertex(v)
        return self._in[v]

    def out_degree(self, v: str) -> int:
        return len(self.out_edges(v))

    def in_degree(self, v: str) -> int:
        return len(self.in_edges(v))

    def multiplicity(self, u: str, w: str) -> int:
        return sum(1 for e in self._out[u] if self._rng[e] == w)

    def is_simple(self) -> bool:
        pairs = set()
        for e in self.edges:
            s, r = self._src[e], self._rng[e]
            if s == r or (s, r) in pairs:
                return False
            pairs.add((s, r))
        return True

    def remove_vertices(self, removed: Iterable[str]) -> Graph:
        gone = set(removed)
        for v in gone:
            self.check_vertex(v)
        return Graph(
            [v for v in self.vertices if v not in gone],
            [(e, s, r) for e, s, r in self.triples() if s not in gone and r not in gone],
        )

    # -- paths ---------------------------------------------------------

    def path(self, *edges: str, source: str | None = None) -> Path:
        """Build a validated path from edge names (or a vertex via ``source``)."""
        if not edges:
            if source is None:
                raise InvalidPath("a length-0 path needs its vertex")
            self.check_vertex(source)
            return Path.vertex(source)
        start = self.source(edges[0])
        if source is not None and source != start:
            raise InvalidPath(f"path starting with {edges[0]!r} does not start at {source!r}")
        for a, b in zip(edges, edges[1:]):
            if self.range(a) != self.source(b):
                raise InvalidPath(f"edges {a!r} and {b!r} are not consecutive")
        return Path(start, tuple(edges), self.range(edges[-1]))

    def is_path(self, p: Path) -> bool:
        if p.source not in self._vertex_set:
            return False
        at = p.source
        for e in p.edges:
            if self._src.get(e) != at:
                return False
            at = self._rng[e]
        return at == p.end

    def check_path(self, p: Path) -> None:
        if not self.is_path(p):
            raise InvalidPath(f"{p} is not a path of this graph")

    # -- reachability --------------------------------------------------

    @cached_property
    def _reach(self) -> dict[str, frozenset[str]]:
        result = {}
        for v in self.vertices:
            seen = {v}
            queue = deque([v])
            while queue:
                u = queue.popleft()
                for e in self._out[u]:
                    w = self._rng[e]
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            result[v] = frozenset(seen)
        return result

    def reachable_from(self, v: str) -> frozenset[str]:
        self.check_vertex(v)
        return self._reach[v]

    def is_acyclic(self) -> bool:
        if any(self._src[e] == self._rng[e] for e in self.edges):
            return False
        return all(len(c) == 1 for c in scc(self).components)

    def require_acyclic(self) -> None:
        if not self.is_acyclic():
            raise CyclicGraph("graph has a cycle, so G(E) is infinite")

    # -- dunder --------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.triples() == other.triples()

    def __hash__(self):
        return hash((self.vertices, tuple(self.triples())))

    def __repr__(self):
        return f"Graph({list(self.vertices)!r}, {self.triples()!r})"


def reachable(g: Graph, start: str, stop: str) -> bool:
    """True iff a path (possibly of length 0) runs from ``start`` to ``stop``."""
    g.check_vertex(stop)
    return stop in g.reachable_from(start)


def scc(g: Graph) -> SccPartition:
    """Strongly connected components (iterative Tarjan).

    Components are ordered by their least vertex identifier.
    """
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    found: list[frozenset[str]] = []
    counter = 0

    for root in g.vertices:
        if root in index:
            continue
        work = [(root, iter(g._out[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for e in it:
                w = g.range(e)
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(g._out[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                found.append(frozenset(comp))

    found.sort(key=min)
    component_of = {v: i for i, comp in enumerate(found) for v in comp}
    return SccPartition(tuple(found), component_of)


def condensation(g: Graph) -> Graph:
    """The simple acyclic graph of components and inter-component edges.

    Each component is named by its least vertex; edges are named ``c0``,
    ``c1``, ... in (source, range) order.
    """
    part = scc(g)
    labels = [part.label(i) for i in range(len(part))]
    pairs = set()
    for e, s, r in g.triples():
        cs, cr = part.component_of[s], part.component_of[r]
        if cs != cr:
            pairs.add((labels[cs], labels[cr]))
    return Graph(labels, [(f"c{i}", s, r) for i, (s, r) in enumerate(sorted(pairs))])


def _paths_up_to(g: Graph, max_len: int | None) -> Iterator[Path]:
    level = [Path.vertex(v) for v in g.vertices]
    length = 0
    while level:
        yield from level
        if max_len is not None and length >= max_len:
            return
        length += 1
        level = [
            Path(p.source, p.edges + (e,), g.range(e))
            for p in level
            for e in g._out[p.end]
        ]


def enumerate_paths(g: Graph) -> list[Path]:
    """All paths of an acyclic graph, ordered by (length, edges, source)."""
    g.require_acyclic()
    return sorted(_paths_up_to(g, None), key=lambda p: p.key)


def enumerate_paths_bounded(g: Graph, max_len: int) -> list[Path]:
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    return sorted(_paths_up_to(g, max_len), key=lambda p: p.key)


# -- text format -------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph format (``vertex NAME`` / ``edge ID SRC RNG``)."""
    vertices: list[str] = []
    seen_v: set[str] = set()
    edges: list[tuple[str, str, str]] = []
    seen_e: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        words = line.split()
        for w in words[1:]:
            if not NAME_RE.match(w):
                raise ParseError(f"bad identifier {w!r}", lineno)
        if words[0] == "vertex" and len(words) == 2:
            if words[1] in seen_v:
                raise ParseError(f"duplicate vertex {words[1]!r}", lineno)
            seen_v.add(words[1])
            vertices.append(words[1])
        elif words[0] == "edge" and len(words) == 4:
            e, s, r = words[1:]
            if e in seen_e:
                raise ParseError(f"duplicate edge {e!r}", lineno)
            for x in (s, r):
                if x not in seen_v:
                    raise ParseError(f"unknown vertex {x!r}", lineno)
            seen_e.add(e)
            edges.append((e, s, r))
        else:
            raise ParseError(f"syntax error: {line!r}", lineno)
    return Graph(vertices, edges)


def format_graph(g: Graph) -> str:
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {e} {s} {r}" for e, s, r in g.triples()]
    return "".join(line + "\n" for line in lines)


def graph_dot(g: Graph, name: str = "E") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f"  {v};" for v in g.vertices]
    lines += [f'  {s} -> {r} [label="{e}"];' for e, s, r in g.triples()]
    lines.append("}")
    return "\n".join(lines) + "\n"
