"""Graph homomorphisms and their extension to G(E)."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Callable, Iterator, Mapping

from .errors import (
    NotAHomomorphism,
    NotInjective,
    NotIsomorphism,
    NotSimpleAcyclic,
    ParseError,
)
from .graph import NAME_RE, Graph, Path
from .green import j_poset, order_isomorphisms
from .semigroup import (
    ZERO,
    Element,
    NonZero,
    check_element,
    edge,
    enumerate_elements,
    format_element,
    multiply,
    vertex,
)


@dataclass(frozen=True)
class GraphHom:
    phi0: Mapping[str, str] = field(hash=False)
    phi1: Mapping[str, str] = field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "phi0", dict(self.phi0))
        object.__setattr__(self, "phi1", dict(self.phi1))

    def __hash__(self):
        return hash((tuple(sorted(self.phi0.items())), tuple(sorted(self.phi1.items()))))

    def compose(self, other: GraphHom) -> GraphHom:
        """``other`` after ``self``."""
        return GraphHom(
            {v: other.phi0[w] for v, w in self.phi0.items()},
            {e: other.phi1[f] for e, f in self.phi1.items()},
        )

    def inverse(self) -> GraphHom:
        return GraphHom({w: v for v, w in self.phi0.items()}, {f: e for e, f in self.phi1.items()})

    def is_injective(self) -> bool:
        return (len(set(self.phi0.values())) == len(self.phi0)
                and len(set(self.phi1.values())) == len(self.phi1))

    def format(self) -> str:
        lines = [f"v {a} {b}" for a, b in sorted(self.phi0.items())]
        lines += [f"e {a} {b}" for a, b in sorted(self.phi1.items())]
        return "\n".join(lines) + "\n"


def identity_hom(g: Graph) -> GraphHom:
    return GraphHom({v: v for v in g.vertices}, {e: e for e in g.edges})


def _check_total(a: Graph, b: Graph, h: GraphHom) -> None:
    if set(h.phi0) != set(a.vertices):
        raise NotAHomomorphism("vertex map is not total on the source graph")
    if set(h.phi1) != set(a.edges):
        raise NotAHomomorphism("edge map is not total on the source graph")
    for v, w in h.phi0.items():
        if not b.has_vertex(w):
            raise NotAHomomorphism(f"vertex {v!r} maps to unknown vertex {w!r}")
    for e, f in h.phi1.items():
        if not b.has_edge(f):
            raise NotAHomomorphism(f"edge {e!r} maps to unknown edge {f!r}")


def check_graph_hom(a: Graph, b: Graph, h: GraphHom) -> bool:
    _check_total(a, b, h)
    return all(
        h.phi0[a.source(e)] == b.source(h.phi1[e]) and h.phi0[a.range(e)] == b.range(h.phi1[e])
        for e in a.edges
    )


class SemigroupMap:
    """A zero-preserving map ``G(A) -> G(B)``."""

    def __init__(self, source: Graph, target: Graph, fn: Callable[[Element], Element]):
        self.source = source
        self.target = target
        self._fn = fn

    @classmethod
    def from_dict(cls, source: Graph, target: Graph, table: Mapping[Element, Element]) -> SemigroupMap:
        table = dict(table)
        return cls(source, target, table.__getitem__)

    def __call__(self, a: Element) -> Element:
        return self._fn(a)

    def as_dict(self) -> dict[Element, Element]:
        return {a: self(a) for a in enumerate_elements(self.source)}


def _hom_witness(values: Mapping[str, str]) -> tuple[str, str] | None:
    seen: dict[str, str] = {}
    for k in sorted(values):
        v = values[k]
        if v in seen:
            return (seen[v], k)
        seen[v] = k
    return None


def extend_hom(a: Graph, b: Graph, h: GraphHom) -> SemigroupMap:
    """The unique zero-preserving extension of an injective graph homomorphism."""
    if not check_graph_hom(a, b, h):
        raise NotAHomomorphism("maps do not commute with source and range")
    for kind, values in (("vertices", h.phi0), ("edges", h.phi1)):
        w = _hom_witness(values)
        if w is not None:
            raise NotInjective(
                f"{kind} {w[0]!r} and {w[1]!r} share an image; no zero-preserving extension exists",
                witness=w,
            )
    phi0, phi1 = h.phi0, h.phi1

    def image_path(p: Path) -> Path:
        if not p.edges:
            return Path.vertex(phi0[p.source])
        return Path(phi0[p.source], tuple(phi1[e] for e in p.edges), phi0[p.end])

    def fn(x: Element) -> Element:
        check_element(a, x)
        if x is ZERO:
            return ZERO
        return NonZero(image_path(x.x), image_path(x.y))

    return SemigroupMap(a, b, fn)


def restrict_iso(a: Graph, b: Graph, m: SemigroupMap | Mapping[Element, Element]) -> GraphHom:
    """Restrict a semigroup isomorphism ``G(A) -> G(B)`` to a graph isomorphism."""
    a.require_acyclic()
    b.require_acyclic()
    fn = m if callable(m) else dict(m).__getitem__
    src = enumerate_elements(a)
    tgt = set(enumerate_elements(b))
    image = {x: fn(x) for x in src}
    if set(image.values()) != tgt or len(src) != len(tgt):
        raise NotIsomorphism("map is not a bijection G(A) -> G(B)")
    for x in src:
        for y in src:
            if image[multiply(a, x, y)] != multiply(b, image[x], image[y]):
                raise NotIsomorphism(f"not multiplicative at ({format_element(x)}, {format_element(y)})", witness=(x, y))
    phi0 = {}
    for v in a.vertices:
        img = image[vertex(a, v)]
        if img is ZERO or not (img.x.is_vertex() and img.x == img.y):
            raise NotIsomorphism(f"vertex {v!r} does not map to a vertex", witness=v)
        phi0[v] = img.x.source
    phi1 = {}
    for e in a.edges:
        img = image[edge(a, e)]
        if img is ZERO or len(img.x) != 1 or not img.y.is_vertex():
            raise NotIsomorphism(f"edge {e!r} does not map to an edge", witness=e)
        phi1[e] = img.x.edges[0]
    h = GraphHom(phi0, phi1)
    if not check_graph_hom(a, b, h):
        raise NotIsomorphism("restriction does not commute with source and range")
    return h


# -- isomorphism search -----------------------------------------------------------


def _signature(g: Graph, v: str) -> tuple[int, int, int]:
    return (g.in_degree(v), g.out_degree(v), g.multiplicity(v, v))


def graph_isomorphisms(a: Graph, b: Graph) -> Iterator[GraphHom]:
    """Every graph isomorphism ``a -> b``, in a fixed canonical order."""
    if len(a.vertices) != len(b.vertices) or len(a.edges) != len(b.edges):
        return
    order = sorted(a.vertices, key=lambda v: (_signature(a, v), v))
    cands = {v: [w for w in b.vertices if _signature(b, w) == _signature(a, v)] for v in order}
    phi0: dict[str, str] = {}
    used: set[str] = set()

    def vertex_maps(k):
        if k == len(order):
            yield dict(phi0)
            return
        v = order[k]
        for w in cands[v]:
            if w in used:
                continue
            if all(
                a.multiplicity(v, u) == b.multiplicity(w, phi0[u])
                and a.multiplicity(u, v) == b.multiplicity(phi0[u], w)
                for u in phi0
            ):
                phi0[v] = w
                used.add(w)
                yield from vertex_maps(k + 1)
                del phi0[v]
                used.discard(w)

    for vmap in vertex_maps(0):
        groups = []
        for u in a.vertices:
            for w in a.vertices:
                src = [e for e in a.out_edges(u) if a.range(e) == w]
                if not src:
                    continue
                dst = [f for f in b.out_edges(vmap[u]) if b.range(f) == vmap[w]]
                groups.append((src, list(permutations(dst))))
        for choice in product(*(perms for _, perms in groups)):
            phi1 = {}
            for (src, _), perm in zip(groups, choice):
                phi1.update(zip(src, perm))
            yield GraphHom(vmap, phi1)


def graphs_isomorphic(a: Graph, b: Graph) -> GraphHom | None:
    return next(graph_isomorphisms(a, b), None)


def graph_automorphisms(g: Graph) -> list[GraphHom]:
    return list(graph_isomorphisms(g, g))


def jposet_order_automorphisms(g: Graph) -> int:
    if not (g.is_simple() and g.is_acyclic()):
        raise NotSimpleAcyclic("graph must be simple and acyclic")
    p = j_poset(g)
    return sum(1 for _ in order_isomorphisms(p, p))


# -- text format -------------------------------------------------------------------


def parse_map(text: str) -> GraphHom:
    """Parse ``v NAME NAME`` / ``e NAME NAME`` lines."""
    phi0: dict[str, str] = {}
    phi1: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        words = line.split()
        if len(words) != 3 or words[0] not in ("v", "e") or not all(NAME_RE.match(w) for w in words[1:]):
            raise ParseError(f"syntax error: {line!r}", lineno)
        target = phi0 if words[0] == "v" else phi1
        if words[1] in target:
            raise ParseError(f"{words[1]!r} mapped twice", lineno)
        target[words[1]] = words[2]
    return GraphHom(phi0, phi1)
