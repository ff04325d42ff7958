"""Named small graphs and an exhaustive corpus of small acyclic multigraphs."""

from __future__ import annotations

from itertools import permutations
from typing import Iterator

from .graph import Graph


def single_vertex() -> Graph:
    return Graph(["u"])


def two_vertices() -> Graph:
    return Graph(["v", "w"])


def one_edge() -> Graph:
    """``v --e--> w``."""
    return Graph(["v", "w"], [("e", "v", "w")])


def loop() -> Graph:
    """One vertex with one loop; G(E) is the bicyclic monoid with zero."""
    return Graph(["v"], [("e", "v", "v")])


def polycyclic(n: int) -> Graph:
    names = "abcdefghijklmnopqrstuvwxyz"
    return Graph(["v"], [(names[i], "v", "v") for i in range(n)])


def parallel_edges(k: int) -> Graph:
    return Graph(["v", "w"], [(f"e{i}", "v", "w") for i in range(k)])


def chain(n: int) -> Graph:
    """``v0 -> v1 -> ... -> v(n-1)``."""
    return Graph([f"v{i}" for i in range(n)], [(f"e{i}", f"v{i}", f"v{i + 1}") for i in range(n - 1)])


def two_cycle() -> Graph:
    return Graph(["v", "w"], [("e", "v", "w"), ("f", "w", "v")])


def diamond() -> Graph:
    """Top ``t`` above ``a`` and ``b``, both above ``z``."""
    return Graph(
        ["a", "b", "t", "z"],
        [("ta", "t", "a"), ("tb", "t", "b"), ("az", "a", "z"), ("bz", "b", "z")],
    )


def named_graphs() -> dict[str, Graph]:
    return {
        "single_vertex": single_vertex(),
        "two_vertices": two_vertices(),
        "one_edge": one_edge(),
        "parallel_2": parallel_edges(2),
        "chain_3": chain(3),
        "diamond": diamond(),
        "loop": loop(),
        "polycyclic_2": polycyclic(2),
        "two_cycle": two_cycle(),
    }


def _semigroup_size(n: int, mult: dict[tuple[int, int], int]) -> int:
    paths = [1] * n
    for j in range(n):
        paths[j] = 1 + sum(mult.get((i, j), 0) * paths[i] for i in range(j))
    return 1 + sum(p * p for p in paths)


def _canonical(n: int, mult: dict[tuple[int, int], int]) -> tuple:
    best = None
    for perm in permutations(range(n)):
        key = tuple(sorted((perm[i], perm[j], m) for (i, j), m in mult.items()))
        if best is None or key < best:
            best = key
    return (n, best)


def acyclic_graphs(max_vertices: int = 4, max_size: int = 30) -> Iterator[Graph]:
    """Every acyclic multigraph with 1..max_vertices vertices and |G(E)| <= max_size.

    One representative per isomorphism class.  Vertices are ``v0, v1, ...``
    (edges only run from lower to higher index); edges are ``e0, e1, ...``.
    """
    seen = set()
    for n in range(1, max_vertices + 1):
        pairs = [(i, j) for j in range(n) for i in range(j)]
        mult: dict[tuple[int, int], int] = {}

        def rec(k):
            if _semigroup_size(n, mult) > max_size:
                return
            if k == len(pairs):
                yield dict(mult)
                return
            yield from rec(k + 1)
            m = 1
            while True:
                mult[pairs[k]] = m
                if _semigroup_size(n, mult) > max_size:
                    del mult[pairs[k]]
                    break
                yield from rec(k + 1)
                m += 1
            mult.pop(pairs[k], None)

        for found in rec(0):
            key = _canonical(n, found)
            if key in seen:
                continue
            seen.add(key)
            edges = []
            for (i, j), m in sorted(found.items()):
                for _ in range(m):
                    edges.append((f"e{len(edges)}", f"v{i}", f"v{j}"))
            yield Graph([f"v{i}" for i in range(n)], edges)


def posets(n: int) -> list:
    """Every poset on ``n`` elements up to isomorphism, carrier ``p0..p(n-1)``.

    Each isomorphism class has a naturally labelled member (``i < j`` in the
    order implies ``i < j`` as integers), so only those relations are built.
    """
    from .green import Poset, order_isomorphic

    labels = [f"p{i}" for i in range(n)]
    pairs = [(i, j) for j in range(n) for i in range(j)]
    reps: dict[tuple, list] = {}
    out = []

    def rec(k, rel):
        if k == len(pairs):
            yield rel
            return
        i, j = pairs[k]
        yield from rec(k + 1, rel)
        # a < i < j needs a < j, and every (a, j) with a < i is already decided
        if all((a, j) in rel for a in range(i) if (a, i) in rel):
            yield from rec(k + 1, rel | {(i, j)})

    for rel in rec(0, frozenset()):
        if not _transitive(rel):
            continue
        below = [sum(1 for a, b in rel if b == x) for x in range(n)]
        above = [sum(1 for a, b in rel if a == x) for x in range(n)]
        key = tuple(sorted(zip(below, above)))
        p = Poset.from_relation(labels, [(labels[a], labels[b]) for a, b in rel])
        bucket = reps.setdefault(key, [])
        if any(order_isomorphic(p, q) for q in bucket):
            continue
        bucket.append(p)
        out.append(p)
    return out


def _transitive(rel: frozenset) -> bool:
    return all((a, c) in rel for a, b in rel for b2, c in rel if b == b2)
