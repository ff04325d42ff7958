"""Brute-force ground truth for finite graph inverse semigroups.

Nothing here uses the normal-form shortcuts of the other modules beyond
building the multiplication table: ideals, Green's preorders, congruences,
isomorphisms and representations are all recomputed from the table alone.
The word reducer rewrites with the defining relations directly and never
calls :func:`gis.semigroup.multiply`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product as iproduct
from typing import Callable, Hashable, Iterable, Iterator, Sequence

import numpy as np

from .errors import BoundExceeded, ParseError, UnknownIdentifier
from .graph import Graph, Path
from .semigroup import ZERO, Element, NonZero, enumerate_elements, multiply

DEFAULT_CONGRUENCE_BOUND = 12


class MulTable:
    """Multiplication table of a finite semigroup on indices ``0..n-1``."""

    def __init__(self, elements: Sequence, table, check: bool = True):
        self.elements = tuple(elements)
        self.table = np.asarray(table, dtype=np.int64)
        self.table.setflags(write=False)
        n = len(self.elements)
        if self.table.shape != (n, n):
            raise ValueError(f"table shape {self.table.shape} does not match {n} elements")
        if n and (self.table.min() < 0 or self.table.max() >= n):
            raise ValueError("table entries out of range")
        self.rows: list[list[int]] = self.table.tolist()
        self.index = {a: i for i, a in enumerate(self.elements)}
        if check and not self.is_associative():
            raise ValueError("table is not associative")

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self):
        return f"MulTable(n={len(self)})"

    def mul(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def is_associative(self) -> bool:
        t = self.table
        n = len(self)
        if n == 0:
            return True
        idx = np.arange(n)
        left = t[t[:, :, None], idx[None, None, :]]   # (ab)c
        right = t[idx[:, None, None], t[None, :, :]]  # a(bc)
        return bool(np.array_equal(left, right))

    @property
    def zero(self) -> int | None:
        for z in range(len(self)):
            if all(self.rows[z][x] == z and self.rows[x][z] == z for x in range(len(self))):
                return z
        return None

    def idempotents(self) -> list[int]:
        return [i for i in range(len(self)) if self.rows[i][i] == i]

    # -- principal ideals ------------------------------------------------

    def left_ideal(self, a: int) -> frozenset[int]:
        """``S^1 a``."""
        return frozenset(self.table[:, a].tolist()) | {a}

    def right_ideal(self, a: int) -> frozenset[int]:
        """``a S^1``."""
        return frozenset(self.table[a, :].tolist()) | {a}

    def two_sided_ideal(self, a: int) -> frozenset[int]:
        """``S^1 a S^1``."""
        left = self.left_ideal(a)
        out = set(left)
        for b in left:
            out.update(self.rows[b])
        return frozenset(out)

    def is_ideal(self, block: Iterable[int]) -> bool:
        block = set(block)
        if not block:
            return False
        return all(
            self.rows[b][c] in block and self.rows[c][b] in block
            for b in block for c in range(len(self))
        )


def build_table(g: Graph) -> MulTable:
    """Multiplication table of G(E) in canonical element order."""
    elements = enumerate_elements(g)
    index = {a: i for i, a in enumerate(elements)}
    table = [[index[multiply(g, a, b)] for b in elements] for a in elements]
    return MulTable(elements, table)


# -- word reduction ---------------------------------------------------------

# Letters are (kind, name) with kind "v" (vertex), "e" (edge), "i" (inverse edge).
Letter = tuple[str, str]


def _parse_letter(g: Graph, token) -> Letter:
    if isinstance(token, tuple):
        kind, name = token
        if kind == "v":
            g.check_vertex(name)
        elif kind in ("e", "i"):
            g.source(name)
        else:
            raise ParseError(f"bad generator kind {kind!r}")
        return (kind, name)
    text = str(token)
    for suffix in ("^-1", "⁻¹"):
        if text.endswith(suffix):
            name = text[: -len(suffix)]
            if not g.has_edge(name):
                raise UnknownIdentifier(f"unknown edge {name!r}")
            return ("i", name)
    is_v, is_e = g.has_vertex(text), g.has_edge(text)
    if is_v and is_e:
        raise ParseError(f"{text!r} names both a vertex and an edge")
    if is_v:
        return ("v", text)
    if is_e:
        return ("e", text)
    raise UnknownIdentifier(f"unknown generator {text!r}")


def _rewrite(g: Graph, a: Letter, b: Letter):
    """One rewriting step on adjacent letters.

    Returns ``None`` when ``ab`` is irreducible, ``ZERO`` when it collapses to
    zero, or a single letter.  Mismatched adjacencies collapse to zero via the
    vertex relations, e.g. ``e f = e r(e) s(f) f = 0`` when ``r(e) != s(f)``.
    """
    ka, na = a
    kb, nb = b
    # left end / right end of each letter as a vertex
    def left(k, n):
        return n if k == "v" else (g.source(n) if k == "e" else g.range(n))

    def right(k, n):
        return n if k == "v" else (g.range(n) if k == "e" else g.source(n))

    if ka == "v" and kb == "v":                      # V
        return a if na == nb else ZERO
    if ka == "v":                                    # E1 / E2 on the left
        return b if na == left(kb, nb) else ZERO
    if kb == "v":                                    # E1 / E2 on the right
        return a if right(ka, na) == nb else ZERO
    if ka == "i" and kb == "e":                      # CK1
        return ("v", g.range(na)) if na == nb else ZERO
    if right(ka, na) != left(kb, nb):
        return ZERO
    return None


def reduce_word(g: Graph, word: Iterable) -> Element:
    """Normal form of a word in vertices, edges and inverse edges.

    Tokens are vertex names, edge names, edge names suffixed with ``^-1``,
    or explicit ``(kind, name)`` letters with kind in ``{"v", "e", "i"}``.
    """
    letters = [_parse_letter(g, t) for t in word]
    if not letters:
        raise ValueError("empty word")
    stack: list[Letter] = []
    for letter in letters:
        cur = letter
        while stack:
            r = _rewrite(g, stack[-1], cur)
            if r is None:
                break
            if r is ZERO:
                return ZERO
            stack.pop()
            cur = r
        stack.append(cur)
    if len(stack) == 1 and stack[0][0] == "v":
        v = Path.vertex(stack[0][1])
        return NonZero(v, v)
    forward = [n for k, n in stack if k == "e"]
    backward = [n for k, n in stack if k == "i"][::-1]
    if forward:
        x = Path(g.source(forward[0]), tuple(forward), g.range(forward[-1]))
    else:
        x = Path.vertex(g.range(backward[-1]))
    if backward:
        y = Path(g.source(backward[0]), tuple(backward), g.range(backward[-1]))
    else:
        y = Path.vertex(x.end)
    return NonZero(x, y)


# -- partitions and congruences --------------------------------------------


@dataclass(frozen=True)
class Partition:
    """Partition of ``0..n-1``; ``labels[i]`` is the least index in i's block."""

    labels: tuple[int, ...]

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> Partition:
        labels = list(range(n))
        seen = set()
        for block in blocks:
            block = sorted(block)
            for i in block:
                if i in seen:
                    raise ValueError(f"index {i} occurs in two blocks")
                seen.add(i)
                labels[i] = block[0]
        return cls(tuple(labels))

    @classmethod
    def diagonal(cls, n: int) -> Partition:
        return cls(tuple(range(n)))

    @classmethod
    def universal(cls, n: int) -> Partition:
        return cls((0,) * n)

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        groups: dict[int, list[int]] = {}
        for i, lab in enumerate(self.labels):
            groups.setdefault(lab, []).append(i)
        return tuple(tuple(groups[k]) for k in sorted(groups))

    def same(self, i: int, j: int) -> bool:
        return self.labels[i] == self.labels[j]

    def __len__(self) -> int:
        return len(set(self.labels))

    def __le__(self, other: Partition) -> bool:
        """Refinement: every block of self lies inside a block of other."""
        return all(other.labels[i] == other.labels[lab] for i, lab in enumerate(self.labels))


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> bool:
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return False
        if rj < ri:
            ri, rj = rj, ri
        self.parent[rj] = ri
        return True

    def partition(self) -> Partition:
        n = len(self.parent)
        least: dict[int, int] = {}
        for i in range(n):
            least.setdefault(self.find(i), i)
        return Partition(tuple(least[self.find(i)] for i in range(n)))


def congruence_closure(t: MulTable, pairs: Iterable[tuple[int, int]], start: Partition | None = None) -> Partition:
    """Least congruence containing ``pairs`` (and ``start``, if given)."""
    n = len(t)
    rows = t.rows
    uf = _UnionFind(n)
    queue = deque(sorted((int(a), int(b)) for a, b in pairs))
    if start is not None:
        queue.extend((i, lab) for i, lab in enumerate(start.labels) if i != lab)
    while queue:
        a, b = queue.popleft()
        if not uf.union(a, b):
            continue
        for c in range(n):
            queue.append((rows[c][a], rows[c][b]))
            queue.append((rows[a][c], rows[b][c]))
    return uf.partition()


def is_congruence(t: MulTable, p: Partition) -> bool:
    lab = p.labels
    rows = t.rows
    for block in p.blocks:
        first = block[0]
        for a in block[1:]:
            for c in range(len(t)):
                if lab[rows[c][a]] != lab[rows[c][first]]:
                    return False
                if lab[rows[a][c]] != lab[rows[first][c]]:
                    return False
    return True


def congruence_violation(t: MulTable, p: Partition):
    """A triple ``(a, b, c)`` breaking compatibility, or None."""
    lab = p.labels
    rows = t.rows
    for block in p.blocks:
        for a in block:
            for b in block:
                for c in range(len(t)):
                    if lab[rows[c][a]] != lab[rows[c][b]] or lab[rows[a][c]] != lab[rows[b][c]]:
                        return (a, b, c)
    return None


def enumerate_congruences(t: MulTable, bound: int = DEFAULT_CONGRUENCE_BOUND) -> list[Partition]:
    """Every congruence of ``t``, as joins of principal congruences.

    Ordered by decreasing number of blocks, then by labels.
    """
    n = len(t)
    if n > bound:
        raise BoundExceeded(f"{n} elements exceeds the congruence enumeration bound {bound}")
    principal = []
    seen_principal = set()
    for a in range(n):
        for b in range(a + 1, n):
            p = congruence_closure(t, [(a, b)])
            if p not in seen_principal:
                seen_principal.add(p)
                principal.append(p)
    diag = Partition.diagonal(n)
    found = {diag}
    frontier = [diag]
    while frontier:
        p = frontier.pop()
        for q in principal:
            if q <= p:
                continue
            j = _join(p, q)
            if j not in found:
                found.add(j)
                frontier.append(j)
    return sorted(found, key=lambda p: (-len(p), p.labels))


def _join(p: Partition, q: Partition) -> Partition:
    # The equivalence join of two congruences is again a congruence.
    uf = _UnionFind(len(p.labels))
    for part in (p, q):
        for i, lab in enumerate(part.labels):
            uf.union(i, lab)
    return uf.partition()


def is_rees_partition(t: MulTable, p: Partition) -> bool:
    big = [b for b in p.blocks if len(b) > 1]
    if len(big) > 1:
        return False
    if not big:
        return True
    return t.is_ideal(big[0])


def ideals_of_table(t: MulTable) -> list[frozenset[int]]:
    """All two-sided ideals, as unions of principal ideals."""
    principal = {t.two_sided_ideal(a) for a in range(len(t))}
    found = set(principal)
    frontier = list(principal)
    while frontier:
        i = frontier.pop()
        for p in principal:
            u = i | p
            if u not in found:
                found.add(u)
                frontier.append(u)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


# -- Green's preorders from ideals ----------------------------------------


def green_preorders(t: MulTable) -> dict[str, np.ndarray]:
    """Boolean matrices ``M[a, b]`` for ideal containment (L, R, J)."""
    n = len(t)
    out = {}
    for name, ideal in (("L", t.left_ideal), ("R", t.right_ideal), ("J", t.two_sided_ideal)):
        ideals = [ideal(a) for a in range(n)]
        out[name] = np.array([[ideals[a] <= ideals[b] for b in range(n)] for a in range(n)], dtype=bool)
    return out


def green_relations(t: MulTable) -> dict[str, np.ndarray]:
    """Boolean matrices for L, R, J, H, D computed from ideals and composition."""
    pre = green_preorders(t)
    rel = {k: pre[k] & pre[k].T for k in pre}
    rel["H"] = rel["L"] & rel["R"]
    # D = L o R
    lr = rel["L"].astype(np.int64) @ rel["R"].astype(np.int64)
    rel["D"] = lr > 0
    return rel


# -- inverse semigroup structure from the table ----------------------------


def table_inverses(t: MulTable) -> list[int]:
    """The unique inverse of each element, found by scanning candidates."""
    rows = t.rows
    inv = []
    for a in range(len(t)):
        cands = [b for b in range(len(t)) if rows[rows[a][b]][a] == a and rows[rows[b][a]][b] == b]
        if len(cands) != 1:
            raise ValueError(f"element {a} has {len(cands)} inverses; not an inverse semigroup")
        inv.append(cands[0])
    return inv


def idempotent_separating_pairs(t: MulTable) -> set[tuple[int, int]]:
    """``{(m, n) : m^-1 e m = n^-1 e n for every idempotent e}``."""
    rows = t.rows
    inv = table_inverses(t)
    idem = t.idempotents()
    sig = [tuple(rows[rows[inv[m]][e]][m] for e in idem) for m in range(len(t))]
    return {(m, k) for m in range(len(t)) for k in range(len(t)) if sig[m] == sig[k]}


def is_fundamental(t: MulTable) -> bool:
    return idempotent_separating_pairs(t) == {(i, i) for i in range(len(t))}


def join_irreducible_idempotents(t: MulTable) -> list[int]:
    """Join-irreducible members of the idempotent semilattice, by brute force."""
    rows = t.rows
    idem = t.idempotents()

    def leq(a, b):
        return rows[a][b] == a

    bottom = [z for z in idem if all(leq(z, e) for e in idem)]
    bottom = bottom[0] if bottom else None

    def join(a, b):
        ub = [u for u in idem if leq(a, u) and leq(b, u)]
        least = [u for u in ub if all(leq(u, w) for w in ub)]
        return least[0] if least else None

    out = []
    for e in idem:
        if e == bottom:
            continue
        below = [y for y in idem if y != e and leq(y, e)]
        if any(join(y, z) == e for y in below for z in below):
            continue
        out.append(e)
    return out


# -- homomorphism search ---------------------------------------------------


def generating_set(t: MulTable) -> list[int]:
    """Small generating set, chosen greedily in index order."""
    rows = t.rows
    gens: list[int] = []
    closure: set[int] = set()
    for a in range(len(t)):
        if a in closure:
            continue
        gens.append(a)
        closure.add(a)
        queue = deque([a])
        while queue:
            x = queue.popleft()
            for y in list(closure):
                for z in (rows[x][y], rows[y][x]):
                    if z not in closure:
                        closure.add(z)
                        queue.append(z)
    return gens


def _search(
    t: MulTable,
    candidates: Callable[[int], Iterable[Hashable]],
    tmul: Callable[[Hashable, Hashable], Hashable],
    injective: bool,
) -> Iterator[dict[int, Hashable]]:
    """Enumerate homomorphisms from ``t`` fixed by generator images.

    Each new assignment is propagated through products with every assigned
    element, so every pair is checked once both of its members are assigned.
    """
    rows = t.rows
    gens = generating_set(t)
    image: dict[int, Hashable] = {}
    owner: dict[Hashable, int] = {}

    def assign(a, value, trail) -> bool:
        if injective and owner.get(value, a) != a:
            return False
        image[a] = value
        owner[value] = a
        trail.append(a)
        queue = deque([a])
        while queue:
            x = queue.popleft()
            for y in list(image):
                for p, fp in ((rows[x][y], tmul(image[x], image[y])), (rows[y][x], tmul(image[y], image[x]))):
                    if p in image:
                        if image[p] != fp:
                            return False
                    else:
                        if injective and fp in owner:
                            return False
                        image[p] = fp
                        owner[fp] = p
                        trail.append(p)
                        queue.append(p)
        return True

    def undo(trail):
        for a in reversed(trail):
            v = image.pop(a)
            if owner.get(v) == a:
                del owner[v]

    def rec(k):
        if k == len(gens):
            if len(image) == len(t):
                yield dict(image)
            return
        g = gens[k]
        if g in image:
            yield from rec(k + 1)
            return
        for value in candidates(g):
            trail: list[int] = []
            if assign(g, value, trail):
                yield from rec(k + 1)
            undo(trail)

    yield from rec(0)


def _signature(t: MulTable, a: int) -> tuple:
    rows = t.rows
    powers = set()
    x = a
    while x not in powers:
        powers.add(x)
        x = rows[x][a]
    return (
        rows[a][a] == a,
        len(t.left_ideal(a)),
        len(t.right_ideal(a)),
        len(t.two_sided_ideal(a)),
        len(powers),
        sum(1 for b in range(len(t)) if rows[a][b] == a),
        sum(1 for b in range(len(t)) if rows[b][a] == a),
    )


def table_isomorphisms(t1: MulTable, t2: MulTable) -> Iterator[dict[int, int]]:
    if len(t1) != len(t2):
        return
    sig2: dict[tuple, list[int]] = {}
    for b in range(len(t2)):
        sig2.setdefault(_signature(t2, b), []).append(b)
    sig1 = [_signature(t1, a) for a in range(len(t1))]
    if sorted(sig1) != sorted(s for s, bs in sig2.items() for _ in bs):
        return
    yield from _search(t1, lambda a: sig2.get(sig1[a], []), t2.mul, injective=True)


def tables_isomorphic(t1: MulTable, t2: MulTable) -> dict[int, int] | None:
    """A multiplicative bijection ``t1 -> t2`` (as an index map), or None."""
    return next(table_isomorphisms(t1, t2), None)


def semigroup_automorphisms(t: MulTable) -> list[dict[int, int]]:
    return list(table_isomorphisms(t, t))


def compose_partial(f: tuple, g: tuple) -> tuple:
    """Left-to-right composition of partial maps given as image tuples."""
    return tuple(None if x is None else g[x] for x in f)


def all_partial_maps(degree: int) -> list[tuple]:
    choices = [None, *range(degree)]
    return [tuple(m) for m in iproduct(choices, repeat=degree)]


def faithful_representation(t: MulTable, degree: int) -> dict[int, tuple] | None:
    """Exhaustively search for an injective homomorphism into partial maps of ``degree`` points."""
    maps = all_partial_maps(degree)
    if len(maps) < len(t):
        return None
    return next(_search(t, lambda a: maps, compose_partial, injective=True), None)
