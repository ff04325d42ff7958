"""Arithmetic in the graph inverse semigroup G(E).

Every nonzero element is stored in its normal form ``x y^-1``, a pair of
paths with a common range.  Products are computed directly on the pair
representation; the generators-and-relations presentation is only used by
the brute-force reducer in :mod:`gis.oracle`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidElement, InvalidPath, ParseError, UnknownIdentifier
from .graph import NAME_RE, Graph, Path, enumerate_paths, enumerate_paths_bounded


class Zero:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __str__(self):
        return "0"

    def __reduce__(self):
        return (Zero, ())


ZERO = Zero()


@dataclass(frozen=True)
class NonZero:
    """The element ``x y^-1``; requires ``x.end == y.end``."""

    x: Path
    y: Path

    def __post_init__(self):
        if self.x.end != self.y.end:
            raise InvalidElement(f"paths {self.x} and {self.y} have different ranges")

    @property
    def range(self) -> str:
        return self.x.end

    def __str__(self):
        return format_element(self)


Element = Zero | NonZero


def element_key(a: Element) -> tuple:
    if a is ZERO:
        return (0,)
    return (1, len(a.x) + len(a.y), a.x.key, a.y.key)


def sort_elements(elements: Iterable[Element]) -> list[Element]:
    return sorted(elements, key=element_key)


# -- constructors -----------------------------------------------------------


def vertex(g: Graph, v: str) -> NonZero:
    g.check_vertex(v)
    p = Path.vertex(v)
    return NonZero(p, p)


def edge(g: Graph, e: str) -> NonZero:
    return NonZero(g.path(e), Path.vertex(g.range(e)))


def edge_inverse(g: Graph, e: str) -> NonZero:
    return invert(edge(g, e))


def from_path(x: Path) -> NonZero:
    """The element ``x r(x)^-1``, i.e. the path itself."""
    return NonZero(x, Path.vertex(x.end))


def check_element(g: Graph, a: Element) -> None:
    if a is ZERO:
        return
    if not isinstance(a, NonZero):
        raise InvalidElement(f"not an element: {a!r}")
    if not (g.is_path(a.x) and g.is_path(a.y)):
        raise InvalidElement(f"{a} is not an element of G(E) for this graph")


# -- operations -------------------------------------------------------------


def multiply(g: Graph, a: Element, b: Element) -> Element:
    check_element(g, a)
    check_element(g, b)
    return _mul(a, b)


def _mul(a: Element, b: Element) -> Element:
    if a is ZERO or b is ZERO:
        return ZERO
    u, v = a.x, a.y
    x, y = b.x, b.y
    # (u v^-1)(x y^-1): cancel the shorter of v, x against the longer.
    t = v.strip_prefix(x)
    if t is not None:
        return NonZero(u, y.concat(t))
    t = x.strip_prefix(v)
    if t is not None:
        return NonZero(u.concat(t), y)
    return ZERO


def product(g: Graph, elements: Iterable[Element]) -> Element:
    it = iter(elements)
    try:
        acc = next(it)
    except StopIteration:
        raise ValueError("empty product") from None
    check_element(g, acc)
    for b in it:
        acc = multiply(g, acc, b)
    return acc


def invert(a: Element) -> Element:
    if a is ZERO:
        return ZERO
    return NonZero(a.y, a.x)


def is_idempotent(a: Element) -> bool:
    return a is ZERO or a.x == a.y


def natural_leq(a: Element, b: Element) -> bool:
    """Natural partial order: ``u v^-1 <= x y^-1`` iff ``u = x t``, ``v = y t``."""
    if a is ZERO:
        return True
    if b is ZERO:
        return False
    t = a.x.strip_prefix(b.x)
    return t is not None and a.y.strip_prefix(b.y) == t


def idempotent_meet(g: Graph, a: Element, b: Element) -> Element:
    if not (is_idempotent(a) and is_idempotent(b)):
        raise InvalidElement("idempotent_meet needs idempotent arguments")
    return multiply(g, a, b)


def enumerate_elements(g: Graph) -> list[Element]:
    """All of G(E) for acyclic ``g``, in canonical order."""
    return _elements_from_paths(enumerate_paths(g))


def enumerate_elements_bounded(g: Graph, max_len: int) -> list[Element]:
    """Elements ``x y^-1`` with both paths of length at most ``max_len``."""
    return _elements_from_paths(enumerate_paths_bounded(g, max_len))


def _elements_from_paths(paths: list[Path]) -> list[Element]:
    by_end: dict[str, list[Path]] = {}
    for p in paths:
        by_end.setdefault(p.end, []).append(p)
    out: list[Element] = [ZERO]
    for group in by_end.values():
        out.extend(NonZero(x, y) for x in group for y in group)
    return sort_elements(out)


def semigroup_size(g: Graph) -> int:
    """``1 + sum over v of (number of paths ending at v)^2``; acyclic only."""
    counts: dict[str, int] = {}
    for p in enumerate_paths(g):
        counts[p.end] = counts.get(p.end, 0) + 1
    return 1 + sum(c * c for c in counts.values())


def idempotents(elements: Iterable[Element]) -> list[Element]:
    return [a for a in elements if is_idempotent(a)]


def maximal_idempotents(g: Graph, pool: Iterable[Element]) -> list[Element]:
    """Maximal members of ``pool`` under the natural partial order."""
    pool = list(pool)
    for a in pool:
        check_element(g, a)
    return [
        a for a in pool
        if not any(b != a and natural_leq(a, b) for b in pool)
    ]


# -- text format ------------------------------------------------------------


def parse_path(g: Graph, text: str) -> Path:
    names = text.split(".")
    for n in names:
        if not NAME_RE.match(n):
            raise ParseError(f"bad path {text!r}")
    if len(names) == 1:
        name = names[0]
        is_v, is_e = g.has_vertex(name), g.has_edge(name)
        if is_v and is_e:
            raise ParseError(f"{name!r} names both a vertex and an edge")
        if is_v:
            return Path.vertex(name)
        if not is_e:
            raise UnknownIdentifier(f"unknown vertex or edge {name!r}")
    try:
        return g.path(*names)
    except InvalidPath as exc:
        raise ParseError(str(exc)) from None


def parse_element(g: Graph, text: str) -> Element:
    """Parse ``0``, ``x`` (meaning ``x r(x)^-1``) or ``x/y``."""
    text = text.strip()
    if text == "0":
        return ZERO
    parts = text.split("/")
    if len(parts) == 1:
        return from_path(parse_path(g, parts[0]))
    if len(parts) == 2:
        x, y = parse_path(g, parts[0]), parse_path(g, parts[1])
        if x.end != y.end:
            raise ParseError(f"{text!r}: {parts[0]} and {parts[1]} have different ranges")
        return NonZero(x, y)
    raise ParseError(f"bad element {text!r}")


def format_element(a: Element) -> str:
    if a is ZERO:
        return "0"
    if a.y.is_vertex() and str(a.x) != "0":
        # a vertex called "0" must print as "0/0" to stay distinct from zero
        return str(a.x)
    return f"{a.x}/{a.y}"
