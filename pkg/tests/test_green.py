from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings

from gis import corpus
from gis.errors import NotAPartialOrder, ParseError, UnknownIdentifier
from gis.graph import Graph, condensation
from gis.green import (
    GreenRelation,
    Poset,
    format_poset,
    hasse_dot,
    j_poset,
    leq_j,
    leq_l,
    leq_r,
    order_isomorphic,
    order_isomorphisms,
    parse_poset,
    realize_poset,
    related,
)
from gis.oracle import build_table, green_preorders, green_relations
from gis.semigroup import ZERO, NonZero, edge, edge_inverse, enumerate_elements, enumerate_elements_bounded, vertex
from strategies import multigraphs

G = corpus.one_edge()
V, W = vertex(G, "v"), vertex(G, "w")
E, EI = edge(G, "e"), edge_inverse(G, "e")
EE = NonZero(G.path("e"), G.path("e"))
CORPUS = list(corpus.acyclic_graphs(4, 30))


def _table_leq(g, kind, a, b):
    t = build_table(g)
    return bool(green_preorders(t)[kind][t.index[a], t.index[b]])


# -- preorders ------------------------------------------------------------------


def test_leq_l_examples():
    assert leq_l(G, EE, V)
    assert not leq_l(G, V, EE) and not _table_leq(G, "L", V, EE)
    for a in enumerate_elements(G):
        assert leq_l(G, a, a)


def test_leq_r_examples():
    assert leq_r(G, EE, V)
    assert leq_r(G, EI, W) and _table_leq(G, "R", EI, W)
    for a in enumerate_elements(G):
        assert leq_r(G, a, a)


def test_leq_j_examples():
    assert leq_j(G, W, V)
    assert not leq_j(G, V, W) and not _table_leq(G, "J", V, W)
    for a in enumerate_elements(G):
        assert leq_j(G, a, a)


def test_zero_sits_below_everything():
    for a in enumerate_elements(G):
        for fn in (leq_l, leq_r, leq_j):
            assert fn(G, ZERO, a)
            assert fn(G, a, ZERO) == (a is ZERO)


# -- relations --------------------------------------------------------------------


def test_related_examples():
    assert related(G, GreenRelation.D, E, EI)
    assert not related(G, GreenRelation.L, E, EI)
    els = enumerate_elements(G)
    for a, b in product(els, repeat=2):
        assert related(G, "H", a, b) == (a == b)


def test_zero_is_only_related_to_itself():
    for rel in GreenRelation:
        assert related(G, rel, ZERO, ZERO)
        assert not related(G, rel, ZERO, V)


@pytest.mark.parametrize("g", CORPUS, ids=str)
def test_relation_laws(g):
    els = enumerate_elements(g)
    n = len(els)
    mats = {
        r.value: np.array([[related(g, r, a, b) for b in els] for a in els], dtype=bool) for r in GreenRelation
    }
    for m in mats.values():
        assert m.diagonal().all()
        assert (m == m.T).all()
        closure = (m.astype(int) @ m.astype(int)) > 0
        assert (closure == m).all()
    assert (mats["H"] == (mats["L"] & mats["R"])).all()
    assert not (mats["D"] & ~mats["J"]).any()
    t = build_table(g)
    oracle = green_relations(t)
    for r in GreenRelation:
        assert (oracle[r.value] == mats[r.value]).all()
    assert n == len(t)


@pytest.mark.parametrize("g", CORPUS + [corpus.loop(), corpus.polycyclic(2), corpus.two_cycle()], ids=str)
def test_vertex_classes_are_maximal(g):
    els = enumerate_elements(g) if g.is_acyclic() else enumerate_elements_bounded(g, 3)
    for v in g.vertices:
        x = vertex(g, v)
        for a in els:
            if a is ZERO:
                continue
            if leq_l(g, x, a):
                assert related(g, "L", x, a)
            if leq_r(g, x, a):
                assert related(g, "R", x, a)


def test_j_in_a_cycle_relates_both_vertices():
    g = corpus.two_cycle()
    assert related(g, "J", vertex(g, "v"), vertex(g, "w"))
    assert not related(g, "D", vertex(g, "v"), vertex(g, "w"))


# -- the J-class poset ----------------------------------------------------------------


def test_j_poset_examples():
    p = j_poset(G)
    assert p.le("w", "v") and not p.le("v", "w")
    q = j_poset(corpus.two_vertices())
    assert q.covers() == []
    assert len(q) == 2


def test_j_poset_matches_condensation():
    for g in CORPUS + [corpus.two_cycle(), corpus.loop(), corpus.polycyclic(2)]:
        assert order_isomorphic(j_poset(g), j_poset(condensation(g))) is not None


@settings(max_examples=150, deadline=None)
@given(multigraphs())
def test_j_poset_is_a_partial_order_even_with_cycles(g):
    p = j_poset(g)
    assert p.is_partial_order()
    assert order_isomorphic(p, j_poset(condensation(g))) is not None


def test_j_poset_order_is_generated_by_component_edges():
    g = Graph(["a", "b", "c", "d"], [("x", "a", "b"), ("y", "b", "a"), ("z", "b", "c"), ("u", "d", "c")])
    p = j_poset(g)
    assert p.carrier == ("a", "c", "d")
    assert sorted(p.covers()) == [("c", "a"), ("c", "d")]


# -- poset realization ---------------------------------------------------------------


def test_realize_poset_examples():
    g = realize_poset(Poset.from_relation(["a"], []))
    assert g.vertices == ("a",) and g.edges == ()
    g = realize_poset(Poset.from_relation(["a", "b"], [("a", "b")]))
    assert g.triples() == [("h0", "b", "a")]
    diamond = Poset.from_relation(["bot", "l", "r", "top"], [("bot", "l"), ("bot", "r"), ("l", "top"), ("r", "top")])
    g = realize_poset(diamond)
    assert len(g.vertices) == 4 and len(g.edges) == 4
    assert g.is_simple() and g.is_acyclic()
    assert order_isomorphic(j_poset(g), diamond) is not None


@pytest.mark.parametrize("n", range(1, 7))
def test_realize_round_trip_up_to_six_elements(n):
    for p in corpus.posets(n):
        g = realize_poset(p)
        assert g.is_simple() and g.is_acyclic()
        assert len(g.edges) == len(p.covers())
        assert order_isomorphic(j_poset(g), p) is not None


def test_poset_counts_match_known_values():
    assert [len(corpus.posets(n)) for n in range(1, 7)] == [1, 2, 5, 16, 63, 318]


def test_order_automorphisms_of_small_posets():
    chain = Poset.from_relation(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert len(list(order_isomorphisms(chain, chain))) == 1
    anti = Poset.from_relation(["a", "b", "c"], [])
    assert len(list(order_isomorphisms(anti, anti))) == 6
    assert order_isomorphic(chain, anti) is None


def test_from_relation_rejects_cycles_and_unknowns():
    with pytest.raises(NotAPartialOrder):
        Poset.from_relation(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(UnknownIdentifier):
        Poset.from_relation(["a"], [("a", "z")])


# -- text formats ------------------------------------------------------------------


def test_parse_poset_closes_transitively():
    p = parse_poset("element a\nelement b\nelement c\nleq a b\nleq b c\n")
    assert p.le("a", "c") and p.le("b", "b")
    assert p.covers() == [("a", "b"), ("b", "c")]


def test_parse_poset_errors():
    with pytest.raises(ParseError) as info:
        parse_poset("element a\nle a a")
    assert info.value.lineno == 2
    with pytest.raises(NotAPartialOrder):
        parse_poset("element a\nelement b\nleq a b\nleq b a")
    with pytest.raises(ParseError):
        parse_poset("element a\nelement a")


def test_format_poset_round_trip():
    for p in corpus.posets(4):
        assert parse_poset(format_poset(p)) == p


def test_hasse_dot_draws_covers_only():
    chain = Poset.from_relation(["a", "b", "c"], [("a", "b"), ("b", "c")])
    dot = hasse_dot(chain)
    assert "a -> b" in dot and "b -> c" in dot and "a -> c" not in dot
