from itertools import product

import pytest

from gis import corpus
from gis.errors import NotAHomomorphism, NotInjective, NotIsomorphism, NotSimpleAcyclic, ParseError
from gis.graph import Graph
from gis.green import Poset, j_poset, realize_poset
from gis.morphisms import (
    GraphHom,
    SemigroupMap,
    check_graph_hom,
    extend_hom,
    graph_automorphisms,
    graph_isomorphisms,
    graphs_isomorphic,
    identity_hom,
    jposet_order_automorphisms,
    parse_map,
    restrict_iso,
)
from gis.oracle import build_table, semigroup_automorphisms, tables_isomorphic
from gis.semigroup import ZERO, NonZero, enumerate_elements, multiply, semigroup_size, vertex

G = corpus.one_edge()
TWO = corpus.two_vertices()
CORPUS = list(corpus.acyclic_graphs(4, 30))


def relabel(g, prefix="x"):
    """An isomorphic copy with renamed vertices and edges in reversed order."""
    vmap = {v: f"{prefix}{i}" for i, v in enumerate(reversed(g.vertices))}
    emap = {e: f"{prefix}e{i}" for i, e in enumerate(reversed(g.edges))}
    h = Graph(vmap.values(), [(emap[e], vmap[s], vmap[r]) for e, s, r in g.triples()])
    return h, GraphHom(vmap, emap)


# -- graph homomorphisms ----------------------------------------------------------


def test_check_graph_hom_examples():
    for g in corpus.named_graphs().values():
        assert check_graph_hom(g, g, identity_hom(g))
    one = corpus.single_vertex()
    assert check_graph_hom(TWO, one, GraphHom({"v": "u", "w": "u"}, {}))
    assert not check_graph_hom(G, G, GraphHom({"v": "w", "w": "v"}, {"e": "e"}))


def test_check_graph_hom_requires_total_known_maps():
    with pytest.raises(NotAHomomorphism):
        check_graph_hom(G, G, GraphHom({"v": "v"}, {"e": "e"}))
    with pytest.raises(NotAHomomorphism):
        check_graph_hom(G, G, GraphHom({"v": "v", "w": "q"}, {"e": "e"}))
    with pytest.raises(NotAHomomorphism):
        check_graph_hom(G, G, GraphHom({"v": "v", "w": "w"}, {}))


# -- extension ------------------------------------------------------------------------


def test_extend_identity():
    m = extend_hom(G, G, identity_hom(G))
    assert all(m(a) == a for a in enumerate_elements(G))
    assert len(m.as_dict()) == 6


def test_extend_vertex_embedding():
    one = corpus.single_vertex()
    m = extend_hom(one, G, GraphHom({"u": "v"}, {}))
    els = enumerate_elements(one)
    assert [m(a) for a in els] == [ZERO, vertex(G, "v")]
    for a, b in product(els, repeat=2):
        assert m(multiply(one, a, b)) == multiply(G, m(a), m(b))


def test_extend_refuses_non_injective():
    one = corpus.single_vertex()
    h = GraphHom({"v": "u", "w": "u"}, {})
    with pytest.raises(NotInjective) as info:
        extend_hom(TWO, one, h)
    assert info.value.witness == ("v", "w")
    # the formula map is not a homomorphism: v w = 0 but u u = u
    u = vertex(one, "u")
    assert multiply(TWO, vertex(TWO, "v"), vertex(TWO, "w")) is ZERO
    assert multiply(one, u, u) == u


def test_extend_refuses_non_homomorphism():
    with pytest.raises(NotAHomomorphism):
        extend_hom(G, G, GraphHom({"v": "w", "w": "v"}, {"e": "e"}))


def _inclusions(g):
    from gis.congruence import all_ideals

    for ideal in all_ideals(g):
        sub = g.remove_vertices(ideal.vertices)
        yield sub, GraphHom({v: v for v in sub.vertices}, {e: e for e in sub.edges}), not ideal.vertices


@pytest.mark.parametrize("g", CORPUS, ids=str)
def test_extension_is_injective_multiplicative_and_surjective_iff(g):
    for sub, h, onto in _inclusions(g):
        m = extend_hom(sub, g, h)
        els = enumerate_elements(sub)
        images = [m(a) for a in els]
        assert len(set(images)) == len(images)
        assert m(ZERO) is ZERO
        for a, b in product(els, repeat=2):
            assert m(multiply(sub, a, b)) == multiply(g, m(a), m(b))
        assert (set(images) == set(enumerate_elements(g))) == onto


def test_extension_on_infinite_window():
    g = corpus.polycyclic(2)
    swap = GraphHom({"v": "v"}, {"a": "b", "b": "a"})
    m = extend_hom(g, g, swap)
    from gis.semigroup import enumerate_elements_bounded

    els = enumerate_elements_bounded(g, 2)
    for a, b in product(els, repeat=2):
        assert m(multiply(g, a, b)) == multiply(g, m(a), m(b))


# -- restriction ---------------------------------------------------------------------


def test_restrict_identity():
    m = extend_hom(G, G, identity_hom(G))
    assert restrict_iso(G, G, m) == identity_hom(G)


def test_restrict_swap():
    swap = {ZERO: ZERO, vertex(TWO, "v"): vertex(TWO, "w"), vertex(TWO, "w"): vertex(TWO, "v")}
    assert restrict_iso(TWO, TWO, swap) == GraphHom({"v": "w", "w": "v"}, {})


def test_restrict_rejects_vertex_to_non_vertex_idempotent():
    ee = NonZero(G.path("e"), G.path("e"))
    els = enumerate_elements(G)
    bad = {a: a for a in els}
    bad[vertex(G, "v")] = ee
    bad[ee] = vertex(G, "v")
    with pytest.raises(NotIsomorphism):
        restrict_iso(G, G, bad)
    not_onto = {a: a for a in els}
    not_onto[vertex(G, "v")] = ZERO
    with pytest.raises(NotIsomorphism):
        restrict_iso(G, G, not_onto)


def test_every_vertex_to_idempotent_swap_fails():
    # exhaustive: swapping any vertex element with any other nonzero idempotent is never an isomorphism
    els = enumerate_elements(G)
    idem = [a for a in els if a is not ZERO and a.x == a.y]
    for v in ("v", "w"):
        for target in idem:
            if target == vertex(G, v):
                continue
            m = {a: a for a in els}
            m[vertex(G, v)], m[target] = target, vertex(G, v)
            with pytest.raises(NotIsomorphism):
                restrict_iso(G, G, m)


@pytest.mark.parametrize("g", CORPUS, ids=str)
def test_restrict_extend_round_trip(g):
    copy, _ = relabel(g)
    for h in graph_isomorphisms(g, copy):
        assert restrict_iso(g, copy, extend_hom(g, copy, h)) == h


# -- isomorphism search --------------------------------------------------------------


def test_graphs_isomorphic_examples():
    other = Graph(["v1", "w1"], [("e1", "v1", "w1")])
    assert graphs_isomorphic(G, other) == GraphHom({"v": "v1", "w": "w1"}, {"e": "e1"})
    assert graphs_isomorphic(G, TWO) is None
    p2 = corpus.polycyclic(2)
    relabelled = Graph(["q"], [("x", "q", "q"), ("y", "q", "q")])
    isos = list(graph_isomorphisms(p2, relabelled))
    assert len(isos) == 2
    assert graphs_isomorphic(p2, relabelled) == isos[0] == GraphHom({"v": "q"}, {"a": "x", "b": "y"})


def test_isomorphism_iff_table_isomorphism():
    graphs = CORPUS + [relabel(g)[0] for g in CORPUS[::3]]
    tables = [build_table(g) for g in graphs]
    positives = 0
    for (a, ta), (b, tb) in product(list(zip(graphs, tables)), repeat=2):
        if len(ta) != len(tb):
            assert graphs_isomorphic(a, b) is None
            continue
        found_graph = graphs_isomorphic(a, b) is not None
        found_table = tables_isomorphic(ta, tb) is not None
        assert found_graph == found_table, (a, b)
        assert (tables_isomorphic(tb, ta) is not None) == found_table
        positives += found_graph
    assert positives >= len(graphs)


def test_automorphism_examples():
    assert len(graph_automorphisms(G)) == 1
    assert len(graph_automorphisms(TWO)) == 2
    p2 = graph_automorphisms(corpus.polycyclic(2))
    assert len(p2) == 2
    assert GraphHom({"v": "v"}, {"a": "b", "b": "a"}) in p2


@pytest.mark.parametrize("g", CORPUS + [corpus.polycyclic(3), corpus.two_cycle()], ids=str)
def test_automorphisms_form_a_group(g):
    auts = set(graph_automorphisms(g))
    assert identity_hom(g) in auts
    for a, b in product(auts, repeat=2):
        assert a.compose(b) in auts
    for a in auts:
        assert a.inverse() in auts
        assert a.compose(a.inverse()) == identity_hom(g)


@pytest.mark.parametrize("g", [g for g in CORPUS if semigroup_size(g) <= 10], ids=str)
def test_automorphism_groups_match_under_extension(g):
    t = build_table(g)
    sg = {tuple(sorted(m.items())) for m in semigroup_automorphisms(t)}

    def as_perm(h):
        m = extend_hom(g, g, h)
        return tuple((i, t.index[m(a)]) for i, a in enumerate(t.elements))

    auts = graph_automorphisms(g)
    perms = {h: as_perm(h) for h in auts}
    assert set(perms.values()) == sg
    assert len(auts) == len(sg)
    for a, b in product(auts, repeat=2):
        pa, pb = dict(perms[a]), dict(perms[b])
        composed = tuple((i, pb[pa[i]]) for i in range(len(t)))
        assert perms[a.compose(b)] == composed


# -- J-poset automorphisms ------------------------------------------------------------


def test_jposet_automorphism_examples():
    assert jposet_order_automorphisms(G) == 1
    assert jposet_order_automorphisms(TWO) == 2
    diamond = Poset.from_relation(["b", "l", "r", "t"], [("b", "l"), ("b", "r"), ("l", "t"), ("r", "t")])
    g = realize_poset(diamond)
    assert jposet_order_automorphisms(g) == len(graph_automorphisms(g)) == 2


def test_jposet_automorphisms_need_simple_acyclic():
    with pytest.raises(NotSimpleAcyclic):
        jposet_order_automorphisms(corpus.parallel_edges(2))
    with pytest.raises(NotSimpleAcyclic):
        jposet_order_automorphisms(corpus.loop())


@pytest.mark.parametrize("g", [g for g in CORPUS if g.is_simple()], ids=str)
def test_jposet_automorphisms_match_on_the_corpus(g):
    assert jposet_order_automorphisms(g) == len(graph_automorphisms(g))


def _is_transitively_reduced(g):
    p = j_poset(g)
    return sorted((g.range(e), g.source(e)) for e in g.edges) == sorted(p.covers())


@pytest.mark.parametrize("n", [3, 4, 5])
def test_jposet_automorphisms_match_on_hasse_diagrams(n):
    pairs = [(i, j) for j in range(n) for i in range(j)]
    checked = 0
    for mask in range(1 << len(pairs)):
        es = [(f"e{k}", f"v{i}", f"v{j}") for k, (i, j) in enumerate(pairs) if mask >> k & 1]
        g = Graph([f"v{i}" for i in range(n)], es)
        if not _is_transitively_reduced(g):
            continue
        assert jposet_order_automorphisms(g) == len(graph_automorphisms(g))
        checked += 1
    assert checked > 0


def test_transitive_edge_breaks_the_automorphism_correspondence():
    # v2 and v3 are interchangeable in the J-poset, but only v2 receives the shortcut from v0
    g = Graph(
        ["v0", "v1", "v2", "v3"],
        [("a", "v0", "v1"), ("b", "v1", "v2"), ("c", "v1", "v3"), ("d", "v0", "v2")],
    )
    assert g.is_simple() and g.is_acyclic()
    assert jposet_order_automorphisms(g) == 2
    assert len(graph_automorphisms(g)) == 1
    assert len(semigroup_automorphisms(build_table(g))) == 1


# -- map files ------------------------------------------------------------------------


def test_parse_map_round_trip():
    h = GraphHom({"v": "w", "w": "v"}, {"e": "e"})
    assert parse_map(h.format()) == h
    assert parse_map("# c\nv a b\n\ne x y\n") == GraphHom({"a": "b"}, {"x": "y"})


def test_parse_map_errors():
    with pytest.raises(ParseError) as info:
        parse_map("v a b\nv a c\n")
    assert info.value.lineno == 2
    with pytest.raises(ParseError):
        parse_map("x a b")
    with pytest.raises(ParseError):
        parse_map("v a")


def test_semigroup_map_from_dict():
    table = {a: a for a in enumerate_elements(G)}
    m = SemigroupMap.from_dict(G, G, table)
    assert m.as_dict() == table
