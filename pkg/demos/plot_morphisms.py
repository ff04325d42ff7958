"""
Graph maps and semigroup maps
=============================

Injective graph homomorphisms extend uniquely to zero-preserving semigroup
homomorphisms, and automorphisms of the graph match those of G(E).
"""

from itertools import product

from gis import corpus
from gis.graph import Graph
from gis.morphisms import GraphHom, extend_hom, graph_automorphisms, jposet_order_automorphisms, restrict_iso
from gis.oracle import build_table, semigroup_automorphisms
from gis.semigroup import enumerate_elements, format_element, multiply

# %%
# Embed a two-edge chain into the diamond along its left side.
chain = corpus.chain(3)
diamond = corpus.diamond()
h = GraphHom({"v0": "t", "v1": "a", "v2": "z"}, {"e0": "ta", "e1": "az"})
m = extend_hom(chain, diamond, h)
for a in enumerate_elements(chain)[:8]:
    print(f"{format_element(a):>8} -> {format_element(m(a))}")
els = enumerate_elements(chain)
print("multiplicative:", all(m(multiply(chain, a, b)) == multiply(diamond, m(a), m(b)) for a, b in product(els, els)))

# %%
# Automorphism counts on both sides.
for name, g in corpus.named_graphs().items():
    if g.is_acyclic() and len(enumerate_elements(g)) <= 10:
        print(f"{name:14} graph {len(graph_automorphisms(g))}  semigroup {len(semigroup_automorphisms(build_table(g)))}")

# %%
# Restricting the extension of an automorphism recovers it.
swap = graph_automorphisms(diamond)[1]
print(restrict_iso(diamond, diamond, extend_hom(diamond, diamond, swap)) == swap)

# %%
# A shortcut edge hides a symmetry that the J-poset still sees.
g = Graph(["v0", "v1", "v2", "v3"], [("a", "v0", "v1"), ("b", "v1", "v2"), ("c", "v1", "v3"), ("d", "v0", "v2")])
print("graph:", len(graph_automorphisms(g)), " J-poset:", jposet_order_automorphisms(g))
