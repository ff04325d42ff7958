"""
Green's relations and the J-class poset
=======================================

Green's relations on G(E) are read straight off the normal form, and the
nonzero J-classes are the strongly connected components of the graph,
ordered by reachability.
"""

from gis import corpus
from gis.graph import parse_graph, scc
from gis.green import Poset, format_poset, hasse_dot, j_poset, realize_poset, related
from gis.oracle import build_table, green_relations
from gis.semigroup import format_element

# %%
# Two vertices on a cycle, with a tail hanging off.
g = parse_graph("""
vertex a
vertex b
vertex c
edge ab a b
edge ba b a
edge bc b c
""")
print([sorted(c) for c in scc(g).components])
print(format_poset(j_poset(g)))

# %%
# On a finite example the formulas agree with ideals computed from the table.
d = corpus.diamond()
t = build_table(d)
oracle = green_relations(t)
agree = all(
    related(d, rel, a, b) == bool(oracle[rel][i, j])
    for rel in "LRJHD"
    for i, a in enumerate(t.elements)
    for j, b in enumerate(t.elements)
)
print("formulas match the table:", agree)

# %%
# The D-class of ``az`` in the diamond: everything whose range is ``z``.
az = t.elements[[format_element(x) for x in t.elements].index("az")]
print(sorted(format_element(x) for x in t.elements if x is not az and related(d, "D", az, x)))

# %%
# Any finite poset is the J-poset of some graph: draw the covers as edges.
p = Poset.from_relation(["bot", "x", "y", "top"], [("bot", "x"), ("bot", "y"), ("x", "top"), ("y", "top")])
h = realize_poset(p)
print(h.triples())
print(hasse_dot(j_poset(h)))
