"""
Faithful representations by partial maps
========================================

The least degree of a faithful representation of a finite G(E) equals the
number of paths ending at a vertex with out-degree at most one.
"""

from gis import corpus
from gis.oracle import build_table, faithful_representation, join_irreducible_idempotents
from gis.representation import min_faithful_degree, vagner_preston
from gis.semigroup import format_element

# %%
# Degree formula against brute-force join-irreducibles.
for name in ("single_vertex", "one_edge", "chain_3", "diamond", "parallel_2"):
    g = corpus.named_graphs()[name]
    t = build_table(g)
    ji = [format_element(t.elements[i]) for i in join_irreducible_idempotents(t)]
    print(f"{name:14} degree {min_faithful_degree(g)}  join-irreducible {ji}")

# %%
# Cycles make G(E) infinite and no finite degree works.
print(min_faithful_degree(corpus.loop()))

# %%
# The right regular representation uses every element as a point.
rep = vagner_preston(corpus.one_edge())
print(rep.format())
print("faithful:", rep.is_faithful(), " homomorphism:", rep.is_homomorphism(corpus.one_edge()))

# %%
# Exhaustive search: for v -> w nothing works on 2 points but 3 is enough.
t = build_table(corpus.one_edge())
print(faithful_representation(t, 2))
found = faithful_representation(t, 3)
for i, images in sorted(found.items()):
    print(f"{format_element(t.elements[i]):>4}: {images}")
