"""
Congruences, Rees quotients and a non-Rees example
==================================================

Ideals of G(E) are reachability-closed vertex sets, and collapsing one gives
the graph inverse semigroup of the graph with those vertices removed.  Some
graphs also carry congruences that are not of this form.
"""

from gis import corpus
from gis.congruence import (
    NonReesCanonical,
    all_ideals,
    congruence_classes,
    has_only_rees_congruences,
    is_congruence_free,
    quotient_table,
    rees_congruence_classes,
    rees_quotient_graph,
)
from gis.oracle import build_table, enumerate_congruences, is_rees_partition, tables_isomorphic
from gis.semigroup import format_element

# %%
# Every ideal of the diamond, and the quotient it produces.
g = corpus.diamond()
for ideal in all_ideals(g):
    q = quotient_table(g, rees_congruence_classes(g, ideal))
    smaller = build_table(rees_quotient_graph(g, ideal))
    print(sorted(ideal.vertices), len(q), tables_isomorphic(q, smaller) is not None)

# %%
# On ``v -> w`` the relation generated by ``(v, e e^-1)`` does not collapse to zero.
g = corpus.one_edge()
spec = NonReesCanonical.for_edge(g, "e")
classes = congruence_classes(g, spec)
print([[format_element(a) for a in c] for c in classes])
q = quotient_table(g, classes)
print(len(q), "elements,", len(q.idempotents()), "idempotent")

# %%
# Listing every congruence confirms exactly one is not Rees.
t = build_table(g)
print([is_rees_partition(t, p) for p in enumerate_congruences(t)])
print("only Rees congruences:", has_only_rees_congruences(g))

# %%
# Two parallel edges compete with each other, so only Rees congruences survive.
pe = corpus.parallel_edges(2)
print("parallel edges, only Rees:", has_only_rees_congruences(pe))

# %%
# One vertex with n loops: congruence-free exactly when n > 1.
for n in (1, 2, 3):
    print(n, is_congruence_free(corpus.polycyclic(n)))
