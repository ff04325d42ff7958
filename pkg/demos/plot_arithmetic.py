"""
Arithmetic in a graph inverse semigroup
=======================================

Every nonzero element of G(E) is a pair of paths ``x/y`` with a common
range, read as ``x y^-1``.  Products cancel the shorter path against the
longer one or collapse to zero.
"""

from gis.graph import parse_graph
from gis.oracle import build_table, reduce_word
from gis.semigroup import enumerate_elements, format_element, invert, multiply, parse_element

# %%
# A single edge ``v -> w`` already gives a six-element semigroup.
g = parse_graph("""
vertex v
vertex w
edge e v w
""")
elements = enumerate_elements(g)
print([format_element(a) for a in elements])

# %%
# ``e^-1 e`` is the range vertex, ``e e`` is zero, ``e e^-1`` is a new idempotent.
e = parse_element(g, "e")
e_inv = invert(e)
for a, b in [(e_inv, e), (e, e), (e, e_inv)]:
    print(f"{format_element(a):>4} * {format_element(b):<4} = {format_element(multiply(g, a, b))}")

# %%
# Rewriting a word letter by letter with the defining relations lands on the
# same normal form as the closed-form product.
word = ["v", "e", "e^-1", "e", "w"]
print(format_element(reduce_word(g, word)))

# %%
# The whole multiplication table, with elements indexed in canonical order.
t = build_table(g)
print(t.table)
print("idempotents:", [format_element(t.elements[i]) for i in t.idempotents()])
