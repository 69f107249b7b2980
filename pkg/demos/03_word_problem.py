"""Deciding equality of words: rewrite chains, f-map separation and exact enumeration."""
from hkmonoid.graph import cycle_graph, path_graph
from hkmonoid.rewriting import are_equal, enumerate_monoid, normalize
from hkmonoid.words import format_word

c3 = cycle_graph(3)
for u, v in [((2, 1, 2, 1), (1, 2)), ((3, 1, 2), (3, 1, 2, 3, 1, 2)), ((3, 2, 1, 3), (3, 2, 1))]:
    print(f"C_3: {format_word(u)} vs {format_word(v)}: {are_equal(u, v, c3)}")

print("normal form of 1 2 1 2 1 in C_3:", normalize((1, 2, 1, 2, 1), c3))

# acyclic graphs give finite monoids, enumerated exactly
for n in range(1, 7):
    M = enumerate_monoid(path_graph(n))
    print(f"oriented path on {n} vertices: {len(M)} elements, {len(M.idempotents())} idempotents")

a2 = path_graph(2)
print("path 2:", are_equal((2, 1), (1, 2), a2))
