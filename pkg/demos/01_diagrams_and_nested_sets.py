"""Diagrams, nested sets, and quotients.

Connected subdiagrams of a Dynkin-type graph, pairwise compatibility, the
maximal nested families that index chamber data, and the quotient diagram
construction.
"""

from dyalg import Diagram, compatible, maximal_nested_sets, mns_union, \
    quotient_diagram

a3 = Diagram.path(3)
print("The path diagram on three vertices:", a3.to_json())

print("\n{1} and {3} are orthogonal, hence compatible:",
      compatible({1}, {3}, a3))
print("{1} and {2,3} touch without nesting, hence incompatible:",
      compatible({1}, {2, 3}, a3))

print("\nMaximal nested sets (there are 5, the pentagon):")
for fam in maximal_nested_sets(a3):
    print("  ", sorted(sorted(m) for m in fam))

for n in (1, 2, 3, 4):
    count = len(maximal_nested_sets(Diagram.path(n)))
    print(f"path with {n} vertices: {count} maximal nested sets")

print("\nQuotient by the middle vertex joins the outer two:")
print("  ", quotient_diagram(a3, {2}).to_json())
print("Quotient by an end vertex leaves a shorter path:")
print("  ", quotient_diagram(a3, {3}).to_json())

print("\nCombining maximal nested sets along the chain {} < {1} < {1,2,3}:")
up = quotient_diagram(a3, {1})
for f in maximal_nested_sets(up):
    for g in maximal_nested_sets(a3.induced({1})):
        union = mns_union(f, g, a3, frozenset({1, 2, 3}), frozenset({1}),
                          frozenset())
        print("  ", sorted(sorted(m) for m in f), "+",
              sorted(sorted(m) for m in g), "->",
              sorted(sorted(m) for m in union))
