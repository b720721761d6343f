"""Hochschild cohomology of the diagram algebra tower, per strand degree.

The face maps preserve strand count, so each degree gives a finite complex
over the rationals.  Computed dimensions are cross-checked against an
independent oracle: coinvariants of exterior powers of the multilinear
free Lie algebra, with the decoration factor for the refined monoids.
"""

from dyalg import SPLIT, TRIVIAL, RootCone, cohomology_table, \
    decompose_cocycle, omega

print("strand degree | n | dim | ker | im | H | oracle | match")
for monoid, name in ((TRIVIAL, "plain"), (SPLIT, "split"),
                     (RootCone(2, 1), "cone")):
    for deg in (1, 2):
        for row in cohomology_table(deg, 3, monoid):
            print(f"{name:>6} N={row['strand_degree']} n={row['n']} "
                  f"dim={row['dim']:>3} ker={row['dim_ker']:>3} "
                  f"im={row['dim_im']:>3} H={row['dim_H']:>2} "
                  f"oracle={row['oracle']} match={row['match']}")
    print()

print("Splitting a cocycle into exact and harmonic parts:")
v, mu = decompose_cocycle(omega(2, 1, 2))
print("  omega = d(v) + mu with v =", v, " and mu =", mu)
