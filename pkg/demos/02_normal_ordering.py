"""Straightening diagram composites to the canonical basis.

A diagram endomorphism is a composite of coactions, actions, brackets and
cobrackets on bialgebra legs.  Normal ordering moves every coaction before
every action and eliminates the bracket nodes, with exact rational
coefficients.
"""

from dyalg import kappa, r_matrix, straighten
from dyalg.rewrite import RandomScheduler

print("The Casimir strand k (coaction then action on one line):")
print("  ", kappa(1, 1))

print("\nIts square straightens to a two-strand combination:")
print("  ", kappa(1, 1) * kappa(1, 1))

print("\nThe same computed from a raw slice term:")
term = [("coaction", 1), ("action", 1), ("coaction", 1), ("action", 1)]
print("  ", straighten(term, 1))

print("\nA bracket fed by two coactions, then one action (the bracket")
print("is eliminated into ordered two-action diagrams):")
term = [("coaction", 1), ("coaction", 1), ("mu",), ("action", 1)]
print("  ", straighten(term, 1))

print("\nA cobracket on a coaction leg, both halves consumed:")
term = [("coaction", 1), ("delta",), ("action", 1), ("action", 1)]
print("  ", straighten(term, 1))

print("\nSchedules do not matter: five randomized runs agree.")
term = [("coaction", 1), ("action", 1), ("coaction", 1), ("delta",),
        ("action", 1), ("action", 1)]
reference = straighten(term, 1)
agree = all(straighten(term, 1, scheduler=RandomScheduler(seed=s))
            == reference for s in range(5))
print("   all equal:", agree)
print("   value:", reference)

print("\nProducts are graded by strand count:")
r = r_matrix(2, 1, 2)
print("   r has degree", r.degrees(), "and r*r has degree",
      (r * r).degrees())
