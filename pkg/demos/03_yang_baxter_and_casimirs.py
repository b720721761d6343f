"""The canonical one-strand elements and their exact relations.

The crossing element r satisfies the classical Yang-Baxter equation; its
symmetrization generates a representation of the infinitesimal braid
relations; Casimir strands are central; decorated Casimir components
commute inside weight windows.
"""

from dyalg import (AlgebraElement, RootCone, enumerate_basis, filter_window,
                   hochschild_d, is_invariant, kappa, kappa_alpha, omega,
                   r_matrix)
from dyalg.algebra import cone_elements

r12, r13, r23 = r_matrix(3, 1, 2), r_matrix(3, 1, 3), r_matrix(3, 2, 3)
cybe = r12.commutator(r13) + r12.commutator(r23) + r13.commutator(r23)
print("classical Yang-Baxter:", "0" if cybe.is_zero() else cybe)

tt1 = omega(3, 1, 2).commutator(omega(3, 1, 3) + omega(3, 2, 3))
tt2 = omega(4, 1, 2).commutator(omega(4, 3, 4))
print("infinitesimal braid relations hold:",
      tt1.is_zero() and tt2.is_zero())

print("omega is invariant:", is_invariant(omega(2, 1, 2)),
      "| r alone is not:", is_invariant(r_matrix(2, 1, 2)))

k = kappa(1, 1)
central = all((k * AlgebraElement.basis(1, b)
               - AlgebraElement.basis(1, b) * k).is_zero()
              for deg in range(4) for b in enumerate_basis(1, deg))
print("Casimir strand central up to degree 3:", central)

print("d(kappa) = -omega:", hochschild_d(k) == -1 * omega(2, 1, 2))

cone = RootCone(2, 8)
print("\nDecorated components: [k_0, k_a] = 0:",
      kappa_alpha((0, 0), cone).commutator(
          kappa_alpha((1, 0), cone)).is_zero())

window = 3
total = AlgebraElement.zero(1, cone)
for beta in cone_elements(cone, {1, 2}, window):
    total = total + kappa_alpha(beta, cone)
alpha = (1, 0)
comm = kappa_alpha(alpha, cone).commutator(total)
print("windowed commutator with the full cone sum vanishes below the "
      "window:", filter_window(comm, window - 1).is_zero())
print("(the raw commutator keeps boundary terms:", not comm.is_zero(), ")")
