"""Evaluating universal elements on concrete Lie bialgebras.

Any finite-dimensional Lie bialgebra with a module/comodule pair realizes
the diagram algebra through exact matrices; this is the independent oracle
for the straightening engine.  Truncated Kac-Moody Borels provide graded
examples whose root decorations match the cone monoids.
"""

from dyalg import (adjoint_module, borel_sl2, build_kac_moody_borel,
                   drinfeld_double, evaluate, kappa, validate_bialgebra,
                   validate_bialgebra_windowed, validate_dy_module)
from dyalg.bialgebra import matmul

b = borel_sl2()
print("rank-one Borel valid:", validate_bialgebra(b) == [])

g = drinfeld_double(b)
print("its double has dimension", g.dim, "and passes validation:",
      validate_bialgebra(g) == [])

adj = adjoint_module(b)
print("adjoint module of the double is a module/comodule pair:",
      validate_dy_module(b, adj) == [])

k = kappa(1, 1)
print("\nmatrix of the Casimir strand on the adjoint module:")
for row in evaluate(k, [adj]):
    print("  ", [str(c) for c in row])

print("\nevaluation is multiplicative:",
      evaluate(k * k, [adj]) == matmul(evaluate(k, [adj]),
                                       evaluate(k, [adj])))

print("\ntruncated Kac-Moody Borels:")
for name, cartan in (("rank one", [[2]]),
                     ("rank two simply laced", [[2, -1], [-1, 2]]),
                     ("rank two affine", [[2, -2], [-2, 2]])):
    borel = build_kac_moody_borel(cartan, 2)
    report = validate_bialgebra_windowed(borel, 2)
    print(f"  {name}: dim {borel.dim}, basis {borel.basis_names}, "
          f"windowed validation {'ok' if not report else report}")
