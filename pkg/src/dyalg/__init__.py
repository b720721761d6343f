"""Exact symbolic computation in the universal algebras of Drinfeld-Yetter
diagrams: normal ordering, Hochschild cohomology, twists and gauges,
realizations on finite-dimensional Lie bialgebras and truncated Kac-Moody
Borels, and the nested-set combinatorics of diagram quotients."""

from .algebra import (AlgebraElement, alpha_map, alt, beta_map, compose_basis,
                      dim_formula, embed_slots, enumerate_basis, face_map,
                      filter_window, forget_split, hochschild_d, is_invariant,
                      kappa, kappa_alpha, omega, quotient_allowed, r_matrix,
                      rho_tilde_b, rho_tilde_pair, slot_permute)
from .bialgebra import (DYModuleData, LieBialgebraData, adjoint_module,
                        borel_sl2, drinfeld_double, evaluate,
                        tensor_module, trivial_module, validate_bialgebra,
                        validate_dy_module)
from .cohomology import (cohomology_dims, cohomology_table,
                         decompose_cocycle)
from .coxeter import (build_central_family, build_test_family,
                      build_unit_family, check_coxeter_family)
from .diagrams import (Diagram, compatible, maximal_nested_sets, mns_union,
                       quotient_diagram)
from .freelie import (expand_to_assoc, hochschild_target_dim,
                      lie_multilinear_basis, pbw_decompose,
                      wedge_multilinear_dim)
from .kacmoody import (KacMoodyBorel, build_kac_moody_borel, symmetrizer,
                       validate_bialgebra_windowed)
from .monoids import (RootCone, RootConeMod, SPLIT, Split, TRIVIAL, Trivial,
                      TruncationOverflow)
from .monodromy import (MonodromyMismatch, sl2_irrep, solve_local_monodromy,
                        triple_exponential)
from .series import GradedSeries
from .terms import random_term, straighten, term_from_json, term_to_json
from .twists import (GaugeObstruction, associator_2jet,
                     check_associator_axioms, gauge, solve_gauge,
                     twist_conjugate, twist_equation_residual)

__version__ = "0.1.0"
