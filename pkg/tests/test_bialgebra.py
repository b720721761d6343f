import itertools
import random
from fractions import Fraction

import pytest

from dyalg.algebra import (AlgebraElement, alpha_map, beta_map,
                           enumerate_basis, face_map, kappa, r_matrix)
from dyalg.bialgebra import (DYModuleData, LieBialgebraData, abelian_bialgebra,
                             adjoint_module, borel_sl2, cartan_of_borel_sl2,
                             dense_of_sparse, double_pairing, drinfeld_double,
                             evaluate, evaluate_slices, eye, madd, matmul,
                             mscale, restrict_module, tensor_module,
                             trivial_module, validate_bialgebra,
                             validate_dy_module, zeros)
from dyalg.monoids import SPLIT
from dyalg.terms import random_term, straighten


def test_borel_valid():
    assert validate_bialgebra(borel_sl2()) == []
    assert validate_bialgebra(abelian_bialgebra(3)) == []


def test_seeded_cobracket_failure_named():
    b = borel_sl2()
    bad = LieBialgebraData(
        2, b.bracket,
        [[[0, 0], [0, 0]], [[0, 1], [1, 0]]])  # non-antisymmetric delta(e)
    report = validate_bialgebra(bad)
    assert any("cobracket antisymmetry" in line for line in report)


def test_double_structure():
    b = borel_sl2()
    g = drinfeld_double(b)
    assert g.dim == 4
    assert validate_bialgebra(g) == []
    # invariance of the canonical form on all basis triples
    form = double_pairing(b.dim)
    for i, j, k in itertools.product(range(4), repeat=3):
        lhs = sum(g.bracket[i][j][m] * form[m][k] for m in range(4))
        rhs = sum(form[i][m] * g.bracket[j][k][m] for m in range(4))
        assert lhs == rhs
    # isotropy
    for i, j in itertools.product(range(2), repeat=2):
        assert form[i][j] == 0
        assert form[2 + i][2 + j] == 0


def test_double_of_abelian():
    g = drinfeld_double(abelian_bialgebra(1))
    assert g.dim == 2
    assert all(not c for row in g.bracket for vec in row for c in vec)


def test_module_fleet_valid():
    b = borel_sl2()
    adj = adjoint_module(b)
    assert validate_dy_module(b, adj) == []
    assert validate_dy_module(b, trivial_module(b)) == []
    assert validate_dy_module(b, tensor_module(adj, adj)) == []
    a1 = abelian_bialgebra(1)
    assert validate_dy_module(a1, adjoint_module(a1)) == []


def test_seeded_module_failure():
    b = borel_sl2()
    adj = adjoint_module(b)
    bad = DYModuleData(b, [madd(adj.actions[0], eye(4)), adj.actions[1]],
                       adj.coactions)
    assert validate_dy_module(b, bad)


def test_evaluate_unit_and_linearity():
    b = borel_sl2()
    adj = adjoint_module(b)
    assert evaluate(AlgebraElement.unit(1), [adj]) == eye(4)
    k = kappa(1, 1)
    assert evaluate(3 * k, [adj]) == mscale(3, evaluate(k, [adj]))


def test_realization_homomorphism_all_pairs_strings_leq_3():
    b = borel_sl2()
    adj = adjoint_module(b)
    for d1 in range(3):
        for d2 in range(3 - d1 + 1):
            if d1 + d2 > 3:
                continue
            for k1 in enumerate_basis(1, d1):
                for k2 in enumerate_basis(1, d2):
                    x = AlgebraElement.basis(1, k1)
                    y = AlgebraElement.basis(1, k2)
                    assert evaluate(x * y, [adj]) == matmul(
                        evaluate(x, [adj]), evaluate(y, [adj]))


def test_cybe_for_canonical_element_on_matrices():
    b = borel_sl2()
    adj = adjoint_module(b)
    triv = trivial_module(b)
    mods = [adj, adj, adj]
    r12, r13, r23 = (r_matrix(3, 1, 2), r_matrix(3, 1, 3), r_matrix(3, 2, 3))
    total = (r12.commutator(r13) + r12.commutator(r23)
             + r13.commutator(r23))
    assert evaluate(total, mods) == zeros(64)


def test_face_map_matches_module_tensor_product():
    b = borel_sl2()
    adj = adjoint_module(b)
    triv = trivial_module(b)
    both = tensor_module(adj, triv)
    rng = random.Random(4)
    for _ in range(6):
        deg = rng.randint(0, 2)
        key = rng.choice(enumerate_basis(2, deg))
        x = AlgebraElement.basis(2, key)
        merged = evaluate(face_map(1, x), [adj, triv, adj])
        direct = evaluate(x, [both, adj])
        assert merged == direct


def test_naturality_under_module_maps():
    # the action of any element commutes with the flip V(x)W -> W(x)V
    # composed with itself (a module morphism V(x)W -> V(x)W)
    b = borel_sl2()
    adj = adjoint_module(b)
    x = kappa(2, 1) * r_matrix(2, 1, 2)
    m = evaluate(x, [adj, adj])
    dim = adj.dim
    flip = [[Fraction(0)] * dim ** 2 for _ in range(dim ** 2)]
    for i in range(dim):
        for j in range(dim):
            flip[j * dim + i][i * dim + j] = Fraction(1)
    flip = tuple(tuple(r) for r in flip)
    y = evaluate(
        __import__("dyalg.algebra", fromlist=["slot_permute"]).slot_permute(
            x, (2, 1)), [adj, adj])
    assert matmul(flip, m) == matmul(y, flip)


def test_up_down_diagram_on_split_pair():
    # big = borel of sl2 with its distinguished Cartan; small = the Cartan
    big = borel_sl2()
    small = cartan_of_borel_sl2()
    adj = adjoint_module(big)
    restricted = restrict_module(adj, small, [0])
    assert validate_dy_module(small, restricted) == []
    for deg in range(3):
        for key in enumerate_basis(1, deg):
            x = AlgebraElement.basis(1, key)
            # beta forgets the splitting: evaluates like x over the big one
            assert evaluate(beta_map(x), [adj]) == evaluate(x, [adj])
            # alpha restricts to the small sub-bialgebra
            assert evaluate(alpha_map(x), [adj]) == evaluate(x, [restricted])


def test_lie_bialgebra_json_round_trip():
    b = borel_sl2()
    back = LieBialgebraData.from_json(b.to_json())
    assert back.bracket == b.bracket and back.cobracket == b.cobracket
    assert back.weights == b.weights


def test_open_leg_rule_evaluation():
    # exchange rule: both sides agree as maps with one open leg
    b = borel_sl2()
    adj = adjoint_module(b)
    lhs = evaluate_slices([("action", 1), ("coaction", 1)], 1, b, [adj],
                          initial_legs=1)
    swap = evaluate_slices([("coaction", 1), ("perm", (2, 1)), ("action", 1)],
                           1, b, [adj], initial_legs=1)
    bracket = evaluate_slices([("coaction", 1), ("mu",)], 1, b, [adj],
                              initial_legs=1)
    cobr = evaluate_slices([("delta",), ("action", 1)], 1, b, [adj],
                           initial_legs=1)
    total = {}
    for op, sign in ((swap, 1), (bracket, 1), (cobr, -1)):
        for out_state, row in op.items():
            for in_state, c in row.items():
                key = (out_state, in_state)
                total[key] = total.get(key, Fraction(0)) + sign * c
    lhs_flat = {(o, i): c for o, row in lhs.items() for i, c in row.items()}
    total = {k: v for k, v in total.items() if v}
    lhs_flat = {k: v for k, v in lhs_flat.items() if v}
    assert lhs_flat == total
