"""Acceptance suite: every criterion prints one pass/fail line.

All assertions are exact (rational arithmetic end to end); the randomized
parts take a fixed seed.  Expected total runtime is a few minutes.
"""

import itertools
import math
import random
from fractions import Fraction

import pytest

from dyalg import linalg
from dyalg.algebra import (AlgebraElement, alpha_map, beta_map, cone_elements,
                           dim_formula, embed_slots, enumerate_basis,
                           face_map, filter_window, hochschild_d, kappa,
                           kappa_alpha, omega, r_matrix)
from dyalg.bialgebra import (abelian_bialgebra, adjoint_module, borel_sl2,
                             cartan_of_borel_sl2, dense_of_sparse,
                             drinfeld_double, evaluate, evaluate_slices,
                             matmul, restrict_module, tensor_module,
                             trivial_module, validate_dy_module)
from dyalg.cohomology import cohomology_table, harmonic_complement
from dyalg.diagrams import Diagram, maximal_nested_sets, mns_union, \
    quotient_diagram
from dyalg.kacmoody import KacMoodyBorel, build_kac_moody_borel, \
    validate_bialgebra_windowed
from dyalg.monodromy import (conjugate_by_scalar_h, sl2_irrep,
                             solve_local_monodromy,
                             weight_zero_correction_series)
from dyalg.monoids import RootCone, SPLIT, TRIVIAL
from dyalg.rewrite import RandomScheduler
from dyalg.series import GradedSeries
from dyalg.terms import random_term, straighten
from dyalg.twists import (GaugeObstruction, associator_2jet,
                          check_associator_axioms, gauge, solve_gauge,
                          twist_equation_residual)

SEED = 20260809


def _report(criterion: str, ok: bool) -> None:
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'}")
    assert ok, criterion


# -- 1. basis and grading ----------------------------------------------------

def test_criterion_01_basis_dimensions():
    ok = all(len(enumerate_basis(1, deg)) == math.factorial(deg)
             for deg in range(5))
    ok = ok and all(
        len(enumerate_basis(2, deg))
        == (deg + 1) ** 2 * math.factorial(deg) == dim_formula(2, deg)
        for deg in range(4))
    _report("01 basis dimensions", ok)


# -- 2. structure constants --------------------------------------------------

def test_criterion_02_associativity_and_grading():
    ok = True
    keys1 = {d: enumerate_basis(1, d) for d in range(6)}
    for a, b, c in itertools.product(range(6), repeat=3):
        if a + b + c > 5:
            continue
        for k1 in keys1[a]:
            x = AlgebraElement.basis(1, k1)
            for k2 in keys1[b]:
                y = AlgebraElement.basis(1, k2)
                xy = x * y
                ok = ok and xy.degrees() <= {a + b}
                for k3 in keys1[c]:
                    z = AlgebraElement.basis(1, k3)
                    ok = ok and (xy * z) == (x * (y * z))
    keys2 = {d: enumerate_basis(2, d) for d in range(5)}
    for a, b, c in itertools.product(range(5), repeat=3):
        if a + b + c > 4:
            continue
        for k1 in keys2[a]:
            x = AlgebraElement.basis(2, k1)
            for k2 in keys2[b]:
                y = AlgebraElement.basis(2, k2)
                xy = x * y
                ok = ok and xy.degrees() <= {a + b}
                for k3 in keys2[c]:
                    z = AlgebraElement.basis(2, k3)
                    ok = ok and (xy * z) == (x * (y * z))
    _report("02 associativity and degree additivity", ok)


# -- 3. rewrite soundness ----------------------------------------------------

def _flatten(op):
    return {(o, i): c for o, row in op.items() for i, c in row.items() if c}


def _combine(parts, n, bia, mods, legs):
    total = {}
    for slices, sign in parts:
        op = evaluate_slices(slices, n, bia, mods, initial_legs=legs)
        for key, c in _flatten(op).items():
            total[key] = total.get(key, Fraction(0)) + sign * c
    return {k: v for k, v in total.items() if v}


RULES = [
    # exchange: action then coaction = swap + bracket - cobracket
    ([("action", 1), ("coaction", 1)],
     [([("coaction", 1), ("perm", (2, 1)), ("action", 1)], 1),
      ([("coaction", 1), ("mu",)], 1),
      ([("delta",), ("action", 1)], -1)], 1),
    # action of a bracket
    ([("mu",), ("action", 1)],
     [([("action", 1), ("action", 1)], 1),
      ([("perm", (2, 1)), ("action", 1), ("action", 1)], -1)], 2),
    # cobracket of a coaction leg
    ([("coaction", 1), ("delta",)],
     [([("coaction", 1), ("coaction", 1), ("perm", (2, 1))], 1),
      ([("coaction", 1), ("coaction", 1)], -1)], 0),
    # cocycle reordering
    ([("mu",), ("delta",)],
     [([("perm", (2, 1)), ("delta",), ("perm", (3, 1, 2)), ("mu",)], 1),
      ([("delta",), ("perm", (3, 1, 2)), ("mu",)], -1),
      ([("perm", (2, 1)), ("delta",), ("perm", (3, 1, 2)), ("mu",),
        ("perm", (2, 1))], -1),
      ([("delta",), ("perm", (3, 1, 2)), ("mu",), ("perm", (2, 1))], 1)], 2),
]


def test_criterion_03_rewrite_soundness():
    b = borel_sl2()
    adj = adjoint_module(b)
    a1 = abelian_bialgebra(1)
    fleets = [(b, adjoint_module(b)), (b, tensor_module(adj, adj)),
              (a1, adjoint_module(a1))]
    ok = True
    for lhs, rhs, legs in RULES:
        for bia, mod in fleets:
            got = _combine([(lhs, 1)], 1, bia, [mod], legs)
            want = _combine(rhs, 1, bia, [mod], legs)
            ok = ok and got == want
    # decorated pushes on the split-weighted Borel
    split_rules = [
        ([("mu",), ("decor", 1, 1)],
         [([("decor", 1, i), ("decor", 2, j), ("mu",)], 1)
          for i, j in ((0, 1), (1, 0), (1, 1))], 2),
        ([("decor", 1, 0), ("delta",)],
         [([("delta",), ("decor", 1, 0), ("decor", 2, 0)], 1)], 1),
    ]
    for lhs, rhs, legs in split_rules:
        got = _combine([(lhs, 1)], 1, b, [adj], legs)
        want = _combine(rhs, 1, b, [adj], legs)
        ok = ok and got == want
    # 100 random endomorphism terms match their straightened form
    rng = random.Random(SEED)
    for _ in range(100):
        n = rng.choice([1, 1, 2])
        slices = random_term(n, rng, max_nodes=6)
        elt = straighten(slices, n)
        for bia, mod in fleets:
            mods = [mod] * n
            direct = dense_of_sparse(
                evaluate_slices(slices, n, bia, mods), mods)
            ok = ok and direct == evaluate(elt, mods)
    # 200 randomized schedules agree with the canonical output
    runs = 0
    while runs < 200:
        n = rng.choice([1, 2])
        slices = random_term(n, rng, max_nodes=6)
        ref = straighten(slices, n)
        for s in range(5):
            got = straighten(slices, n,
                             scheduler=RandomScheduler(seed=SEED + runs))
            ok = ok and got == ref
            runs += 1
    _report("03 rewrite soundness", ok)


# -- 4. Yang-Baxter and crossing relations ------------------------------------

def test_criterion_04_cybe_and_crossings():
    r12, r13, r23 = (r_matrix(3, 1, 2), r_matrix(3, 1, 3),
                     r_matrix(3, 2, 3))
    cybe = (r12.commutator(r13) + r12.commutator(r23)
            + r13.commutator(r23))
    ok = cybe.is_zero()
    ok = ok and omega(3, 1, 2).commutator(
        omega(3, 1, 3) + omega(3, 2, 3)).is_zero()
    ok = ok and omega(4, 1, 2).commutator(omega(4, 3, 4)).is_zero()
    _report("04 Yang-Baxter and crossing relations", ok)


# -- 5. coproduct formula ----------------------------------------------------

def test_criterion_05_coproduct_of_omega():
    ok = True
    for (i, j) in ((1, 2), (2, 1)):
        base = omega(2, i, j)
        expected = {
            0: omega(3, 2, 3),
            1: omega(3, 1, 3) + omega(3, 2, 3),
            2: omega(3, 1, 2) + omega(3, 1, 3),
            3: omega(3, 1, 2),
        }
        for k, want in expected.items():
            ok = ok and face_map(k, base) == want
    _report("05 coproduct of the symmetrized crossing", ok)


# -- 6. Casimir identities ----------------------------------------------------

def test_criterion_06_casimir_identities():
    k = kappa(1, 1)
    ok = True
    for deg in range(5):
        for b in enumerate_basis(1, deg):
            x = AlgebraElement.basis(1, b)
            ok = ok and (k * x - x * k).is_zero()
    ksum = kappa(2, 1) + kappa(2, 2)
    for deg in range(4):
        for b in enumerate_basis(2, deg):
            ok = ok and ksum.commutator(AlgebraElement.basis(2, b)).is_zero()
    cone = RootCone(2, 10)
    # decorated: [k_0, k_alpha] = 0
    ok = ok and kappa_alpha((0, 0), cone).commutator(
        kappa_alpha((1, 1), cone)).is_zero()
    # windowed sub-cone sums commute with their members
    window = 3
    for support in ({1}, {1, 2}):
        total = AlgebraElement.zero(1, cone)
        for beta in cone_elements(cone, support, window):
            total = total + kappa_alpha(beta, cone)
        for alpha in cone_elements(cone, support, 1):
            comm = kappa_alpha(alpha, cone).commutator(total)
            ok = ok and filter_window(comm, window - sum(alpha)).is_zero()
    # rank-2 sublattice (doubled first coordinate)
    window = 4
    sub = [a for a in cone_elements(cone, {1, 2}, window) if a[0] % 2 == 0]
    total = AlgebraElement.zero(1, cone)
    for beta in sub:
        total = total + kappa_alpha(beta, cone)
    comm = kappa_alpha((2, 0), cone).commutator(total)
    kept = AlgebraElement(1, cone, {
        key: c for key, c in filter_window(comm, window - 2).terms.items()
        if all(d in set(sub) for d in key[3])})
    ok = ok and kept.is_zero()
    _report("06 Casimir identities", ok)


# -- 7. Hochschild -----------------------------------------------------------

def test_criterion_07_hochschild():
    ok = True
    monoids = ((TRIVIAL, "trivial"), (SPLIT, "split"),
               (RootCone(2, 1), "cone"))
    for monoid, _ in monoids:
        for n in (1, 2, 3):
            for deg in (0, 1, 2, 3):
                for b in enumerate_basis(n, deg, monoid):
                    x = AlgebraElement.basis(n, b, monoid)
                    ok = ok and hochschild_d(hochschild_d(x)).is_zero()
    findings = []
    for monoid, name in monoids:
        for deg in (1, 2, 3):
            if deg == 3 and monoid is not TRIVIAL:
                continue  # rank guard; low-degree vanishing shown separately
            rows = cohomology_table(deg, 2 if deg < 3 else 1, monoid)
            for r in rows:
                if r["n"] <= 1 and r["dim_H"] != 0:
                    findings.append((name, deg, r["n"], r["dim_H"]))
                if r["oracle"] is not None and not r["match"]:
                    findings.append((name, deg, r["n"],
                                     (r["dim_H"], r["oracle"])))
    # degree-3 low-degree vanishing for the decorated monoids via kernels
    for monoid, name in ((SPLIT, "split"), (RootCone(2, 1), "cone")):
        rows = cohomology_table(3, 1, monoid)
        for r in rows:
            if r["n"] <= 1 and r["dim_H"] != 0:
                findings.append((name, 3, r["n"], r["dim_H"]))
    if findings:
        print(f"FLAGGED FINDINGS (low-degree cohomology): {findings}")
    ok = ok and not findings
    _report("07 Hochschild: d squared, vanishing, oracle match", ok)


# -- 8. realization homomorphism ----------------------------------------------

def test_criterion_08_realization():
    big = borel_sl2()
    adj = adjoint_module(big)
    ok = validate_dy_module(big, adj) == []
    for d1 in range(4):
        for d2 in range(4 - d1):
            for k1 in enumerate_basis(1, d1):
                x = AlgebraElement.basis(1, k1)
                ex = evaluate(x, [adj])
                for k2 in enumerate_basis(1, d2):
                    y = AlgebraElement.basis(1, k2)
                    ok = ok and evaluate(x * y, [adj]) == matmul(
                        ex, evaluate(y, [adj]))
    # restriction diagram for the split pair (Borel, Cartan)
    small = cartan_of_borel_sl2()
    restricted = restrict_module(adj, small, [0])
    ok = ok and validate_dy_module(small, restricted) == []
    for deg in range(3):
        for key in enumerate_basis(1, deg):
            x = AlgebraElement.basis(1, key)
            ok = ok and evaluate(beta_map(x), [adj]) == evaluate(x, [adj])
            ok = ok and evaluate(alpha_map(x), [adj]) == evaluate(
                x, [restricted])
    _report("08 realization homomorphism and restriction diagram", ok)


# -- 9. twist rigidity ---------------------------------------------------------

def test_criterion_09_twist_rigidity():
    rng = random.Random(SEED)
    order = 3
    one3 = GradedSeries.one(3, order, SPLIT)
    j0 = GradedSeries.one(2, order, SPLIT)
    ok = True
    for _ in range(20):
        parts = {}
        for d in range(1, order + 1):
            keys = enumerate_basis(1, d, SPLIT)
            terms = {k: Fraction(rng.randint(-3, 3), rng.randint(1, 3))
                     for k in rng.sample(keys, 2)}
            parts[d] = AlgebraElement(1, SPLIT, terms)
        u = (GradedSeries.one(1, order, SPLIT)
             + GradedSeries(1, order, SPLIT, parts))
        ok = ok and solve_gauge(j0, gauge(u, j0), one3) == u
    # seeded harmonic obstruction at degree 2
    _, elts = harmonic_complement(2, 2, SPLIT)
    perturbed = gauge(
        GradedSeries.one(1, 2, SPLIT), GradedSeries.one(2, 2, SPLIT)
    ) + GradedSeries.of_element(elts[0], 2)
    ok = ok and twist_equation_residual(
        perturbed, GradedSeries.one(3, 2, SPLIT),
        GradedSeries.one(3, 2, SPLIT)).is_zero()
    try:
        solve_gauge(GradedSeries.one(2, 2, SPLIT), perturbed,
                    GradedSeries.one(3, 2, SPLIT), order=2)
        ok = False
    except GaugeObstruction:
        pass
    # local monodromy round-trip at order 3
    fleet = {"V1": sl2_irrep(1), "V2": sl2_irrep(2), "V3": sl2_irrep(3)}
    corrections = [
        [(Fraction(1, 2), "h")],
        [(Fraction(1, 3), "fe"), (Fraction(-1, 4), "hh")],
        [(Fraction(2, 5), "h")],
    ]
    s1 = weight_zero_correction_series(fleet, corrections, order)
    u_true = [Fraction(0), Fraction(1, 2), Fraction(-2, 3), Fraction(1, 5)]
    s2 = conjugate_by_scalar_h(s1, fleet, u_true, order)
    ok = ok and solve_local_monodromy(s1, s2, fleet, order) == u_true
    _report("09 twist rigidity", ok)


# -- 10. associator axioms ------------------------------------------------------

def test_criterion_10_associator_axioms():
    report = check_associator_axioms(associator_2jet(3), 3)
    ok = all(r["ok"] for r in report)
    _report("10 associator axioms for the quadratic jet", ok)


# -- 11. combinatorics ----------------------------------------------------------

def test_criterion_11_combinatorics():
    ok = all(len(maximal_nested_sets(Diagram.path(n))) == want
             for n, want in ((1, 1), (2, 2), (3, 5)))
    dia = Diagram.path(3)
    verts = sorted(dia.vertices)
    for r2 in range(1, 4):
        for b2 in itertools.combinations(verts, r2):
            b2f = frozenset(b2)
            for r1 in range(1, r2):
                for b1 in itertools.combinations(sorted(b2f), r1):
                    b1f = frozenset(b1)
                    for r0 in range(r1):
                        for b0 in itertools.combinations(sorted(b1f), r0):
                            b0f = frozenset(b0)
                            up = quotient_diagram(dia.induced(b2f), b1f)
                            down = quotient_diagram(dia.induced(b1f), b0f)
                            big = quotient_diagram(dia.induced(b2f), b0f)
                            if not up.vertices or not down.vertices:
                                continue
                            seen = set()
                            allmns = set(maximal_nested_sets(big))
                            for f in maximal_nested_sets(up):
                                for g in maximal_nested_sets(down):
                                    union = mns_union(f, g, dia,
                                                      b2f, b1f, b0f)
                                    ok = ok and union in allmns
                                    restr = frozenset(
                                        m for m in union
                                        if m <= down.vertices)
                                    ok = ok and restr == frozenset(g)
                                    ok = ok and union not in seen
                                    seen.add(union)
    rng = random.Random(SEED)
    for _ in range(50):
        nv = rng.randint(2, 6)
        vs = list(range(1, nv + 1))
        edges = [e for e in itertools.combinations(vs, 2)
                 if rng.random() < 0.5]
        d = Diagram.make(vs, edges)
        sub = frozenset(rng.sample(vs, rng.randint(0, nv - 1)))
        comps = d.induced(sub).components()
        want_edges = set()
        for i, j in itertools.combinations(sorted(set(vs) - sub), 2):
            direct = d.has_edge(i, j)
            through = any(
                (any(d.has_edge(i, w) for w in c) or i in c)
                and (any(d.has_edge(j, w) for w in c) or j in c)
                for c in comps)
            if direct or through:
                want_edges.add(frozenset((i, j)))
        got = quotient_diagram(d, sub)
        ok = ok and got.edges == frozenset(want_edges)
    _report("11 nested sets, unions, quotients", ok)


# -- 12. Kac-Moody ---------------------------------------------------------------

def test_criterion_12_kac_moody():
    ok = True
    for cartan in ([[2]], [[2, -1], [-1, 2]], [[2, -2], [-2, 2]]):
        km = KacMoodyBorel(cartan, 2)
        form = km.cartan_form()
        ok = ok and linalg.rank(form) == len(form)
        borel = km.bialgebra()
        ok = ok and validate_bialgebra_windowed(borel, 2) == []
    _report("12 Kac-Moody forms and truncated Borels", ok)
