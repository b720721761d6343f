import random
from fractions import Fraction

import pytest

from dyalg.algebra import AlgebraElement, enumerate_basis, hochschild_d, \
    omega
from dyalg.cohomology import harmonic_complement
from dyalg.monoids import SPLIT, TRIVIAL
from dyalg.series import GradedSeries, series_face
from dyalg.twists import (GaugeObstruction, associator_2jet,
                          check_associator_axioms, gauge, solve_gauge,
                          twist_conjugate, twist_equation_residual)


def _random_unit_series(rng, order, monoid=SPLIT, nmax=2):
    parts = {}
    for d in range(1, order + 1):
        keys = enumerate_basis(1, d, monoid)
        terms = {k: Fraction(rng.randint(-3, 3), rng.randint(1, 3))
                 for k in rng.sample(keys, min(nmax, len(keys)))}
        parts[d] = AlgebraElement(1, monoid, terms)
    return (GradedSeries.one(1, order, monoid)
            + GradedSeries(1, order, monoid, parts))


def test_series_arithmetic():
    om = GradedSeries.of_element(omega(2, 1, 2), 3)
    one = GradedSeries.one(2, 3)
    s = one + om
    assert s * s.inverse() == one
    assert (s * s) * s == s * (s * s)
    e = (Fraction(1, 2) * om).exp()
    assert e.component(0) == AlgebraElement.unit(2)
    assert e.component(1) == Fraction(1, 2) * omega(2, 1, 2)


def test_associator_2jet_passes_all_axioms():
    report = check_associator_axioms(associator_2jet(3), 3)
    assert all(r["ok"] for r in report), report


def test_unit_associator_fails_hexagons_and_jet():
    one = GradedSeries.one(3, 2)
    report = {r["check"]: r for r in check_associator_axioms(one, 2)}
    assert report["pentagon"]["ok"]
    assert report["duality"]["ok"]
    assert not report["hexagon1"]["ok"]
    assert not report["hexagon2"]["ok"]
    assert not report["2jet"]["ok"]


def test_degree_one_term_flagged():
    bad = GradedSeries.one(3, 2) + GradedSeries.of_element(
        omega(3, 1, 2), 2)
    report = {r["check"]: r for r in check_associator_axioms(bad, 2)}
    assert not report["shape"]["ok"]


def test_twist_conjugate_by_unit():
    phi = associator_2jet(3)
    one2 = GradedSeries.one(2, 3)
    assert twist_conjugate(phi, one2) == phi


def test_twist_linearization_is_the_differential():
    rng = random.Random(21)
    order = 2
    one3 = GradedSeries.one(3, order)
    keys = enumerate_basis(2, 1)
    j1 = AlgebraElement(2, TRIVIAL, {keys[0]: Fraction(2),
                                     keys[2]: Fraction(-1)})
    j = GradedSeries.one(2, order) + GradedSeries.of_element(j1, order)
    resid = twist_conjugate(one3, j) - one3
    assert resid.component(1) == hochschild_d(j1)


def test_gauge_group_action():
    rng = random.Random(8)
    order = 2
    j = GradedSeries.one(2, order, SPLIT)
    u = _random_unit_series(rng, order)
    v = _random_unit_series(rng, order)
    assert gauge(u, gauge(v, j)) == gauge(u * v, j)
    assert gauge(GradedSeries.one(1, order, SPLIT), j) == j


def test_gauge_preserves_twist_equation():
    rng = random.Random(12)
    order = 2
    one3 = GradedSeries.one(3, order, SPLIT)
    j = GradedSeries.one(2, order, SPLIT)
    assert twist_equation_residual(j, one3, one3).is_zero()
    u = _random_unit_series(rng, order)
    assert twist_equation_residual(gauge(u, j), one3, one3).is_zero()


def test_solve_gauge_round_trips():
    rng = random.Random(31)
    order = 3
    one3 = GradedSeries.one(3, order, SPLIT)
    j0 = GradedSeries.one(2, order, SPLIT)
    for _ in range(4):
        u = _random_unit_series(rng, order)
        assert solve_gauge(j0, gauge(u, j0), one3) == u


def test_solve_gauge_identity():
    order = 2
    one3 = GradedSeries.one(3, order, SPLIT)
    j0 = GradedSeries.one(2, order, SPLIT)
    assert solve_gauge(j0, j0, one3) == GradedSeries.one(1, order, SPLIT)


def test_solve_gauge_obstruction():
    rng = random.Random(7)
    order = 2
    one3 = GradedSeries.one(3, order, SPLIT)
    j0 = GradedSeries.one(2, order, SPLIT)
    _, elts = harmonic_complement(2, 2, SPLIT)
    mu = elts[0]
    u = _random_unit_series(rng, order)
    perturbed = gauge(u, j0) + GradedSeries.of_element(mu, order)
    assert twist_equation_residual(perturbed, one3, one3).is_zero()
    with pytest.raises(GaugeObstruction):
        solve_gauge(j0, perturbed, one3, order=order)


def test_solve_gauge_rejects_equation_violation():
    order = 2
    one3 = GradedSeries.one(3, order)
    j0 = GradedSeries.one(2, order)
    keys = enumerate_basis(2, 1)
    bad = j0 + GradedSeries.of_element(
        AlgebraElement(2, TRIVIAL, {keys[0]: Fraction(1)}), order)
    with pytest.raises(ValueError, match="violate twist equation"):
        solve_gauge(j0, bad, one3)


def test_double_conjugation_composes():
    # conjugating twice equals conjugating once by the composite twist
    rng = random.Random(3)
    order = 2
    phi = GradedSeries.one(3, order, SPLIT)
    u = _random_unit_series(rng, order)
    v = _random_unit_series(rng, order)
    j1 = gauge(u, GradedSeries.one(2, order, SPLIT))
    j2 = gauge(v, GradedSeries.one(2, order, SPLIT))
    once = twist_conjugate(twist_conjugate(phi, j1), j2)
    # the composite in the gauge group: both are gauges of the unit, and
    # conjugation by a gauged unit is conjugation by the product gauge
    composite = gauge(v * u, GradedSeries.one(2, order, SPLIT))
    assert twist_conjugate(phi, composite) == once
