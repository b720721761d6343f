"""Associators, relative twists, gauges, and the rigidity solvers.

Everything is truncated-series arithmetic over the diagram algebras.  The
gauge solver reconstructs, degree by degree, the unique gauge between two
solutions of the relative twist equation; the obstruction at each degree is
a cocycle whose harmonic part must vanish, and a nonzero harmonic part is
reported instead of being absorbed.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .algebra import (AlgebraElement, alpha_map, beta_map, face_map, omega,
                      slot_permute)
from .cohomology import NotClosed, decompose_cocycle
from .monoids import DecorationMonoid, TRIVIAL
from .series import GradedSeries, series_face, series_slot_permute


# ---------------------------------------------------------------------------
# embeddings of 2- and 3-slot series into larger algebras


def two_slot_embeddings(j: GradedSeries) -> dict[str, GradedSeries]:
    """The four standard images of a 2-slot series in 3 slots."""
    return {
        "23": series_face(0, j),
        "1,23": series_face(2, j),
        "12,3": series_face(1, j),
        "12": series_face(3, j),
    }


def assoc_images(phi: GradedSeries) -> dict[str, GradedSeries]:
    """Images of a 3-slot series in 4 slots used by the pentagon."""
    return {
        "1,2,34": series_face(3, phi),
        "12,3,4": series_face(1, phi),
        "2,3,4": series_face(0, phi),
        "1,23,4": series_face(2, phi),
        "1,2,3": series_face(4, phi),
    }


def associator_2jet(order: int) -> GradedSeries:
    """1 + (commutator of the two adjacent symmetrized crossings)/24."""
    om12 = omega(3, 1, 2)
    om23 = omega(3, 2, 3)
    jet = Fraction(1, 24) * om12.commutator(om23)
    one = GradedSeries.one(3, order)
    return one + GradedSeries.of_element(jet, order)


def _residual_report(name: str, series: GradedSeries) -> dict:
    by_degree = {}
    first = None
    for d in sorted(series.parts):
        x = series.parts[d]
        by_degree[d] = len(x.terms)
        if first is None:
            key, coeff = x.sorted_terms()[0]
            first = {"degree": d, "coeff": str(coeff), "key": repr(key)}
    return {"check": name, "ok": series.is_zero(),
            "residual_terms": by_degree, "first_offender": first}


def check_associator_axioms(phi: GradedSeries, order: int | None = None
                            ) -> list[dict]:
    """Pentagon, both hexagons, duality, leading-terms shape, and the 2-jet
    condition, each reported with residual sizes per degree."""
    if phi.n != 3:
        raise ValueError("associator must live in 3 slots")
    order = phi.order if order is None else order
    if order > 3:
        raise ValueError("size guard: order <= 3")
    phi = phi.truncate(order)
    report = []
    shape_ok = (phi.component(0) == AlgebraElement.unit(3, phi.monoid)
                and phi.component(1).is_zero())
    report.append({"check": "shape", "ok": shape_ok,
                   "residual_terms": {}, "first_offender": None})

    im = assoc_images(phi)
    pentagon = (im["1,2,34"] * im["12,3,4"]
                - im["2,3,4"] * im["1,23,4"] * im["1,2,3"])
    report.append(_residual_report("pentagon", pentagon))

    phi_inv = phi.inverse()

    def hexagons() -> list[dict]:
        out = []
        om = GradedSeries.of_element(omega(3, 1, 2), order)
        om13 = GradedSeries.of_element(omega(3, 1, 3), order)
        om23 = GradedSeries.of_element(omega(3, 2, 3), order)
        e_12_3 = series_face(1, GradedSeries.of_element(
            Fraction(1, 2) * omega(2, 1, 2), order)).exp()
        e_1_23 = series_face(2, GradedSeries.of_element(
            Fraction(1, 2) * omega(2, 1, 2), order)).exp()
        e13 = (Fraction(1, 2) * om13).exp()
        e23 = (Fraction(1, 2) * om23).exp()
        e12 = (Fraction(1, 2) * om).exp()
        p = series_slot_permute
        hex1 = e_12_3 - (p(phi, (2, 3, 1)) * e13
                         * p(phi_inv, (1, 3, 2)) * e23 * phi)
        out.append(_residual_report("hexagon1", hex1))
        hex2 = e_1_23 - (p(phi_inv, (3, 1, 2)) * e13
                         * p(phi, (2, 1, 3)) * e12 * phi_inv)
        out.append(_residual_report("hexagon2", hex2))
        return out

    report.extend(hexagons())
    duality = series_slot_permute(phi, (3, 2, 1)) - phi_inv
    report.append(_residual_report("duality", duality))
    jet = phi - associator_2jet(order)
    jet_low = GradedSeries(3, min(order, 2), phi.monoid,
                           {d: x for d, x in jet.parts.items() if d <= 2})
    report.append(_residual_report("2jet", jet_low))
    return report


# ---------------------------------------------------------------------------
# twists and gauges


def twist_conjugate(phi: GradedSeries, j: GradedSeries) -> GradedSeries:
    """The twisted associator J^23 J^{1,23} Phi (J^{12,3})^-1 (J^12)^-1."""
    if j.component(0) != AlgebraElement.unit(j.n, j.monoid):
        raise ValueError("twist must start at the unit")
    im = two_slot_embeddings(j)
    return (im["23"] * im["1,23"] * phi
            * im["12,3"].inverse() * im["12"].inverse())


def twist_equation_residual(j: GradedSeries, phi_big: GradedSeries,
                            phi_small: GradedSeries) -> GradedSeries:
    """Residual of the relative twist equation in product form:
    J^23 J^{1,23} Phi_big - Phi_small J^12 J^{12,3}."""
    im = two_slot_embeddings(j)
    return (im["23"] * im["1,23"] * phi_big
            - phi_small * im["12"] * im["12,3"])


def gauge(u: GradedSeries, j: GradedSeries) -> GradedSeries:
    """(u (x) u) J (coproduct of u)^-1; a left group action on twists."""
    if u.n != 1 or j.n != 2:
        raise ValueError("gauge needs a 1-slot series acting on a 2-slot one")
    if u.component(0) != AlgebraElement.unit(1, u.monoid):
        raise ValueError("non-unit leading term")
    u1 = series_face(2, u)   # u (x) 1
    u2 = series_face(0, u)   # 1 (x) u
    du = series_face(1, u)   # coproduct
    return u1 * u2 * j * du.inverse()


class GaugeObstruction(ValueError):
    """The inputs are not gauge equivalent: nonzero harmonic obstruction."""


def solve_gauge(j1: GradedSeries, j2: GradedSeries, phi: GradedSeries,
                order: int | None = None,
                phi_small: GradedSeries | None = None) -> GradedSeries:
    """The unique gauge u with gauge(u, j1) = j2, built degree by degree.

    Both inputs must satisfy the relative twist equation for ``phi`` (with
    ``phi_small`` defaulting to ``phi``) to the working order; the
    discrepancy at each degree is closed, and its harmonic part must vanish
    or :class:`GaugeObstruction` is raised.
    """
    order = min(j1.order, j2.order) if order is None else order
    j1, j2 = j1.truncate(order), j2.truncate(order)
    phi_small = phi if phi_small is None else phi_small
    for j in (j1, j2):
        if not twist_equation_residual(j, phi, phi_small).truncate(
                order).is_zero():
            raise ValueError("inputs violate twist equation")
    u = GradedSeries.one(1, order, j1.monoid)
    for k in range(1, order + 1):
        current = gauge(u, j1)
        eta = (j2 - current).component(k)
        for low in range(k):
            if not (j2 - current).component(low).is_zero():
                raise AssertionError("lower-degree discrepancy left behind")
        if eta.is_zero():
            continue
        try:
            v, mu = decompose_cocycle(eta)
        except NotClosed as exc:
            raise ValueError("inputs violate twist equation") from exc
        if not mu.is_zero():
            raise GaugeObstruction(
                "obstruction: inputs not gauge-equivalent solutions")
        u = (GradedSeries.one(1, order, j1.monoid)
             + GradedSeries.of_element(v, order)) * u
    if gauge(u, j1) != j2:
        raise AssertionError("gauge reconstruction failed to close")
    return u
