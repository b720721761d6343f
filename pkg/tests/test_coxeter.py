import pytest

from dyalg.coxeter import (build_central_family, build_test_family,
                           build_unit_family, check_coxeter_family)
from dyalg.diagrams import Diagram
from dyalg.monoids import RootCone
from dyalg.series import GradedSeries

A2 = Diagram.path(2)
A3 = Diagram.path(3)


def test_unit_family_passes_everything_on_a3():
    fam = build_unit_family(A3, 2)
    report = check_coxeter_family(fam, A3, 2)
    assert report and all(r["ok"] for r in report)
    checks = {r["check"] for r in report}
    assert checks == {"twist-equation", "gauge-relation", "orientation",
                      "transitivity", "vertical", "factorisation"}


def test_central_family_passes_everything():
    for dia in (A2, A3):
        fam = build_central_family(dia, 2)
        report = check_coxeter_family(fam, dia, 2)
        assert all(r["ok"] for r in report), [r for r in report
                                              if not r["ok"]][:3]


def test_central_family_exercises_all_five_nested_sets():
    fam = build_central_family(A3, 2)
    full = frozenset(A3.vertices)
    top = {f for (b, b0, f) in fam["twists"] if b == full and not b0}
    assert len(top) == 5
    fac_rows = [r for r in check_coxeter_family(fam, A3, 2)
                if r["check"] == "factorisation"]
    assert fac_rows and all(r["ok"] for r in fac_rows)


def test_decorated_family_per_pair_axioms():
    fam = build_test_family(A2, RootCone(2, 8), window=2, order=2)
    report = check_coxeter_family(fam, A2, 2)
    for r in report:
        if r["check"] in ("twist-equation", "gauge-relation", "orientation",
                          "transitivity"):
            assert r["ok"], r


def test_seeded_orientation_violation_reported():
    from dyalg.algebra import kappa
    fam = build_central_family(A2, 2)
    (b, b0, f, g) = next(k for k in fam["dcp"] if k[2] != k[3])
    bump = GradedSeries.of_element(kappa(1, 1), 2)
    fam["dcp"][(b, b0, f, g)] = fam["dcp"][(b, b0, f, g)] + bump
    report = check_coxeter_family(fam, A2, 2)
    assert any(r["check"] == "orientation" and not r["ok"] for r in report)


def test_missing_entries_raise():
    fam = build_central_family(A2, 2)
    full = frozenset(A2.vertices)
    key = next(k for k in fam["twists"] if k[0] == full and not k[1])
    del fam["twists"][key]
    with pytest.raises(KeyError):
        check_coxeter_family(fam, A2, 2)
