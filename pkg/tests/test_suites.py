import pytest

from natdiff.polyring import PolyRing
from natdiff.quotient import CoordinateRing
from natdiff.suites import SUITES, SuiteResult, run_suites

from conftest import ring


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suite_on_catalog(catalog_variety, suite):
    _, A = catalog_variety
    (res,) = run_suites(A, [suite])
    assert res.passed, res.failures
    assert res.checks > 0


def test_suite_on_affine_plane():
    P = PolyRing(["x", "y"])
    A = CoordinateRing(["x", "y"], [P.zero])
    assert all(res.passed for res in run_suites(A))


def test_suite_on_a_curve_outside_the_catalog():
    P = PolyRing(["x", "y", "z"])
    x, y, z = P.gens
    # a cone over a smooth conic: singular at the vertex only
    A = CoordinateRing(["x", "y", "z"], [x**2 + y**2 - z**2])
    results = run_suites(A)
    assert all(res.passed for res in results), [r.failures for r in results]


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suites(ring("cusp"), ["nope"])


def test_result_reporting():
    res = SuiteResult("x")
    res.check(True, "fine")
    res.check(False, "broken")
    assert not res.passed and res.failures == ["broken"]
    assert str(res) == "x: 2 checks FAILED (1)"


def test_a_failing_check_is_reported(monkeypatch):
    import natdiff.suites as suites

    monkeypatch.setattr(suites, "verify_minor_identity", lambda *args: False)
    (res,) = run_suites(ring("cusp"), ["minor_identities"])
    assert not res.passed
