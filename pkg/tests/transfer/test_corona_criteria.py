"""Test periodicity and PST criteria for base copies of coronas."""
import math

import pytest

from qwalk_bolts.config import NumericConfig
from qwalk_bolts.corona import CoronaSpec, build_corona
from qwalk_bolts.graphs import build_named_graph
from qwalk_bolts.spectral import eigendecompose, eigenvalue_support
from qwalk_bolts.transfer import (
    Verdict,
    certify_pst,
    corona_base_periodicity,
    gap_non_periodicity,
    is_periodic_vertex,
    necessary_bound_check,
    no_pst_complete_satellites,
    radical_gap_membership,
)
from qwalk_bolts.utils.exceptions import PreconditionError
from tests.helpers import SATELLITES, named


def _base_support(base, v=0):
    s = eigendecompose(base.adjacency())
    return [float(s.eigenvalues[j]) for j in eigenvalue_support(s, v)]


def test_pendant_corona_not_periodic():
    report = corona_base_periodicity([1.0, -1.0], r=1, k=0, m=1, n=2)
    assert report.verdict is Verdict.NOT_PERIODIC
    assert report.criterion == "corona-integrality"
    assert report.evidence["radicand"] == 5
    assert report.evidence["perron_radicand"] == 5


def test_integral_corona_periodic():
    report = corona_base_periodicity([1.0, -1.0], r=1, k=0, m=2, n=2)
    assert report.verdict is Verdict.PERIODIC
    assert "failed" not in report.evidence


def test_radical_multiples():
    support = [3.0, 3 + 3 * math.sqrt(2)]
    report = corona_base_periodicity(support, r=3, k=3, m=8, n=5, vertex=0)
    assert report.verdict is Verdict.PERIODIC
    assert report.criterion == "corona-radical-multiples"
    assert report.evidence["delta"] == 2
    assert report.evidence["squares"] == [512, 18, 50]
    assert "divisor_mismatch" not in report.evidence


def test_radical_multiples_fail():
    report = corona_base_periodicity([1.0, -1.0], r=1, k=1, m=2, n=2)
    assert report.verdict is Verdict.NOT_PERIODIC
    assert report.evidence["delta"] is None


def test_unrecognized_support():
    report = corona_base_periodicity([2.0, math.pi], r=2, k=0, m=1, n=3)
    assert report.verdict is Verdict.INCONCLUSIVE
    assert report.evidence["unrecognized"] == [math.pi]


@pytest.mark.parametrize("base_name", ["K2", "C4", "C6", "K4", "Q3", "Petersen"])
@pytest.mark.parametrize("satellite_name", sorted(SATELLITES))
def test_agrees_with_built_corona(base_name, satellite_name):
    base = named(base_name)
    h = named(satellite_name, SATELLITES)
    k, m = h.degrees()[0], h.n
    r, n = base.degrees()[0], base.n
    report = corona_base_periodicity(_base_support(base), r, k, m, n)
    corona = build_corona(CoronaSpec(base, (h,) * n))
    numeric = is_periodic_vertex(eigendecompose(corona.graph.adjacency()), 0)
    assert report.verdict is numeric.verdict
    if report.periodic:
        assert necessary_bound_check(_base_support(base), r, k, m, n)


def test_irrational_base_eigenvalues():
    # C_5 has eigenvalues (-1 +- sqrt(5)) / 2, so lambda - k is never an integer
    report = corona_base_periodicity(_base_support(named("C5")), r=2, k=0, m=1, n=5)
    assert report.verdict is Verdict.NOT_PERIODIC
    assert report.evidence["failed"] == "lambda - k is an integer"


def test_bound_check():
    assert necessary_bound_check([1.0, -1.0], r=1, k=0, m=2, n=2)
    check = necessary_bound_check([3.0], r=3, k=0, m=1, n=2)
    assert not check
    assert check.violated == "m(n - 1)**2 >= |r - k| + 1"
    assert (check.lhs, check.rhs) == (1.0, 4.0)
    assert check.to_dict()["criterion"] == "corona-degree-bound"


@pytest.mark.parametrize("base_name,m", [("C4", 2), ("K4", 1), ("Petersen", 3), ("Q3", 4)])
def test_no_pst_with_complete_satellites(base_name, m):
    verdict = no_pst_complete_satellites(named(base_name), m)
    assert verdict.holds
    assert all(entry["negative_eigenvalue"] < 0 for entry in verdict.vertices)
    assert verdict.to_dict()["no_pst"] is True


def test_no_pst_triangle_with_pendants():
    triangle = build_named_graph("complete", [3])
    verdict = no_pst_complete_satellites(triangle, 1)
    assert verdict.holds
    assert [entry["negative_eigenvalue"] for entry in verdict.vertices] == pytest.approx([-1.0] * 3)
    assert all(entry["bound"]["passed"] is False for entry in verdict.vertices)

    corona = build_corona(CoronaSpec(triangle, (build_named_graph("complete", [1]),) * 3))
    spectrum = eigendecompose(corona.graph.adjacency())
    for u in range(corona.n):
        for v in range(u + 1, corona.n):
            assert not certify_pst(spectrum, u, v).holds


def test_no_pst_from_spectrum():
    spectrum = eigendecompose(named("C6").adjacency())
    assert no_pst_complete_satellites(spectrum, 2)


def test_no_pst_preconditions():
    with pytest.raises(ValueError):
        no_pst_complete_satellites(named("C4"), 0)
    with pytest.raises(PreconditionError):
        no_pst_complete_satellites(build_named_graph("path", [4]), 2)


@pytest.mark.parametrize(
    "x,expected",
    [(math.sqrt(3), (1, 3)), (2.0, (2, 1)), (2 * math.sqrt(2), (2, 2)), (1.0, (1, 1)), (2.5, None), (-1.0, None)],
)
def test_radical_membership(x, expected):
    assert radical_gap_membership(x) == expected


@pytest.mark.parametrize("dimension", [2, 3])
@pytest.mark.parametrize("k", [0, 1, 2])
def test_hypercube_gaps(dimension, k):
    cube = build_named_graph("hypercube", [dimension])
    result = gap_non_periodicity(_base_support(cube), r=dimension, k=k, n=2 ** dimension)
    assert result.fired
    assert result.criterion == "eigenvalue-gap"
    assert result.witness["gap"] == pytest.approx(2.0)
    assert result.witness["radical"] == (2, 1)


def test_perron_gap():
    result = gap_non_periodicity([2.0, -1.0], r=2, k=0, n=2)
    assert result.criterion == "perron-gap"
    assert result.witness["kappa"] == -1.0


def test_no_gap():
    assert not gap_non_periodicity([3.0, -3.0], r=3, k=0, n=2)
    assert gap_non_periodicity([3.0], r=3, k=0, n=4).note == "support holds only the degree"


def test_bound_check_recognition_tolerance():
    # 3 - 1e-4 counts as the degree r = 3 only under a loose recognition tolerance
    support = [3 - 1e-4, 0.0]
    check = necessary_bound_check(support, r=3, k=0, m=1, n=4)
    assert not check
    assert check.eigenvalue == pytest.approx(3 - 1e-4)
    assert necessary_bound_check(support, r=3, k=0, m=1, n=4, config=NumericConfig(recognition_tol=1e-3))


def test_gap_recognition_tolerance():
    support = [3 - 1e-4, 1.0]
    assert gap_non_periodicity(support, r=3, k=0, n=8).fired
    assert not gap_non_periodicity(support, r=3, k=0, n=8, config=NumericConfig(recognition_tol=1e-3))


def test_radical_membership_tolerance():
    x = math.sqrt(3) + 1e-5
    assert radical_gap_membership(x) is None
    assert radical_gap_membership(x, tol=1e-4) == (1, 3)
