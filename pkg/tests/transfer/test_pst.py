"""Test the perfect state transfer certifier."""
import math

import pytest

from qwalk_bolts.graphs import build_named_graph
from qwalk_bolts.spectral import eigendecompose, transition_entry
from qwalk_bolts.transfer import certify_pst


def _spectrum(family, *params):
    return eigendecompose(build_named_graph(family, list(params)).adjacency())


@pytest.mark.parametrize(
    "family,params,u,v,g,delta,t0",
    [
        ("complete", [2], 0, 1, 2, 1, math.pi / 2),
        ("cycle", [4], 0, 2, 2, 1, math.pi / 2),
        ("hypercube", [3], 0, 7, 2, 1, math.pi / 2),
        ("path", [3], 0, 2, 1, 2, math.pi / math.sqrt(2)),
    ],
)
def test_pst_holds(family, params, u, v, g, delta, t0):
    s = _spectrum(family, *params)
    certificate = certify_pst(s, u, v)
    assert certificate.holds
    assert (certificate.g, certificate.delta) == (g, delta)
    assert certificate.t0 == pytest.approx(t0)
    assert certificate.fidelity == pytest.approx(1.0, abs=1e-8)
    assert abs(transition_entry(s, certificate.t0, u, v)) == pytest.approx(1.0, abs=1e-8)
    assert certificate.failed_condition is None


def test_integer_certificate_fields():
    certificate = certify_pst(_spectrum("cycle", 4), 0, 2)
    assert certificate.a is None and certificate.b == {}
    assert sorted(certificate.signs.values()) == [-1, 1, 1]
    assert certificate.to_dict()["criterion"] == "pst-characterization"


def test_quadratic_certificate_fields():
    certificate = certify_pst(_spectrum("path", 3), 0, 2)
    assert certificate.a == 0
    assert sorted(certificate.b.values()) == [-2, 0, 2]


@pytest.mark.parametrize(
    "family,params,u,v,condition",
    [
        ("cycle", [4], 0, 1, "strong cospectrality"),
        ("path", [4], 0, 3, "unclassifiable spectrum"),
        ("cycle", [6], 0, 3, "sign parity"),
        ("petersen", [], 0, 1, "strong cospectrality"),
    ],
)
def test_pst_fails(family, params, u, v, condition):
    certificate = certify_pst(_spectrum(family, *params), u, v)
    assert not certificate.holds
    assert certificate.failed_condition == condition
    assert certificate.t0 is None


def test_parity_evidence():
    certificate = certify_pst(_spectrum("cycle", 6), 0, 3)
    assert certificate.g == 1
    failure = certificate.evidence["parity_failure"]
    assert failure["eigenvalue"] == pytest.approx(-1.0)
    assert failure["gap_over_g"] == 3


def test_distinct_vertices():
    with pytest.raises(ValueError):
        certify_pst(_spectrum("cycle", 4), 1, 1)
