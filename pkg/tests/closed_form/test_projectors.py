"""Test closed-form eigenprojectors of coronas."""
import pytest
import torch

from qwalk_bolts.closed_form import corona_eigenprojectors, spectral_inputs
from qwalk_bolts.config import NumericConfig
from qwalk_bolts.corona import CoronaSpec, build_corona
from qwalk_bolts.spectral import eigendecompose
from qwalk_bolts.utils.exceptions import PreconditionError
from tests.helpers import battery, named


@pytest.mark.parametrize("base,satellites", battery())
def test_invariants(base, satellites):
    base_spectrum, sat_spectra, k, m = spectral_inputs(base, satellites)
    s = corona_eigenprojectors(base_spectrum, sat_spectra, k, m)
    a = build_corona(CoronaSpec(base, satellites)).graph.adjacency()
    assert max(s.invariant_deviation(a).values()) < 1e-8


@pytest.mark.parametrize("base,satellites", battery(bases=("K2", "C4", "K4", "Petersen")))
def test_matches_diagonalization(base, satellites):
    base_spectrum, sat_spectra, k, m = spectral_inputs(base, satellites)
    closed = corona_eigenprojectors(base_spectrum, sat_spectra, k, m)
    numeric = eigendecompose(build_corona(CoronaSpec(base, satellites)).graph.adjacency())
    assert closed.multiplicities == numeric.multiplicities
    assert torch.allclose(closed.eigenvalues, numeric.eigenvalues, atol=1e-8)
    assert torch.allclose(closed.projectors, numeric.projectors, atol=1e-8)


def test_needs_full_base_spectrum(golay_data):
    with pytest.raises(PreconditionError):
        corona_eigenprojectors(golay_data, [eigendecompose([[0.0]])], k=0, m=1)


def test_recognition_tolerance_from_config():
    # satellite K_2 with eigenvalues +-(1 + 1e-5): k = 1 is matched only within a loose recognition tolerance
    base_spectrum = eigendecompose(named("K2").adjacency())
    perturbed = eigendecompose(named("K2").adjacency() * (1 + 1e-5))
    with pytest.raises(PreconditionError):
        corona_eigenprojectors(base_spectrum, [perturbed], k=1, m=2, config=NumericConfig(recognition_tol=1e-6))
    loose = corona_eigenprojectors(base_spectrum, [perturbed], k=1, m=2, config=NumericConfig(recognition_tol=1e-3))
    reference = corona_eigenprojectors(base_spectrum, [base_spectrum], k=1, m=2)
    assert loose.multiplicities == reference.multiplicities
    assert torch.allclose(loose.eigenvalues, reference.eigenvalues, atol=1e-4)
