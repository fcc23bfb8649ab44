"""Test continuous-time quantum walk amplitudes."""
import math

import pytest
import torch

from qwalk_bolts.corona import CoronaSpec, build_corona
from qwalk_bolts.graphs import build_named_graph
from qwalk_bolts.spectral import (
    eigendecompose,
    eigenvalue_support,
    fidelity_scan,
    scan_amplitudes,
    strongly_cospectral,
    transition_entries,
    transition_entry,
    transition_matrix,
)
from qwalk_bolts.utils.exceptions import ShapeError
from tests import reset_seed
from tests.helpers import battery, random_adjacency, random_order


def _spectrum(family, *params):
    return eigendecompose(build_named_graph(family, list(params)).adjacency())


@pytest.mark.parametrize("base,satellites", battery(bases=("K2", "C5", "K4"), satellites=("K1", "2K1", "C3")))
def test_matches_matrix_exponential(base, satellites):
    reset_seed()
    a = build_corona(CoronaSpec(base, satellites)).graph.adjacency()
    s = eigendecompose(a)
    eye = torch.eye(a.shape[0], dtype=torch.complex128)
    assert torch.allclose(transition_matrix(s, 0.0), eye, atol=1e-12)
    for t in (torch.rand(3, dtype=torch.float64) * 20).tolist():
        h = transition_matrix(s, t)
        oracle = torch.matrix_exp(-1j * t * a.to(torch.complex128))
        assert torch.allclose(h, oracle, atol=1e-9)
        assert torch.allclose(h @ h.conj().T, eye, atol=1e-10)


def test_entries_agree_with_matrix():
    s = _spectrum("petersen")
    times = torch.linspace(0, 5, 11, dtype=torch.float64)
    entries = transition_entries(s, times, 0, 7)
    for t, z in zip(times.tolist(), entries.tolist()):
        assert abs(z - complex(transition_matrix(s, t)[0, 7])) < 1e-12
    assert abs(transition_entry(s, 1.3, 0, 7) - complex(transition_matrix(s, 1.3)[0, 7])) < 1e-12


def test_complete_pair_transfers_at_half_pi():
    curve = fidelity_scan(_spectrum("complete", 2), 0, 1, 0.0, math.pi, 1001)
    assert len(curve) == 1001
    assert abs(curve.max_fidelity - 1) < 1e-10
    assert abs(curve.argmax_time - math.pi / 2) < 1e-9
    assert float(curve.fidelities.max()) <= 1 + 1e-10


def test_path_inner_pair_gets_close():
    curve = fidelity_scan(_spectrum("path", 4), 1, 2, 0.0, 200.0, 200_000)
    assert curve.max_fidelity > 0.9
    assert float(curve.fidelities[0]) == 0.0


def test_scan_chunks_are_independent():
    s = _spectrum("cycle", 6)
    whole = fidelity_scan(s, 0, 3, 0.0, 10.0, 257)
    chunked = scan_amplitudes(lambda times: transition_entries(s, times, 0, 3), 0.0, 10.0, 257, chunk_size=10)
    assert torch.allclose(whole.amplitudes, chunked.amplitudes)


@pytest.mark.parametrize("t_min,t_max,steps", [(1.0, 1.0, 10), (2.0, 1.0, 10), (0.0, 1.0, 1)])
def test_scan_bounds(t_min, t_max, steps):
    with pytest.raises(ValueError):
        fidelity_scan(_spectrum("cycle", 4), 0, 1, t_min, t_max, steps)


def test_vertex_range():
    with pytest.raises(ShapeError):
        transition_entry(_spectrum("cycle", 4), 1.0, 0, 4)


def test_curve_csv(tmp_path):
    curve = fidelity_scan(_spectrum("complete", 2), 0, 1, 0.0, 1.0, 3)
    path = tmp_path / "curve.csv"
    text = curve.to_csv(str(path))
    lines = text.splitlines()
    assert lines[0] == "t,re,im,fidelity"
    assert len(lines) == 4
    assert path.read_text() == text
    assert curve.summary()["steps"] == 3


def test_support_and_cospectrality():
    s = _spectrum("cycle", 4)
    assert eigenvalue_support(s, 0) == [0, 1, 2]
    antipodal = strongly_cospectral(s, 0, 2)
    assert antipodal
    assert antipodal.signs == {0: 1, 1: -1, 2: 1}
    adjacent = strongly_cospectral(s, 0, 1)
    assert not adjacent
    assert adjacent.failing_index == 1
    with pytest.raises(ValueError):
        strongly_cospectral(s, 1, 1)


def test_support_of_star_center():
    s = _spectrum("star", 4)
    # the centre misses the eigenvalue 0
    values = [float(s.eigenvalues[j]) for j in eigenvalue_support(s, 0)]
    assert len(values) == 2
    assert abs(values[0] - math.sqrt(3)) < 1e-9 and abs(values[1] + math.sqrt(3)) < 1e-9


def test_random_graphs_unitary_and_symmetric():
    reset_seed()
    for _ in range(1000):
        a = random_adjacency(random_order(2, 8))
        s = eigendecompose(a)
        eye = torch.eye(a.shape[0], dtype=torch.complex128)
        assert torch.allclose(transition_matrix(s, 0.0), eye, atol=1e-12)
        t = float(torch.rand(1)) * 50
        h = transition_matrix(s, t)
        assert torch.allclose(h @ h.conj().T, eye, atol=1e-10)
        assert torch.allclose(h, h.T, atol=1e-12)
