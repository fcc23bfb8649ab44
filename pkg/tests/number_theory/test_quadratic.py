"""Test quadratic-integer classification of eigenvalue sets."""
import math

import pytest
import torch

from qwalk_bolts.number_theory import QuadraticInteger, QuadraticKind, classify_quadratic, individual_quadratic
from tests import reset_seed

SQRT5 = math.sqrt(5)
RADICANDS = (2, 3, 5, 6, 7, 10, 11, 13)


def test_all_integer():
    found = classify_quadratic([2.0, 0.0, -2.0000000001])
    assert found.kind is QuadraticKind.ALL_INTEGER
    assert found.b == (2, 0, -2)
    assert found.every_value_recognized


@pytest.mark.parametrize(
    "values,a,delta,b",
    [
        ([(1 + SQRT5) / 2, (1 - SQRT5) / 2], 1, 5, (1, -1)),
        ([math.sqrt(2), -math.sqrt(2), 0.0], 0, 2, (2, -2, 0)),
        ([1 + 3 * math.sqrt(2), 1 - 3 * math.sqrt(2)], 2, 2, (6, -6)),
        ([3.0, 3 + 3 * math.sqrt(2)], 6, 2, (0, 6)),
    ],
)
def test_common_form(values, a, delta, b):
    found = classify_quadratic(values)
    assert found.kind is QuadraticKind.QUADRATIC
    assert (found.a, found.delta, found.b) == (a, delta, b)
    for value, coefficient in zip(values, found.b):
        assert abs(value - (found.a + coefficient * math.sqrt(found.delta)) / 2) < 1e-9


def test_path_spectrum_has_no_common_form():
    golden = (1 + SQRT5) / 2
    found = classify_quadratic([golden, golden - 1, 1 - golden, -golden])
    assert found.kind is QuadraticKind.UNCLASSIFIABLE
    assert found.every_value_recognized
    assert {q.delta for q in found.individual} == {5}
    assert {q.a for q in found.individual} == {1, -1}


def test_mixed_radicands():
    found = classify_quadratic([math.sqrt(2), math.sqrt(3)])
    assert found.kind is QuadraticKind.UNCLASSIFIABLE
    assert found.every_value_recognized


def test_transcendental_value():
    found = classify_quadratic([1.0, math.pi])
    assert found.kind is QuadraticKind.UNCLASSIFIABLE
    assert not found.every_value_recognized
    assert found.to_dict()["individual"][1] is None


def test_individual():
    assert individual_quadratic((1 + SQRT5) / 2) == QuadraticInteger(1, 5, 1)
    assert individual_quadratic(math.sqrt(2)) == QuadraticInteger(0, 2, 2)
    assert individual_quadratic(-4.0) == QuadraticInteger(-8, 1, 0)
    assert individual_quadratic(2 ** (1 / 3)) is None


def test_empty_input():
    with pytest.raises(ValueError):
        classify_quadratic([])


def _random_form():
    a = int(torch.randint(-6, 7, (1,)))
    delta = RADICANDS[int(torch.randint(len(RADICANDS), (1,)))]
    b = int(torch.randint(1, 6, (1,))) * (1 if float(torch.rand(1)) < 0.5 else -1)
    return a, delta, b


def test_random_conjugate_pairs():
    reset_seed()
    for _ in range(200):
        a, delta, b = _random_form()
        root = b * math.sqrt(delta)
        found = classify_quadratic([(a + root) / 2, (a - root) / 2])
        assert found.kind is QuadraticKind.QUADRATIC
        assert (found.a, found.delta, found.b) == (a, delta, (b, -b))


def test_scale_consistency():
    reset_seed()
    for _ in range(100):
        a, delta, b = _random_form()
        scale = int(torch.randint(2, 5, (1,)))
        root = b * math.sqrt(delta)
        found = classify_quadratic([scale * (a + root) / 2, scale * (a - root) / 2])
        assert found.kind is QuadraticKind.QUADRATIC
        assert (found.a, found.delta, found.b) == (scale * a, delta, (scale * b, -scale * b))
