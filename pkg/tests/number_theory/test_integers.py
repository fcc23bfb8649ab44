"""Test exact integer arithmetic."""
import pytest
import torch
from sympy import factorint, primerange

from qwalk_bolts.number_theory import is_perfect_square, recognize_integer, square_free_part
from qwalk_bolts.utils.exceptions import FactorizationLimitError
from tests import reset_seed


@pytest.mark.parametrize(
    "n,c,s",
    [
        (1, 1, 1),
        (8, 2, 2),
        (40, 10, 2),
        (45, 5, 3),
        (72, 2, 6),
        (2 ** 62, 1, 2 ** 31),
        (2 ** 61 - 1, 2 ** 61 - 1, 1),
        (1000003 * 1000033, 1000003 * 1000033, 1),
        (1000003 ** 3, 1000003, 1000003),
    ],
)
def test_square_free_part(n, c, s):
    decomposition = square_free_part(n)
    assert (decomposition.c, decomposition.s) == (c, s)
    assert decomposition.s ** 2 * decomposition.c == n


@pytest.mark.parametrize("n", [0, -4, 2 ** 63])
def test_square_free_part_range(n):
    with pytest.raises(ValueError):
        square_free_part(n)


def test_random_square_free_parts():
    reset_seed()
    for n in torch.randint(1, 10 ** 12, (1000,), dtype=torch.int64).tolist():
        decomposition = square_free_part(n)
        assert decomposition.s ** 2 * decomposition.c == n
        assert all(exponent == 1 for exponent in factorint(decomposition.c).values())


def test_recovers_constructed_parts():
    reset_seed()
    primes = list(primerange(2, 1000))
    for _ in range(200):
        picks = [primes[i] for i in torch.randperm(len(primes))[:4].tolist()]
        c, s = picks[0] * picks[1], picks[2] * picks[3]
        decomposition = square_free_part(s * s * c)
        assert (decomposition.c, decomposition.s) == (c, s)


def test_unresolvable_cofactor():
    with pytest.raises(FactorizationLimitError):
        square_free_part(1000003 * 1000033 * 1000037)


@pytest.mark.parametrize("n", [67076629, 16761320, 40, 5])
def test_perron_radicands_are_not_squares(n):
    assert not is_perfect_square(n)


def test_perfect_squares():
    assert is_perfect_square(0) and is_perfect_square(4) and is_perfect_square((2 ** 40 + 3) ** 2)
    assert not is_perfect_square((2 ** 40 + 3) ** 2 + 1)
    with pytest.raises(ValueError):
        is_perfect_square(-1)


def test_shifted_squares_are_never_squares():
    assert all(not is_perfect_square(lam ** 2 + 4) for lam in range(-10 ** 4, 10 ** 4 + 1) if lam != 0)


def test_recognize_integer():
    assert recognize_integer(3.0000001) == 3
    assert recognize_integer(-2.9999999) == -3
    assert recognize_integer(2.5) is None
    assert recognize_integer(float("nan")) is None
    assert recognize_integer(1.001, tol=0.01) == 1
    with pytest.raises(ValueError):
        recognize_integer(1.0, tol=0.5)
