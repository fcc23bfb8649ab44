"""Exact integer arithmetic: square-free parts, perfect squares and recognition of floats as integers."""
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

from sympy import integer_nthroot, isprime, primerange

from qwalk_bolts.utils.exceptions import FactorizationLimitError

#: trial division bound of :func:`square_free_part`
TRIAL_DIVISION_BOUND = 10 ** 6
MAX_INPUT = 2 ** 63 - 1


@lru_cache(maxsize=4)
def _primes_below(bound: int) -> Tuple[int, ...]:
    return tuple(primerange(2, bound))


@dataclass(frozen=True)
class SquareFreeDecomposition:
    """``n = s**2 * c`` with ``c`` square-free."""

    n: int
    c: int
    s: int


def square_free_part(n: int, bound: int = TRIAL_DIVISION_BOUND) -> SquareFreeDecomposition:
    """Decompose ``n`` as ``s**2 * c`` with ``c`` square-free.

    Trial division runs over primes below ``bound`` and stops early once the cube of the next prime exceeds the
    remaining cofactor; the cofactor then has at most two prime factors and its square-freeness is settled by a
    perfect-square test. Larger cofactors are resolved when prime, a perfect square or a perfect cube.

    Raises:
        FactorizationLimitError: when the residual cofactor cannot be resolved

    >>> square_free_part(45)
    SquareFreeDecomposition(n=45, c=5, s=3)
    """
    n = int(n)
    if not 1 <= n <= MAX_INPUT:
        raise ValueError(f"square_free_part expects 1 <= n <= 2**63 - 1, got {n}")

    c, s, rest = 1, 1, n
    exhausted = True
    for p in _primes_below(bound):
        if p * p * p > rest:
            exhausted = False
            break
        if rest % p:
            continue
        exponent = 0
        while rest % p == 0:
            rest //= p
            exponent += 1
        s *= p ** (exponent // 2)
        if exponent % 2:
            c *= p

    if rest > 1:
        root = math.isqrt(rest)
        if root * root == rest:
            s *= root
        elif not exhausted or rest < bound ** 3 or isprime(rest):
            # at most two distinct prime factors left
            c *= rest
        else:
            cube, exact = integer_nthroot(rest, 3)
            if not exact:
                raise FactorizationLimitError(
                    f"cannot resolve the cofactor {rest} of {n} beyond trial division up to {bound}"
                )
            s *= int(cube)
            c *= int(cube)
    return SquareFreeDecomposition(n=n, c=c, s=s)


def is_perfect_square(n: int) -> bool:
    """Exact integer square test.

    >>> is_perfect_square(23 ** 2 + 4 * 4095 ** 2)
    False
    """
    n = int(n)
    if n < 0:
        raise ValueError(f"is_perfect_square expects a nonnegative integer, got {n}")
    root = math.isqrt(n)
    return root * root == n


def recognize_integer(x: float, tol: float = 1e-6) -> Optional[int]:
    """Nearest integer to ``x`` when closer than ``tol``, otherwise ``None``.

    >>> recognize_integer(2.0000000001), recognize_integer(1.618)
    (2, None)
    """
    if not 0 < tol < 0.5:
        raise ValueError(f"tol must lie in (0, 0.5), got {tol}")
    if not math.isfinite(x):
        return None
    nearest = round(x)
    return int(nearest) if abs(x - nearest) < tol else None
