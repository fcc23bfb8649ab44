"""Quadratic-integer recognition of eigenvalue sets.

A vertex of an integer graph is periodic exactly when the eigenvalues of its support are all integers, or all of the
form ``(a + b_l * sqrt(D)) / 2`` for one integer ``a`` and one square-free ``D``.
"""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from qwalk_bolts.number_theory.integers import recognize_integer, square_free_part


class QuadraticKind(str, Enum):
    ALL_INTEGER = "all_integer"
    QUADRATIC = "quadratic"
    UNCLASSIFIABLE = "unclassifiable"


@dataclass(frozen=True)
class QuadraticInteger:
    """``(a + b * sqrt(delta)) / 2``; ``delta == 1`` marks an integer, stored as ``a = 2x, b = 0``."""

    a: int
    delta: int
    b: int

    @property
    def is_integer(self) -> bool:
        return self.delta == 1

    def value(self) -> float:
        return (self.a + self.b * math.sqrt(self.delta)) / 2

    def to_dict(self) -> Dict[str, int]:
        return {"a": self.a, "delta": self.delta, "b": self.b}


@dataclass(frozen=True)
class QuadraticClass:
    """Classification of a set of values.

    For ``QUADRATIC`` every value equals ``(a + b[i] * sqrt(delta)) / 2``. For ``ALL_INTEGER``, ``b[i]`` is the
    integer value and ``delta == 1``. For ``UNCLASSIFIABLE``, ``individual`` holds the per-value recognition (``None``
    where a value is not a quadratic integer at all).
    """

    kind: QuadraticKind
    values: Tuple[float, ...]
    tol: float
    a: int = 0
    delta: int = 1
    b: Tuple[int, ...] = ()
    individual: Tuple[Optional[QuadraticInteger], ...] = field(default=())

    @property
    def every_value_recognized(self) -> bool:
        """Whether each value is individually a quadratic integer (always true unless unclassifiable)."""
        if self.kind is not QuadraticKind.UNCLASSIFIABLE:
            return True
        return bool(self.individual) and all(q is not None for q in self.individual)

    def to_dict(self) -> Dict[str, Any]:
        doc: Dict[str, Any] = {"kind": self.kind.value, "values": list(self.values), "tol": self.tol}
        if self.kind is QuadraticKind.QUADRATIC:
            doc.update(a=self.a, delta=self.delta, b=list(self.b))
        elif self.kind is QuadraticKind.ALL_INTEGER:
            doc["integers"] = list(self.b)
        else:
            doc["individual"] = [None if q is None else q.to_dict() for q in self.individual]
        return doc


def _search_bound(values: Sequence[float]) -> int:
    return int(math.ceil(2 * max(abs(v) for v in values) + 2))


def _representation(values: Sequence[float], a: int, tol: float, delta_max: int) -> Optional[Tuple[int, List[int]]]:
    """Common ``(delta, b)`` for a fixed ``a``, recognising ``(2v - a)**2`` as integers."""
    squares = [recognize_integer((2 * v - a) ** 2, tol) for v in values]
    if any(d is None for d in squares):
        return None
    radicands = {square_free_part(d).c for d in squares if d}
    if len(radicands) != 1:
        return None
    delta = radicands.pop()
    if not 2 <= delta <= delta_max:
        return None
    b = []
    for v, d in zip(values, squares):
        coefficient = square_free_part(d).s if d else 0
        b.append(coefficient if 2 * v - a >= 0 else -coefficient)
    if any(abs(v - (a + bi * math.sqrt(delta)) / 2) >= tol for v, bi in zip(values, b)):
        return None
    return delta, b


def individual_quadratic(
    x: float, tol: float = 1e-6, bound: Optional[int] = None, delta_max: int = 10 ** 6
) -> Optional[QuadraticInteger]:
    """Recognise one value as a quadratic integer.

    For irrational ``x`` only the trace ``a = x + x'`` makes ``(2x - a)**2`` an integer, so the scan over ``a`` is
    exact. ``bound`` limits ``|a|`` (default ``2|x| + 2``).

    >>> individual_quadratic((1 + 5 ** 0.5) / 2)
    QuadraticInteger(a=1, delta=5, b=1)
    """
    z = recognize_integer(x, tol)
    if z is not None:
        return QuadraticInteger(2 * z, 1, 0)
    bound = _search_bound([x]) if bound is None else bound
    for a in range(-bound, bound + 1):
        found = _representation([x], a, tol, delta_max)
        if found is not None:
            return QuadraticInteger(a, found[0], found[1][0])
    return None


def classify_quadratic(values: Sequence[float], tol: float = 1e-6, delta_max: int = 10 ** 6) -> QuadraticClass:
    """Classify ``values`` as all integers, a common quadratic form, or neither.

    The search covers every integer ``a`` with ``|a| <= 2 max|v| + 2`` and keeps the smallest square-free
    ``delta <= delta_max`` for which every ``b_v = (2v - a) / sqrt(delta)`` is an integer.

    >>> c = classify_quadratic([(1 + 5 ** 0.5) / 2, (1 - 5 ** 0.5) / 2])
    >>> c.kind.value, c.a, c.delta, c.b
    ('quadratic', 1, 5, (1, -1))
    """
    values = tuple(float(v) for v in values)
    if not values:
        raise ValueError("classify_quadratic needs at least one value")

    integers = [recognize_integer(v, tol) for v in values]
    if all(z is not None for z in integers):
        return QuadraticClass(QuadraticKind.ALL_INTEGER, values, tol, b=tuple(integers))  # type: ignore[arg-type]

    bound = _search_bound(values)
    best: Optional[Tuple[int, int, List[int]]] = None
    for a in sorted(range(-bound, bound + 1), key=abs):
        found = _representation(values, a, tol, delta_max)
        if found is not None and (best is None or found[0] < best[0]):
            best = (found[0], a, found[1])
    if best is not None:
        delta, a, b = best
        return QuadraticClass(QuadraticKind.QUADRATIC, values, tol, a=a, delta=delta, b=tuple(b))

    individual = tuple(individual_quadratic(v, tol, bound, delta_max) for v in values)
    return QuadraticClass(QuadraticKind.UNCLASSIFIABLE, values, tol, individual=individual)
