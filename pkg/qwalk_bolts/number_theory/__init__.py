from qwalk_bolts.number_theory.integers import (  # noqa: F401
    SquareFreeDecomposition,
    is_perfect_square,
    recognize_integer,
    square_free_part,
)
from qwalk_bolts.number_theory.kronecker import KroneckerWitness, kronecker_witness  # noqa: F401
from qwalk_bolts.number_theory.quadratic import (  # noqa: F401
    QuadraticClass,
    QuadraticInteger,
    QuadraticKind,
    classify_quadratic,
    individual_quadratic,
)

__all__ = [
    "KroneckerWitness",
    "QuadraticClass",
    "QuadraticInteger",
    "QuadraticKind",
    "SquareFreeDecomposition",
    "classify_quadratic",
    "individual_quadratic",
    "is_perfect_square",
    "kronecker_witness",
    "recognize_integer",
    "square_free_part",
]
