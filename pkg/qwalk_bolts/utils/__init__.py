from qwalk_bolts.utils.exceptions import (
    CoronaSpecError,
    FactorizationLimitError,
    GraphParameterError,
    GraphParseError,
    NumericError,
    PreconditionError,
    ShapeError,
    SpectralDataError,
)

__all__ = [
    "CoronaSpecError",
    "FactorizationLimitError",
    "GraphParameterError",
    "GraphParseError",
    "NumericError",
    "PreconditionError",
    "ShapeError",
    "SpectralDataError",
]
