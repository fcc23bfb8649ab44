"""Error types raised across the package.

Verdict-like outcomes (unclassifiable spectra, inconclusive periodicity, exhausted searches) are values carried by
reports, never exceptions.
"""
from typing import Optional, Sequence

from pytorch_lightning.utilities.exceptions import MisconfigurationException


class GraphParameterError(ValueError):
    """A named graph family received parameters violating its constraints."""


class GraphParseError(ValueError):
    """An edge list or JSON graph document could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class CoronaSpecError(ValueError):
    """The satellite tuple does not match the base graph."""


class ShapeError(ValueError):
    """A matrix is not square/symmetric or a vertex index is out of range."""


class NumericError(RuntimeError):
    """A numerical routine did not converge."""


class SpectralDataError(ValueError):
    """Ingested spectral data is malformed or misses an entry."""


class FactorizationLimitError(ArithmeticError):
    """The residual cofactor left after trial division cannot be resolved."""


class PreconditionError(MisconfigurationException):
    """The hypotheses of a closed form or certifier do not hold for the given input.

    Args:
        message: what failed
        offending: names of the offending satellites or checks
    """

    def __init__(self, message: str, offending: Optional[Sequence[str]] = None) -> None:
        self.offending = list(offending or [])
        if self.offending:
            message = f"{message} (offending: {', '.join(self.offending)})"
        super().__init__(message)
