"""Spectral data of a regular connected base graph, without the graph itself.

Only the projector entries of the requested vertex pairs are stored, so coronas over graphs with thousands of vertices
can be analysed from their published spectra. JSON layout::

    {"r": 23, "n": 4096, "eigenvalues": [23, 9, ...], "multiplicities": [1, 253, ...],
     "projector_entries": {"0,1": {"23": 0.000244140625, "9": -0.061767578125, ...}, ...}}
"""
import json
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import torch
from pytorch_lightning.utilities import rank_zero_warn

from qwalk_bolts.config import NumericConfig
from qwalk_bolts.number_theory.integers import recognize_integer
from qwalk_bolts.spectral.decomposition import Spectrum
from qwalk_bolts.utils.exceptions import PreconditionError, SpectralDataError

Pair = Tuple[int, int]
#: tolerance of the regularity test ``E_r = J / n``
REGULARITY_TOL = 1e-8


def _pair(u: int, v: int) -> Pair:
    return (min(u, v), max(u, v))


def _recognition_tol(tol: Optional[float]) -> float:
    return NumericConfig.from_env().recognition_tol if tol is None else tol


@dataclass(frozen=True)
class BaseSpectralData:
    """Degree, order, distinct eigenvalues and selected projector entries of a regular connected graph.

    Args:
        r: degree; must equal ``eigenvalues[0]``
        n: order
        eigenvalues: distinct eigenvalues, strictly decreasing
        multiplicities: their multiplicities; ``multiplicities[0] == 1``
        projector_entries: maps an unordered pair ``(u, v)`` to ``{eigenvalue index: e_u^T E_j e_v}``
    """

    r: int
    n: int
    eigenvalues: Tuple[float, ...]
    multiplicities: Tuple[int, ...]
    projector_entries: Dict[Pair, Dict[int, float]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "eigenvalues", tuple(float(x) for x in self.eigenvalues))
        object.__setattr__(self, "multiplicities", tuple(int(s) for s in self.multiplicities))
        object.__setattr__(
            self,
            "projector_entries",
            {_pair(*pair): {int(j): float(x) for j, x in row.items()} for pair, row in self.projector_entries.items()},
        )
        if self.n < 2:
            raise SpectralDataError(f"base order must be at least 2, got {self.n}")
        if len(self.eigenvalues) != len(self.multiplicities):
            raise SpectralDataError("need one multiplicity per eigenvalue")
        if any(a <= b for a, b in zip(self.eigenvalues, self.eigenvalues[1:])):
            raise SpectralDataError("eigenvalues must be strictly decreasing")
        if abs(self.eigenvalues[0] - self.r) > _recognition_tol(None) or self.multiplicities[0] != 1:
            raise SpectralDataError(
                f"largest eigenvalue must be the degree r={self.r} with multiplicity 1, got"
                f" {self.eigenvalues[0]} (x{self.multiplicities[0]})"
            )
        if sum(self.multiplicities) != self.n:
            raise SpectralDataError(f"multiplicities sum to {sum(self.multiplicities)}, expected n={self.n}")
        for (u, v), row in self.projector_entries.items():
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise SpectralDataError(f"vertex pair ({u}, {v}) out of range for n={self.n}")
            if any(not 0 <= j < len(self.eigenvalues) for j in row):
                raise SpectralDataError(f"projector entries of ({u}, {v}) reference unknown eigenvalues")

    def has_pair(self, u: int, v: int) -> bool:
        return _pair(u, v) in self.projector_entries

    def entries(self, u: int, v: int) -> Tuple[float, ...]:
        """``e_u^T E_j e_v`` for every eigenvalue, in eigenvalue order.

        Raises:
            SpectralDataError: when the pair or one of its entries is missing, naming the eigenvalue
        """
        row = self.projector_entries.get(_pair(u, v))
        if row is None:
            raise SpectralDataError(f"no projector entries for the pair ({u}, {v})")
        missing = [self.eigenvalues[j] for j in range(len(self.eigenvalues)) if j not in row]
        if missing:
            raise SpectralDataError(f"missing projector entry of ({u}, {v}) for eigenvalue {missing[0]}")
        return tuple(row[j] for j in range(len(self.eigenvalues)))

    def support(self, u: int, tol: float = 1e-8) -> List[int]:
        """Eigenvalue indices with ``e_u^T E_j e_u = ||E_j e_u||**2 > tol``."""
        return [j for j, x in enumerate(self.entries(u, u)) if x > tol]

    def identity_deviation(self, u: int, v: int) -> float:
        """``|sum_j e_u^T E_j e_v - delta_uv|``; the projectors resolve the identity."""
        return abs(sum(self.entries(u, v)) - (1.0 if u == v else 0.0))

    def adjacency_entry(self, u: int, v: int) -> float:
        return sum(lam * x for lam, x in zip(self.eigenvalues, self.entries(u, v)))

    def validate(self, tol: float = 1e-8) -> None:
        """Check the identity resolution and 0/1 adjacency reconstruction of every complete pair."""
        for u, v in self.projector_entries:
            try:
                deviation = self.identity_deviation(u, v)
            except SpectralDataError:
                continue
            if deviation > tol * max(1, self.n):
                raise SpectralDataError(f"projector entries of ({u}, {v}) sum to {deviation} away from delta_uv")
            adjacency = self.adjacency_entry(u, v)
            if min(abs(adjacency), abs(adjacency - 1)) > 1e-6 * max(1.0, abs(self.r)):
                rank_zero_warn(f"entries of ({u}, {v}) reconstruct A_uv = {adjacency}, which is not 0/1")

    @classmethod
    def from_spectrum(
        cls, spectrum: Spectrum, pairs: Iterable[Sequence[int]], tol: Optional[float] = None
    ) -> "BaseSpectralData":
        """Extract the data of a numerically decomposed regular connected graph.

        Raises:
            PreconditionError: when the graph is not regular and connected or its degree is not an integer
        """
        tol = _recognition_tol(tol)
        n = spectrum.dim
        r = recognize_integer(float(spectrum.eigenvalues[0]), tol)
        uniform = torch.full((n, n), 1.0 / n, dtype=torch.float64)
        if r is None or spectrum.multiplicities[0] != 1 or float((spectrum.projectors[0] - uniform).abs().max()) > tol:
            raise PreconditionError("base graph must be regular and connected", ["G"])
        entries = {}
        for u, v in pairs:
            entries[_pair(u, v)] = {j: float(spectrum.projectors[j, u, v]) for j in range(len(spectrum))}
        eigenvalues = list(spectrum.values())
        eigenvalues[0] = float(r)
        return cls(
            r=r,
            n=n,
            eigenvalues=tuple(eigenvalues),
            multiplicities=spectrum.multiplicities,
            projector_entries=entries,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "r": self.r,
            "n": self.n,
            "eigenvalues": list(self.eigenvalues),
            "multiplicities": list(self.multiplicities),
            "projector_entries": {
                f"{u},{v}": {repr(self.eigenvalues[j]): x for j, x in sorted(row.items())}
                for (u, v), row in sorted(self.projector_entries.items())
            },
        }

    @classmethod
    def from_dict(cls, doc: Dict[str, Any], tol: Optional[float] = None) -> "BaseSpectralData":
        """Parse a JSON document; eigenvalue keys match listed eigenvalues within ``tol`` relative to their size."""
        tol = _recognition_tol(tol)
        try:
            eigenvalues = [float(x) for x in doc["eigenvalues"]]
            raw_entries = doc.get("projector_entries", {})
            entries: Dict[Pair, Dict[int, float]] = {}
            for key, row in raw_entries.items():
                u, v = (int(x) for x in key.split(","))
                entries[_pair(u, v)] = {_eigenvalue_index(eigenvalues, lam, tol): float(x) for lam, x in row.items()}
            return cls(
                r=int(doc["r"]),
                n=int(doc["n"]),
                eigenvalues=tuple(eigenvalues),
                multiplicities=tuple(int(s) for s in doc["multiplicities"]),
                projector_entries=entries,
            )
        except (KeyError, TypeError, ValueError) as err:
            if isinstance(err, SpectralDataError):
                raise
            raise SpectralDataError(f"malformed spectral data document: {err!r}") from err

    @classmethod
    def load(cls, path: str, tol: Optional[float] = None) -> "BaseSpectralData":
        with open(path, encoding="utf-8") as fp:
            return cls.from_dict(json.load(fp), tol)


def _eigenvalue_index(eigenvalues: Sequence[float], key: str, tol: float) -> int:
    value = float(key)
    for j, lam in enumerate(eigenvalues):
        if abs(lam - value) < tol * max(1.0, abs(lam)):
            return j
    raise SpectralDataError(f"projector entry given for {key}, which is not a listed eigenvalue")


def as_base_data(base: Any, pairs: Optional[Iterable[Sequence[int]]] = None) -> BaseSpectralData:
    """Accept either ingested data or a numerical :class:`Spectrum` of the base graph."""
    if isinstance(base, BaseSpectralData):
        return base
    if isinstance(base, Spectrum):
        return BaseSpectralData.from_spectrum(base, pairs or [])
    raise TypeError(f"expected BaseSpectralData or Spectrum, got {type(base).__name__}")
