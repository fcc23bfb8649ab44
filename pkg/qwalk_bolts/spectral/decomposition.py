from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import torch
from torch import Tensor

from qwalk_bolts.utils.exceptions import NumericError, ShapeError

MatrixLike = Union[Tensor, np.ndarray, Sequence[Sequence[float]]]

#: largest asymmetry tolerated by :func:`eigendecompose`
SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class Spectrum:
    """Spectral decomposition ``A = sum_j eigenvalues[j] * projectors[j]`` over distinct eigenvalues.

    Args:
        eigenvalues: ``(p + 1,)`` float64 tensor, strictly decreasing
        multiplicities: eigenspace dimensions, summing to ``dim``
        projectors: ``(p + 1, dim, dim)`` float64 tensor of orthogonal eigenprojectors
    """

    eigenvalues: Tensor
    multiplicities: Tuple[int, ...]
    projectors: Tensor

    def __post_init__(self) -> None:
        object.__setattr__(self, "multiplicities", tuple(int(s) for s in self.multiplicities))
        if self.projectors.dim() != 3 or self.projectors.shape[0] != self.eigenvalues.shape[0]:
            raise ShapeError(
                f"need one projector per eigenvalue, got {tuple(self.projectors.shape)} for"
                f" {self.eigenvalues.shape[0]} eigenvalues"
            )
        if len(self.multiplicities) != self.eigenvalues.shape[0]:
            raise ShapeError("need one multiplicity per eigenvalue")
        if self.eigenvalues.numel() > 1 and not bool((self.eigenvalues[:-1] > self.eigenvalues[1:]).all()):
            raise ShapeError("eigenvalues must be strictly decreasing")

    @property
    def dim(self) -> int:
        return self.projectors.shape[-1]

    def __len__(self) -> int:
        return self.eigenvalues.shape[0]

    def values(self) -> List[float]:
        return self.eigenvalues.tolist()

    def index_of(self, value: float, tol: float = 1e-8) -> Optional[int]:
        """Index of the distinct eigenvalue within ``tol`` of ``value``, if any."""
        distance = (self.eigenvalues - value).abs()
        j = int(torch.argmin(distance))
        return j if float(distance[j]) < tol else None

    def matrix(self) -> Tensor:
        return torch.einsum("j,jab->ab", self.eigenvalues, self.projectors)

    def invariant_deviation(self, matrix: Optional[MatrixLike] = None) -> Dict[str, float]:
        """Largest absolute deviation of every spectral-decomposition identity.

        Keys: ``multiplicity_sum``, ``resolution_of_identity``, ``idempotence``, ``orthogonality``, ``trace`` and,
        when ``matrix`` is given, ``reconstruction``.
        """
        e = self.projectors
        eye = torch.eye(self.dim, dtype=e.dtype)
        products = torch.einsum("iab,jbc->ijac", e, e)
        p = len(self)
        diag = torch.arange(p)
        off_diag = ~torch.eye(p, dtype=torch.bool)
        traces = torch.diagonal(e, dim1=-2, dim2=-1).sum(-1)
        mults = torch.tensor(self.multiplicities, dtype=e.dtype)
        deviation = {
            "multiplicity_sum": float(abs(sum(self.multiplicities) - self.dim)),
            "resolution_of_identity": float((e.sum(0) - eye).abs().max()),
            "idempotence": float((products[diag, diag] - e).abs().max()),
            "orthogonality": float(products[off_diag].abs().max()) if p > 1 else 0.0,
            "trace": float((traces - mults).abs().max()),
        }
        if matrix is not None:
            a = torch.as_tensor(matrix, dtype=e.dtype)
            deviation["reconstruction"] = float((self.matrix() - a).abs().max())
        return deviation

    def to_dict(self) -> Dict[str, Any]:
        return {
            "eigenvalues": self.eigenvalues.tolist(),
            "multiplicities": list(self.multiplicities),
            "projectors": self.projectors.tolist(),
        }

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> "Spectrum":
        return cls(
            eigenvalues=torch.tensor(doc["eigenvalues"], dtype=torch.float64),
            multiplicities=tuple(doc["multiplicities"]),
            projectors=torch.tensor(doc["projectors"], dtype=torch.float64),
        )


def cluster_eigenvalues(values: Tensor, tol: float) -> List[List[int]]:
    """Group indices of ascending ``values`` into runs whose consecutive gaps are below ``tol``.

    >>> cluster_eigenvalues(torch.tensor([-1.0, 0.0, 1e-12, 2.0]), 1e-9)
    [[0], [1, 2], [3]]
    """
    clusters: List[List[int]] = []
    for i in range(values.shape[0]):
        if clusters and float(values[i] - values[i - 1]) < tol:
            clusters[-1].append(i)
        else:
            clusters.append([i])
    return clusters


def eigendecompose(a: MatrixLike, group_tol: Optional[float] = None) -> Spectrum:
    """Decompose a real symmetric matrix into distinct eigenvalues and eigenprojectors.

    Eigenvalues closer than ``group_tol`` (default ``1e-9 * max(1, ||a||_2)``) are merged into one eigenspace and
    the projector is assembled from its orthonormal eigenvectors.

    Example::

        >>> s = eigendecompose([[0.0, 1.0], [1.0, 0.0]])
        >>> [round(x, 9) for x in s.values()], s.multiplicities
        ([1.0, -1.0], (1, 1))
    """
    a = torch.as_tensor(a, dtype=torch.float64)
    if a.dim() != 2 or a.shape[0] != a.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {tuple(a.shape)}")
    asymmetry = float((a - a.T).abs().max()) if a.numel() else 0.0
    if asymmetry > SYMMETRY_TOL:
        raise ShapeError(f"matrix is not symmetric (max asymmetry {asymmetry:.3e})")
    if group_tol is not None and group_tol <= 0:
        raise ValueError(f"group_tol must be positive, got {group_tol}")

    try:
        evals, evecs = torch.linalg.eigh(a)
    except RuntimeError as err:
        raise NumericError(f"symmetric eigendecomposition failed: {err}") from err

    if group_tol is None:
        group_tol = 1e-9 * max(1.0, float(evals.abs().max()))

    values, mults, projectors = [], [], []
    for idx in reversed(cluster_eigenvalues(evals, group_tol)):
        vectors = evecs[:, idx]
        values.append(float(evals[idx].mean()))
        mults.append(len(idx))
        projectors.append(vectors @ vectors.T)
    return Spectrum(
        eigenvalues=torch.tensor(values, dtype=torch.float64),
        multiplicities=tuple(mults),
        projectors=torch.stack(projectors),
    )


def merge_spectral_terms(
    terms: Sequence[Tuple[float, Tensor]], tol: float, drop_below: float = 0.5
) -> Spectrum:
    """Assemble a :class:`Spectrum` from ``(eigenvalue, projector)`` pieces, summing pieces with equal eigenvalues.

    Pieces whose rank (trace) is below ``drop_below`` are discarded, so empty branches may be passed in.
    """
    kept = [(value, proj) for value, proj in terms if float(torch.trace(proj)) >= drop_below]
    if not kept:
        raise ShapeError("no spectral terms with positive rank")
    kept.sort(key=lambda term: term[0])
    ascending = torch.tensor([value for value, _ in kept], dtype=torch.float64)

    values, mults, projectors = [], [], []
    for idx in reversed(cluster_eigenvalues(ascending, tol)):
        proj = torch.stack([kept[i][1] for i in idx]).sum(0)
        values.append(float(ascending[idx].mean()))
        mults.append(int(round(float(torch.trace(proj)))))
        projectors.append(proj)
    return Spectrum(
        eigenvalues=torch.tensor(values, dtype=torch.float64),
        multiplicities=tuple(mults),
        projectors=torch.stack(projectors),
    )
