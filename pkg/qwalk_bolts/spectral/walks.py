"""Continuous-time quantum walks ``H(t) = exp(-itA) = sum_j exp(-it lambda_j) E_j`` evaluated from a Spectrum."""
import csv
import io
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

import torch
from torch import Tensor

from qwalk_bolts.config import NumericConfig
from qwalk_bolts.spectral.decomposition import Spectrum
from qwalk_bolts.utils.exceptions import ShapeError


def _check_vertex(s: Spectrum, u: int) -> None:
    if not 0 <= u < s.dim:
        raise ShapeError(f"vertex {u} out of range for dimension {s.dim}")


def _support_tol(tol: Optional[float]) -> float:
    return NumericConfig.from_env().support_tol if tol is None else tol


def eigenvalue_support(s: Spectrum, u: int, tol: Optional[float] = None) -> List[int]:
    """Indices ``j`` with ``||E_j e_u|| > tol``."""
    _check_vertex(s, u)
    norms = s.projectors[:, :, u].norm(dim=1)
    return torch.nonzero(norms > _support_tol(tol)).flatten().tolist()


@dataclass(frozen=True)
class Cospectrality:
    """Outcome of the strong cospectrality test; truthy when it holds.

    ``signs`` maps eigenvalue index to ``+1`` when ``E e_u = E e_v`` and ``-1`` when ``E e_u = -E e_v``, over the
    union of both supports.
    """

    holds: bool
    signs: Dict[int, int] = field(default_factory=dict)
    failing_index: Optional[int] = None

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self, s: Spectrum) -> Dict[str, Any]:
        doc: Dict[str, Any] = {
            "holds": self.holds,
            "signs": [{"eigenvalue": float(s.eigenvalues[j]), "sign": sign} for j, sign in self.signs.items()],
        }
        if self.failing_index is not None:
            doc["failing_eigenvalue"] = float(s.eigenvalues[self.failing_index])
        return doc


def strongly_cospectral(s: Spectrum, u: int, v: int, tol: Optional[float] = None) -> Cospectrality:
    if u == v:
        raise ValueError("strong cospectrality needs two distinct vertices")
    _check_vertex(s, u)
    _check_vertex(s, v)
    tol = _support_tol(tol)
    column_u, column_v = s.projectors[:, :, u], s.projectors[:, :, v]
    support = sorted(set(eigenvalue_support(s, u, tol)) | set(eigenvalue_support(s, v, tol)))
    signs: Dict[int, int] = {}
    for j in support:
        if float((column_u[j] - column_v[j]).norm()) < tol:
            signs[j] = 1
        elif float((column_u[j] + column_v[j]).norm()) < tol:
            signs[j] = -1
        else:
            return Cospectrality(holds=False, signs=signs, failing_index=j)
    return Cospectrality(holds=True, signs=signs)


def transition_entries(s: Spectrum, times: Tensor, u: int, v: int) -> Tensor:
    """``H(t)_{u,v}`` for every ``t`` in ``times`` as a complex128 tensor."""
    _check_vertex(s, u)
    _check_vertex(s, v)
    times = torch.as_tensor(times, dtype=torch.float64).reshape(-1)
    angles = -torch.outer(times, s.eigenvalues)
    phases = torch.polar(torch.ones_like(angles), angles)
    return phases @ s.projectors[:, u, v].to(torch.complex128)


def transition_entry(s: Spectrum, t: float, u: int, v: int) -> complex:
    """``H(t)_{u,v} = sum_j exp(-it lambda_j) (E_j)_{u,v}``."""
    return complex(transition_entries(s, torch.tensor([float(t)]), u, v)[0].item())


def transition_matrix(s: Spectrum, t: float) -> Tensor:
    phases = torch.polar(torch.ones_like(s.eigenvalues), -float(t) * s.eigenvalues)
    return torch.einsum("j,jab->ab", phases, s.projectors.to(torch.complex128))


@dataclass(frozen=True)
class AmplitudeCurve:
    times: Tensor
    amplitudes: Tensor
    fidelities: Tensor
    argmax_time: float
    max_fidelity: float

    def __len__(self) -> int:
        return self.times.shape[0]

    def to_csv(self, path: Optional[str] = None) -> str:
        """CSV with header ``t,re,im,fidelity``; written to ``path`` when given, returned in any case."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["t", "re", "im", "fidelity"])
        for t, z, f in zip(self.times.tolist(), self.amplitudes.tolist(), self.fidelities.tolist()):
            writer.writerow([repr(t), repr(z.real), repr(z.imag), repr(f)])
        text = buffer.getvalue()
        if path is not None:
            with open(path, "w", encoding="utf-8") as fp:
                fp.write(text)
        return text

    def summary(self) -> Dict[str, Any]:
        return {
            "steps": len(self),
            "t_min": float(self.times[0]),
            "t_max": float(self.times[-1]),
            "argmax_time": self.argmax_time,
            "max_fidelity": self.max_fidelity,
        }


def scan_amplitudes(
    evaluate: Callable[[Tensor], Tensor], t_min: float, t_max: float, steps: int, chunk_size: int = 1 << 16
) -> AmplitudeCurve:
    """Evaluate an amplitude function on a uniform grid of ``steps`` points in ``[t_min, t_max]``.

    Points are evaluated independently in chunks of ``chunk_size`` and assembled in grid order; the argmax is the
    first grid point reaching the maximal fidelity.
    """
    if not t_min < t_max:
        raise ValueError(f"need t_min < t_max, got [{t_min}, {t_max}]")
    if steps < 2:
        raise ValueError(f"need at least 2 steps, got {steps}")
    times = torch.linspace(float(t_min), float(t_max), int(steps), dtype=torch.float64)
    amplitudes = torch.cat([evaluate(chunk) for chunk in torch.split(times, chunk_size)])
    fidelities = amplitudes.abs()
    best = int(torch.argmax(fidelities))
    return AmplitudeCurve(
        times=times,
        amplitudes=amplitudes,
        fidelities=fidelities,
        argmax_time=float(times[best]),
        max_fidelity=float(fidelities[best]),
    )


def fidelity_scan(
    s: Spectrum, u: int, v: int, t_min: float, t_max: float, steps: int, chunk_size: int = 1 << 16
) -> AmplitudeCurve:
    """``H(t)_{u,v}`` on a uniform grid of ``steps`` points in ``[t_min, t_max]``."""
    _check_vertex(s, u)
    _check_vertex(s, v)
    return scan_amplitudes(lambda times: transition_entries(s, times, u, v), t_min, t_max, steps, chunk_size)
