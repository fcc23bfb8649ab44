"""Periodicity of a vertex from its eigenvalue support, plus a numerical falsification probe."""
from dataclasses import dataclass
from functools import partial
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

import torch
from pytorch_lightning.utilities import rank_zero_info
from torch import Tensor

from qwalk_bolts.config import NumericConfig
from qwalk_bolts.corona.construction import CoronaGraph
from qwalk_bolts.number_theory.quadratic import QuadraticKind, classify_quadratic
from qwalk_bolts.spectral.decomposition import Spectrum
from qwalk_bolts.spectral.walks import eigenvalue_support, transition_entries
from qwalk_bolts.transfer.reports import PeriodicityReport, Verdict


def is_periodic_vertex(
    s: Spectrum, u: int, config: Optional[NumericConfig] = None, vertex: Optional[Any] = None
) -> PeriodicityReport:
    """A vertex is periodic iff its supported eigenvalues are all integers or all ``(a + b_l sqrt(D)) / 2``.

    When no common form exists but every value is a quadratic integer on its own, the vertex is not periodic;
    any value escaping recognition leaves the verdict inconclusive.

    Args:
        s: spectrum of the graph
        u: flat vertex index
        config: tolerances, defaults to :meth:`NumericConfig.from_env`
        vertex: label reported instead of ``u``
    """
    config = config or NumericConfig.from_env()
    support = eigenvalue_support(s, u, config.support_tol)
    values = [float(s.eigenvalues[j]) for j in support]
    found = classify_quadratic(values, config.recognition_tol, config.delta_max)
    evidence: Dict[str, Any] = {"support": values, "classification": found.to_dict()}

    if found.kind is QuadraticKind.ALL_INTEGER:
        verdict, criterion = Verdict.PERIODIC, "integer-spectrum"
    elif found.kind is QuadraticKind.QUADRATIC:
        verdict, criterion = Verdict.PERIODIC, "quadratic-spectrum"
    elif found.every_value_recognized:
        verdict, criterion = Verdict.NOT_PERIODIC, "no-common-quadratic-field"
    else:
        verdict, criterion = Verdict.INCONCLUSIVE, "unclassifiable-spectrum"
    vertex = u if vertex is None else vertex
    rank_zero_info(f"vertex {vertex}: {verdict.value} ({criterion})")
    return PeriodicityReport(vertex=vertex, verdict=verdict, criterion=criterion, evidence=evidence)


@dataclass(frozen=True)
class ReturnProbe:
    """Grid points past the initial neighbourhood of ``t = 0`` where ``|H(t)_uu| > 1 - threshold``."""

    vertex: int
    horizon: float
    step: float
    threshold: float
    near_returns: int
    first_return: Optional[float]
    max_fidelity: float

    @property
    def returned(self) -> bool:
        return self.near_returns > 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertex": self.vertex,
            "horizon": self.horizon,
            "step": self.step,
            "threshold": self.threshold,
            "near_returns": self.near_returns,
            "first_return": self.first_return,
            "max_fidelity": self.max_fidelity,
        }


def return_probe(
    s: Union[Spectrum, Callable[[Tensor], Tensor]],
    u: int,
    horizon: Optional[float] = None,
    step: Optional[float] = None,
    threshold: Optional[float] = None,
    chunk_size: int = 1 << 16,
) -> ReturnProbe:
    """Scan ``|H(t)_uu|`` on a uniform grid of ``[step, horizon]``.

    Heuristic corroboration only: a periodic vertex may return after the horizon, and a not periodic one may come
    close to returning. Grid points before the amplitude first drops below ``1 - threshold`` are skipped. ``s`` is
    the spectrum of the graph or a callable mapping a time tensor to the amplitudes ``H(t)_uu``.

    >>> from qwalk_bolts.spectral.decomposition import eigendecompose
    >>> probe = return_probe(eigendecompose([[0.0, 1.0], [1.0, 0.0]]), 0, horizon=4.0)
    >>> abs(probe.first_return - 3.1416) < 0.05
    True
    """
    defaults = NumericConfig.from_env()
    horizon = defaults.probe_horizon if horizon is None else horizon
    step = defaults.probe_step if step is None else step
    threshold = defaults.probe_threshold if threshold is None else threshold
    if step <= 0 or horizon <= step:
        raise ValueError(f"need 0 < step < horizon, got step={step}, horizon={horizon}")
    evaluate = partial(transition_entries, s, u=u, v=u) if isinstance(s, Spectrum) else s

    times = torch.arange(1, int(horizon / step) + 1, dtype=torch.float64) * step
    left_start = False
    count, first, best = 0, None, 0.0
    for chunk in torch.split(times, chunk_size):
        fidelities = evaluate(chunk).abs()
        if not left_start:
            below = torch.nonzero(fidelities <= 1 - threshold).flatten()
            if below.numel() == 0:
                continue
            left_start = True
            chunk, fidelities = chunk[int(below[0]) :], fidelities[int(below[0]) :]
        hits = torch.nonzero(fidelities > 1 - threshold).flatten()
        if hits.numel() and first is None:
            first = float(chunk[int(hits[0])])
        count += hits.numel()
        best = max(best, float(fidelities.max()))
    return ReturnProbe(
        vertex=u,
        horizon=float(horizon),
        step=float(step),
        threshold=float(threshold),
        near_returns=count,
        first_return=first,
        max_fidelity=best,
    )


@dataclass(frozen=True)
class CoronaSurvey:
    """Periodicity of every corona vertex, and whether ``supp (v, -)`` lies in every ``supp (v, w)`` per base vertex."""

    reports: Tuple[PeriodicityReport, ...]
    containment: Dict[int, bool]

    @property
    def all_not_periodic(self) -> bool:
        return all(r.verdict is Verdict.NOT_PERIODIC for r in self.reports)

    def verdicts(self) -> Dict[str, str]:
        return {str(r.vertex): r.verdict.value for r in self.reports}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "reports": [r.to_dict() for r in self.reports],
            "containment": {str(v): ok for v, ok in self.containment.items()},
        }


def corona_vertex_survey(
    corona: CoronaGraph, spectrum: Spectrum, config: Optional[NumericConfig] = None
) -> CoronaSurvey:
    """Run :func:`is_periodic_vertex` over every vertex of a built corona, labelled ``v:i`` / ``v:i/w:j``."""
    config = config or NumericConfig.from_env()
    reports: List[PeriodicityReport] = []
    supports = []
    for index, label in enumerate(corona.labels()):
        reports.append(is_periodic_vertex(spectrum, index, config, vertex=label))
        supports.append(set(eigenvalue_support(spectrum, index, config.support_tol)))

    containment = {}
    for v in range(corona.spec.base.n):
        satellite = [corona.offsets[v] + w for w in range(corona.spec.satellites[v].n)]
        containment[v] = all(supports[v] <= supports[i] for i in satellite)
    return CoronaSurvey(reports=tuple(reports), containment=containment)
