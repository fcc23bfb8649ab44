"""Corona eigenvalues from the spectra of the factors.

For an r-regular connected base ``G`` on ``n`` vertices and k-regular satellites on ``m`` vertices the corona has

- (a) ``k`` with multiplicity ``sum_i s_k(H_i) - n``
- (b) every other satellite eigenvalue ``mu`` with multiplicity ``sum_i s_mu(H_i)``
- (c) ``(lambda + k +- Lambda_lambda) / 2`` with ``Lambda_lambda = sqrt((lambda - k)**2 + 4m)`` and multiplicity
  ``s_lambda`` for every base eigenvalue ``lambda != r``
- (d) ``(r + k +- Lambda_r) / 2`` with ``Lambda_r = sqrt((r - k)**2 + 4m(n - 1)**2)``, simple
"""
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import torch

from qwalk_bolts.closed_form.base_data import REGULARITY_TOL, BaseSpectralData
from qwalk_bolts.corona.construction import check_base, satellite_parameters
from qwalk_bolts.graphs.graph import Graph
from qwalk_bolts.number_theory.integers import recognize_integer
from qwalk_bolts.spectral.decomposition import Spectrum, cluster_eigenvalues, eigendecompose
from qwalk_bolts.utils.exceptions import PreconditionError

BaseInput = Union[BaseSpectralData, Spectrum]


@dataclass(frozen=True)
class CoronaEigenvalue:
    """One eigenvalue with the branch (``a``..``d``) producing it; ``source`` is the base or satellite eigenvalue."""

    value: float
    multiplicity: int
    branch: str
    source: float

    def to_dict(self) -> Dict[str, Any]:
        return {"value": self.value, "multiplicity": self.multiplicity, "branch": self.branch, "source": self.source}


@dataclass(frozen=True)
class EigenvaluePair:
    """``plus``/``minus`` roots generated by the base eigenvalue ``source``; ``big_lambda`` is their difference."""

    source: float
    plus: float
    minus: float
    big_lambda: float
    multiplicity: int


@dataclass(frozen=True)
class CoronaEigenvalueSet:
    k: int
    m: int
    n: int
    r: int
    mu_branch: Tuple[CoronaEigenvalue, ...]
    lambda_pm: Tuple[EigenvaluePair, ...]
    r_pm: EigenvaluePair

    def entries(self) -> List[CoronaEigenvalue]:
        """Every eigenvalue with positive multiplicity, branch by branch."""
        out = [e for e in self.mu_branch if e.multiplicity > 0]
        for pair in self.lambda_pm:
            out.append(CoronaEigenvalue(pair.plus, pair.multiplicity, "c", pair.source))
            out.append(CoronaEigenvalue(pair.minus, pair.multiplicity, "c", pair.source))
        out.append(CoronaEigenvalue(self.r_pm.plus, 1, "d", self.r_pm.source))
        out.append(CoronaEigenvalue(self.r_pm.minus, 1, "d", self.r_pm.source))
        return out

    def total_multiplicity(self) -> int:
        return sum(e.multiplicity for e in self.entries())

    def as_multiset(self) -> List[float]:
        """All ``n (m + 1)`` eigenvalues, repeated by multiplicity, in decreasing order."""
        values = [e.value for e in self.entries() for _ in range(e.multiplicity)]
        return sorted(values, reverse=True)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "m": self.m,
            "n": self.n,
            "r": self.r,
            "branches": [e.to_dict() for e in self.entries()],
            "big_lambda": {repr(p.source): p.big_lambda for p in self.lambda_pm + (self.r_pm,)},
        }


def base_parameters(base: BaseInput, tol: float = 1e-6) -> Tuple[int, int, List[float], List[int]]:
    """Degree, order, distinct eigenvalues and multiplicities of a regular connected base.

    Raises:
        PreconditionError: when a numerical base spectrum is not that of a regular connected graph
    """
    if isinstance(base, BaseSpectralData):
        return base.r, base.n, list(base.eigenvalues), list(base.multiplicities)
    n = base.dim
    r = recognize_integer(float(base.eigenvalues[0]), tol)
    uniform = torch.full((n, n), 1.0 / n, dtype=torch.float64)
    regular = r is not None and base.multiplicities[0] == 1
    if not regular or n < 2 or float((base.projectors[0] - uniform).abs().max()) > REGULARITY_TOL:
        raise PreconditionError("base graph must be regular, connected and have n >= 2", ["G"])
    values = base.values()
    values[0] = float(r)  # type: ignore[arg-type]
    return r, n, values, list(base.multiplicities)  # type: ignore[return-value]


def expand_satellites(sat_spectra: Sequence[Spectrum], n: int) -> List[Spectrum]:
    """One spectrum per base vertex; a single spectrum is shared by all of them."""
    if len(sat_spectra) == 1:
        return list(sat_spectra) * n
    if len(sat_spectra) != n:
        raise PreconditionError(f"expected 1 or {n} satellite spectra, got {len(sat_spectra)}")
    return list(sat_spectra)


def check_satellite_spectra(sat_spectra: Sequence[Spectrum], k: int, m: int, tol: float = 1e-6) -> None:
    """Every satellite must have ``m`` vertices, top eigenvalue ``k`` and the all-ones vector in its eigenspace."""
    offending = []
    for i, s in enumerate(sat_spectra):
        ones = torch.ones(s.dim, dtype=torch.float64)
        regular = s.dim == m and abs(float(s.eigenvalues[0]) - k) < tol
        if not regular or float((s.projectors[0] @ ones - ones).abs().max()) > tol:
            offending.append(f"H_{i}")
    if offending:
        raise PreconditionError(f"satellites must be {k}-regular on {m} vertices", offending)


def corona_eigenvalues(
    base: BaseInput, sat_spectra: Sequence[Spectrum], k: int, m: int, tol: Optional[float] = None
) -> CoronaEigenvalueSet:
    """All eigenvalues of the corona with their branch of origin.

    Example::

        >>> from qwalk_bolts.graphs import build_named_graph
        >>> k2, k1 = eigendecompose(build_named_graph("complete", [2]).adjacency()), eigendecompose([[0.0]])
        >>> [round(x, 6) for x in corona_eigenvalues(k2, [k1], k=0, m=1).as_multiset()]
        [1.618034, 0.618034, -0.618034, -1.618034]
    """
    if m < 1 or k < 0:
        raise PreconditionError(f"need m >= 1 and k >= 0, got m={m}, k={k}")
    r, n, lambdas, mults = base_parameters(base)
    satellites = expand_satellites(sat_spectra, n)
    check_satellite_spectra(satellites, k, m)

    pooled: List[Tuple[float, int]] = []
    for s in satellites:
        pooled.extend(zip(s.values(), s.multiplicities))
    pooled.sort()
    scale = max([1.0] + [abs(v) for v, _ in pooled])
    tol = 1e-9 * scale if tol is None else tol

    mu_branch = []
    values = torch.tensor([v for v, _ in pooled], dtype=torch.float64)
    for idx in reversed(cluster_eigenvalues(values, tol)):
        mu = float(values[idx].mean())
        total = sum(pooled[i][1] for i in idx)
        if abs(mu - k) < tol:
            if total < n:
                raise AssertionError(f"each satellite contributes k={k} at least once, found {total} < {n}")
            mu_branch.append(CoronaEigenvalue(float(k), total - n, "a", float(k)))
        else:
            mu_branch.append(CoronaEigenvalue(mu, total, "b", mu))

    lambda_pm = []
    for lam, s in zip(lambdas[1:], mults[1:]):
        big = math.sqrt((lam - k) ** 2 + 4 * m)
        lambda_pm.append(EigenvaluePair(lam, (lam + k + big) / 2, (lam + k - big) / 2, big, s))
    big_r = math.sqrt((r - k) ** 2 + 4 * m * (n - 1) ** 2)
    r_pm = EigenvaluePair(float(r), (r + k + big_r) / 2, (r + k - big_r) / 2, big_r, 1)
    return CoronaEigenvalueSet(k=k, m=m, n=n, r=r, mu_branch=tuple(mu_branch), lambda_pm=tuple(lambda_pm), r_pm=r_pm)


def spectral_inputs(base: Graph, satellites: Sequence[Graph]) -> Tuple[Spectrum, List[Spectrum], int, int]:
    """Validate the closed-form hypotheses on graphs and decompose the factors.

    Returns:
        base spectrum, one spectrum per satellite, satellite degree ``k`` and order ``m``
    """
    check_base(base)
    if len(satellites) != base.n:
        raise PreconditionError(f"expected {base.n} satellites, got {len(satellites)}")
    k, m = satellite_parameters(satellites)
    cache: Dict[Tuple[int, frozenset], Spectrum] = {}
    spectra = []
    for h in satellites:
        key = (h.n, h.edges)
        if key not in cache:
            cache[key] = eigendecompose(h.adjacency())
        spectra.append(cache[key])
    return eigendecompose(base.adjacency()), spectra, k, m
