"""Periodicity and PST criteria for the base copies ``(v, -)`` of a vertex complemented corona.

Everything here works from the eigenvalues of ``supp_G(v)`` of an r-regular base on ``n`` vertices and the degree
``k`` and order ``m`` of the satellites, without building the corona. The support of ``(v, -)`` is contained in the
support of every ``(v, w)``, so a base copy that is not periodic makes the whole fibre not periodic.
"""
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from pytorch_lightning.utilities import rank_zero_info, rank_zero_warn
from sympy import divisors

from qwalk_bolts.closed_form.eigenvalues import base_parameters
from qwalk_bolts.config import NumericConfig
from qwalk_bolts.corona.construction import check_base
from qwalk_bolts.graphs.graph import Graph
from qwalk_bolts.number_theory.integers import is_perfect_square, recognize_integer, square_free_part
from qwalk_bolts.number_theory.quadratic import individual_quadratic
from qwalk_bolts.spectral.decomposition import Spectrum, eigendecompose
from qwalk_bolts.spectral.walks import eigenvalue_support
from qwalk_bolts.transfer.reports import BoundCheck, GapResult, NoPstVerdict, PeriodicityReport, Verdict

#: radicals below 3 of the form sqrt(D) or 2 sqrt(D), D square-free, as ``x**2 -> (multiple, D)``
RADICALS_BELOW_THREE: Dict[int, Tuple[int, int]] = {
    1: (1, 1),
    2: (1, 2),
    3: (1, 3),
    4: (2, 1),
    5: (1, 5),
    6: (1, 6),
    7: (1, 7),
    8: (2, 2),
}


def _without_degree(support: Sequence[float], r: int, tol: float) -> List[float]:
    return [float(lam) for lam in support if abs(lam - r) >= tol]


def _square_multiple(value: int, delta: int) -> bool:
    """Whether ``sqrt(value)`` is an integer multiple of ``sqrt(delta)``."""
    return value % delta == 0 and is_perfect_square(value // delta)


def corona_base_periodicity(
    support: Sequence[float],
    r: int,
    k: int,
    m: int,
    n: int,
    config: Optional[NumericConfig] = None,
    vertex: Any = None,
) -> PeriodicityReport:
    """Periodicity of the base copy ``(v, -)`` from ``supp_G(v)``.

    For ``r != k`` the vertex is periodic iff every ``lambda - k``, ``sqrt((lambda - k)**2 + 4m)`` and
    ``sqrt((r - k)**2 + 4m(n - 1)**2)`` is an integer. For ``r = k`` it is periodic iff all of ``lambda - k``,
    ``sqrt((lambda - k)**2 + 4m)`` and ``2(n - 1) sqrt(m)`` are integer multiples of one ``sqrt(D)``, D square-free;
    such a D divides ``m``, so only the square-free divisors of ``m`` are searched, with an exhaustive scan up to
    ``divisor_fallback_max`` as a cross-check.

    Args:
        support: eigenvalues of ``supp_G(v)``; the degree ``r`` may or may not be listed
        r: base degree
        k: satellite degree
        m: satellite order
        n: base order
        config: tolerances and bounds
        vertex: reported vertex label

    Example::

        >>> corona_base_periodicity([1.0, -1.0], r=1, k=0, m=1, n=2).verdict.value
        'not_periodic'
    """
    config = config or NumericConfig.from_env()
    tol = config.recognition_tol
    values = _without_degree(support, r, tol)
    recognized = {lam: individual_quadratic(lam, tol, delta_max=config.delta_max) for lam in values}
    unknown = [lam for lam, q in recognized.items() if q is None]
    if unknown:
        return _report(
            vertex, Verdict.INCONCLUSIVE, "unclassifiable-spectrum", {"unrecognized": unknown, "r": r, "k": k}
        )

    if r != k:
        report = _integrality(values, recognized, r, k, m, n, tol)
    else:
        report = _radical_multiples(values, k, m, n, config)
    return _report(vertex, report[0], report[1], report[2])


def _report(vertex: Any, verdict: Verdict, criterion: str, evidence: Dict[str, Any]) -> PeriodicityReport:
    label = "base copy" if vertex is None else f"base copy {vertex}"
    rank_zero_info(f"{label}: {verdict.value} ({criterion})")
    return PeriodicityReport(vertex=vertex, verdict=verdict, criterion=criterion, evidence=evidence)


def _integrality(
    values: Sequence[float], recognized: Dict[float, Any], r: int, k: int, m: int, n: int, tol: float
) -> Tuple[Verdict, str, Dict[str, Any]]:
    criterion = "corona-integrality"
    perron = (r - k) ** 2 + 4 * m * (n - 1) ** 2
    evidence: Dict[str, Any] = {"case": "r != k", "perron_radicand": perron}
    for lam in values:
        if not recognized[lam].is_integer:
            evidence.update(eigenvalue=lam, failed="lambda - k is an integer")
            return Verdict.NOT_PERIODIC, criterion, evidence
        shift = recognize_integer(lam, tol) - k  # type: ignore[operator]
        radicand = shift ** 2 + 4 * m
        if not is_perfect_square(radicand):
            evidence.update(eigenvalue=lam, radicand=radicand, failed="(lambda - k)**2 + 4m is a perfect square")
            return Verdict.NOT_PERIODIC, criterion, evidence
    if not is_perfect_square(perron):
        evidence["failed"] = "(r - k)**2 + 4m(n - 1)**2 is a perfect square"
        return Verdict.NOT_PERIODIC, criterion, evidence
    return Verdict.PERIODIC, criterion, evidence


def _radical_multiples(
    values: Sequence[float], k: int, m: int, n: int, config: NumericConfig
) -> Tuple[Verdict, str, Dict[str, Any]]:
    criterion = "corona-radical-multiples"
    evidence: Dict[str, Any] = {"case": "r = k"}
    quantities = [4 * m * (n - 1) ** 2]
    for lam in values:
        square = recognize_integer((lam - k) ** 2, config.recognition_tol)
        if square is None:
            evidence.update(eigenvalue=lam, failed="(lambda - k)**2 is an integer")
            return Verdict.NOT_PERIODIC, criterion, evidence
        quantities.extend([square, square + 4 * m])
    evidence["squares"] = quantities

    candidates = [d for d in divisors(m) if square_free_part(d).c == d]
    delta = next((d for d in candidates if all(_square_multiple(q, d) for q in quantities)), None)
    fallback = next(
        (
            d
            for d in range(1, config.divisor_fallback_max + 1)
            if all(_square_multiple(q, d) for q in quantities) and square_free_part(d).c == d
        ),
        None,
    )
    if (delta is None) != (fallback is None):
        rank_zero_warn(
            f"radicand search over divisors of m={m} found {delta}, exhaustive search up to"
            f" {config.divisor_fallback_max} found {fallback}"
        )
        evidence["divisor_mismatch"] = {"divisor_search": delta, "exhaustive_search": fallback}
        delta = delta or fallback
    evidence["delta"] = delta
    if delta is None:
        evidence["failed"] = "common square-free radicand"
        return Verdict.NOT_PERIODIC, criterion, evidence
    return Verdict.PERIODIC, criterion, evidence


def necessary_bound_check(
    support: Sequence[float], r: int, k: int, m: int, n: int, tol: float = 1e-9, config: Optional[NumericConfig] = None
) -> BoundCheck:
    """Degree bounds every periodic base copy satisfies: ``m >= |lambda - k| + 1`` and ``m(n-1)**2 >= |r - k| + 1``.

    Supported eigenvalues within ``config.recognition_tol`` of ``r`` count as the degree.

    >>> necessary_bound_check([2.0, -2.0], r=2, k=1, m=2, n=4).violated
    'm >= |lambda - k| + 1'
    """
    config = config or NumericConfig.from_env()
    for lam in _without_degree(support, r, config.recognition_tol):
        rhs = abs(lam - k) + 1
        if m < rhs - tol:
            return BoundCheck(False, "m >= |lambda - k| + 1", eigenvalue=lam, lhs=float(m), rhs=rhs)
    spread = m * (n - 1) ** 2
    rhs = abs(r - k) + 1
    if spread < rhs - tol:
        return BoundCheck(False, "m(n - 1)**2 >= |r - k| + 1", eigenvalue=float(r), lhs=float(spread), rhs=float(rhs))
    return BoundCheck(True)


def no_pst_complete_satellites(
    base: Union[Graph, Spectrum], m: int, config: Optional[NumericConfig] = None
) -> NoPstVerdict:
    """No corona with satellites ``K_m`` has PST: every base vertex supports a negative eigenvalue ``lambda``, and
    ``m >= |lambda - (m - 1)| + 1 = m - lambda`` then fails.
    """
    if m < 1:
        raise ValueError(f"satellite order must be positive, got {m}")
    config = config or NumericConfig.from_env()
    if isinstance(base, Graph):
        check_base(base)
        base = eigendecompose(base.adjacency(), config.group_tol)
    r, n, _, _ = base_parameters(base, config.recognition_tol)
    k = m - 1

    vertices = []
    for v in range(n):
        support = [float(base.eigenvalues[j]) for j in eigenvalue_support(base, v, config.support_tol)]
        negative = min(support)
        check = necessary_bound_check(support, r, k, m, n, config=config)
        vertices.append(
            {"vertex": v, "negative_eigenvalue": negative if negative < 0 else None, "bound": check.to_dict()}
        )
    holds = all(not entry["bound"]["passed"] for entry in vertices)
    rank_zero_info(f"complete satellites K_{m}: no PST {'established' if holds else 'not established'}")
    return NoPstVerdict(holds=holds, m=m, vertices=tuple(vertices))


def radical_gap_membership(x: float, tol: Optional[float] = None) -> Optional[Tuple[int, int]]:
    """``(multiple, D)`` when ``x`` is ``sqrt(D)`` or ``2 sqrt(D)`` for a square-free ``D``, from the integer ``x**2``.

    >>> radical_gap_membership(2 * 2 ** 0.5), radical_gap_membership(3.0)
    ((2, 2), None)
    """
    if x <= 0:
        return None
    tol = NumericConfig.from_env().recognition_tol if tol is None else tol
    square = recognize_integer(x * x, tol)
    if square is None:
        return None
    decomposition = square_free_part(square)
    if decomposition.s in (1, 2):
        return decomposition.s, decomposition.c
    return None


def gap_non_periodicity(
    support: Sequence[float], r: int, k: int, n: int, tol: float = 1e-9, config: Optional[NumericConfig] = None
) -> GapResult:
    """Gap test: the base copy is not periodic when ``0 < |lambda - k| - |mu - k| < 3`` for supported
    ``lambda, mu != r``, or when ``0 < ||r - k| - (n - 1)|kappa - k|| < 3`` for a supported ``kappa != r``.

    >>> gap_non_periodicity([3.0, 1.0, -1.0, -3.0], r=3, k=0, n=8).witness["gap"]
    2.0
    """
    recognition = (config or NumericConfig.from_env()).recognition_tol
    values = _without_degree(support, r, recognition)
    if not values:
        return GapResult(False, note="support holds only the degree")

    for lam in values:
        for mu in values:
            gap = abs(lam - k) - abs(mu - k)
            if tol < gap < 3 - tol:
                witness = {"lambda": lam, "mu": mu, "gap": gap, "radical": _listed_radical(gap, recognition)}
                return GapResult(True, criterion="eigenvalue-gap", witness=witness)
    for kappa in values:
        gap = abs(abs(r - k) - (n - 1) * abs(kappa - k))
        if tol < gap < 3 - tol:
            witness = {"kappa": kappa, "gap": gap, "radical": _listed_radical(gap, recognition)}
            return GapResult(True, criterion="perron-gap", witness=witness)
    return GapResult(False, note="no supported gap in (0, 3)")


def _listed_radical(gap: float, tol: float) -> Optional[Tuple[int, int]]:
    square = recognize_integer(gap * gap, tol)
    return None if square is None else RADICALS_BELOW_THREE.get(square)
