"""Pretty good state transfer between base copies of ``G`` with ``K_1`` satellites.

If ``G`` has PST from ``u`` to ``v`` at ``pi / g`` and ``r**2 + 4(n - 1)**2`` is not a perfect square, the corona has
PGST from ``(u, -)`` to ``(v, -)`` in two situations:

- ``0`` not in ``supp_G(u)``: at ``T = (4l + 2/g) pi`` once every ``cos(Lambda_l T / 2)`` is close to ``1``
- ``0`` in ``supp_G(u)`` and ``g = 2``: at ``T = (4l + 1) pi`` once every ``cos(Lambda_l T / 2)`` is close to ``-1``

Writing ``Lambda_l = s_l sqrt(c_l)`` with ``c_l`` square-free, both conditions reduce to simultaneous approximations
``l sqrt(c) - q ~ alpha_c`` over the distinct radicands, which :func:`kronecker_witness` searches for.
"""
import cmath
import math
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from pytorch_lightning.utilities import rank_zero_info, rank_zero_warn

from qwalk_bolts.closed_form.base_data import BaseSpectralData
from qwalk_bolts.closed_form.transfer import corona_transfer_entry
from qwalk_bolts.config import NumericConfig
from qwalk_bolts.number_theory.integers import is_perfect_square, recognize_integer, square_free_part
from qwalk_bolts.number_theory.kronecker import KroneckerWitness, kronecker_witness
from qwalk_bolts.transfer.reports import PgstCheck, PgstChecks, PgstRoute, PgstWitness
from qwalk_bolts.utils.exceptions import PreconditionError


def _support(base: BaseSpectralData, u: int, v: int, tol: float) -> Optional[List[int]]:
    if base.has_pair(u, u):
        return base.support(u, tol)
    if base.has_pair(u, v):
        return [j for j, x in enumerate(base.entries(u, v)) if abs(x) > tol]
    return None


def _base_pst_check(base: BaseSpectralData, u: int, v: int, g: int) -> PgstCheck:
    name = "pst-at-pi-over-g"
    if not base.has_pair(u, v):
        return PgstCheck(name, True, f"asserted at pi/{g}")
    amplitude = sum(
        cmath.exp(-1j * math.pi * lam / g) * x for lam, x in zip(base.eigenvalues, base.entries(u, v))
    )
    fidelity = abs(amplitude)
    return PgstCheck(name, fidelity > 1 - 1e-8, {"fidelity": fidelity})


def pgst_preconditions(
    base: BaseSpectralData,
    u: int,
    v: int,
    g: int,
    zero_in_supp: Optional[bool] = None,
    config: Optional[NumericConfig] = None,
) -> PgstChecks:
    """Named checks for the PGST constructions and the route they select.

    Args:
        base: spectral data of ``G``; entries of ``(u, u)`` or ``(u, v)`` give the support of ``u``
        u: source base vertex
        v: target base vertex
        g: ``G`` has PST from ``u`` to ``v`` at ``pi / g``; checked when the ``(u, v)`` entries are present
        zero_in_supp: overrides the support test for data without projector entries
        config: tolerances

    Example::

        >>> data = BaseSpectralData(1, 2, (1.0, -1.0), (1, 1), {(0, 1): {0: 0.5, 1: -0.5}})
        >>> pgst_preconditions(data, 0, 1, g=2).route.value
        'pgst-nonzero-support'
    """
    if g < 1:
        raise ValueError(f"g must be a positive integer, got {g}")
    config = config or NumericConfig.from_env()
    support = _support(base, u, v, config.support_tol)
    indices = range(len(base.eigenvalues)) if support is None else support
    values = [base.eigenvalues[j] for j in indices]

    if zero_in_supp is None:
        if support is None:
            raise PreconditionError(f"no projector entries for ({u}, {v}); pass zero_in_supp explicitly")
        zero_in_supp = any(abs(lam) < config.recognition_tol for lam in values)

    non_integer = [lam for lam in values if recognize_integer(lam, config.recognition_tol) is None]
    perron = base.r ** 2 + 4 * (base.n - 1) ** 2
    checks = [
        PgstCheck("integer-spectrum", not non_integer, {"non_integer": non_integer}),
        _base_pst_check(base, u, v, g),
        PgstCheck("zero-in-support", True, zero_in_supp),
        PgstCheck("perron-radicand-not-square", not is_perfect_square(perron), {"radicand": perron}),
    ]
    if zero_in_supp:
        checks.append(PgstCheck("zero-support-needs-g-2", g == 2, {"g": g}))
        route = PgstRoute.ZERO_SUPPORT if g == 2 else PgstRoute.NO_APPLICABLE_THEOREM
    else:
        route = PgstRoute.NONZERO_SUPPORT
    result = PgstChecks(u=u, v=v, g=g, route=route, checks=tuple(checks))
    rank_zero_info(f"PGST ({u}, -) -> ({v}, -): route {route.value}, preconditions {'ok' if result.ok else 'failed'}")
    return result


def _radicand(base: BaseSpectralData, j: int, lam: int) -> int:
    """``Lambda**2`` at ``k = 0, m = 1``."""
    if j == 0:
        return base.r ** 2 + 4 * (base.n - 1) ** 2
    return lam ** 2 + 4


def _zero_route_offset(c: int, orders: List[int]) -> Fraction:
    """Smallest residue ``(2j + 1) / (2s)`` mod 1 admissible for every ``s`` sharing the radicand ``c``."""
    admissible = None
    for s in orders:
        residues = {Fraction(2 * j + 1, 2 * s) for j in range(s)}
        admissible = residues if admissible is None else admissible & residues
    if not admissible:
        raise PreconditionError(f"no common phase offset for radicand {c} with orders {orders}", [f"c={c}"])
    return min(admissible)


def _targets(
    base: BaseSpectralData, support: List[int], route: PgstRoute, g: int, tol: float
) -> List[Dict[str, Any]]:
    groups: Dict[int, List[Tuple[float, int, int]]] = {}
    for j in support:
        lam = recognize_integer(base.eigenvalues[j], tol)
        assert lam is not None
        if route is PgstRoute.ZERO_SUPPORT and lam == 0:
            continue
        radicand = _radicand(base, j, lam)
        decomposition = square_free_part(radicand)
        groups.setdefault(decomposition.c, []).append((base.eigenvalues[j], decomposition.s, radicand))

    targets = []
    for c, members in sorted(groups.items()):
        root = math.sqrt(c)
        if route is PgstRoute.ZERO_SUPPORT:
            offset = _zero_route_offset(c, [s for _, s, _ in members])
            alpha = -root / 4 + float(offset)
        else:
            alpha = -root / (2 * g)
        targets.append(
            {
                "c": c,
                "sqrt_c": root,
                "alpha": alpha,
                "eigenvalues": [lam for lam, _, _ in members],
                "s": [s for _, s, _ in members],
                "radicands": [radicand for _, _, radicand in members],
            }
        )
    return targets


def _witness_time(route: PgstRoute, g: int, multiplier: int) -> float:
    if route is PgstRoute.ZERO_SUPPORT:
        return (4 * multiplier + 1) * math.pi
    return (4 * multiplier + 2 / g) * math.pi


def _phase_deviation(targets: List[Dict[str, Any]], route: PgstRoute, time: float) -> float:
    """Largest ``|cos(Lambda T / 2) -+ 1|`` over the supported eigenvalues."""
    goal = -1.0 if route is PgstRoute.ZERO_SUPPORT else 1.0
    radicands = [radicand for target in targets for radicand in target["radicands"]]
    if route is PgstRoute.ZERO_SUPPORT:
        radicands.append(4)
    return max(abs(math.cos(math.sqrt(radicand) * time / 2) - goal) for radicand in radicands)


def pgst_witness_time(
    base: BaseSpectralData,
    u: int,
    v: int,
    g: int,
    eps: float,
    l_max: Optional[int] = None,
    config: Optional[NumericConfig] = None,
    zero_in_supp: Optional[bool] = None,
) -> PgstWitness:
    """Find ``T`` with ``|H(T)_{(u,-),(v,-)}| >= 1 - eps`` on ``G`` with ``K_1`` satellites.

    The Kronecker tolerance is ``arccos(1 - eps) / (2 pi max s)``, which forces every phase within ``eps`` of its goal.
    Each candidate is confirmed by the closed-form transfer entry; a shortfall resumes the scan at the next ``l``.
    An exhausted scan is retried with a ten times larger bound up to ``l_cap``, after which the witness reports
    ``found=False`` and the best fidelity seen.

    Raises:
        PreconditionError: when :func:`pgst_preconditions` fails or no route applies
    """
    if not 0 < eps < 1:
        raise ValueError(f"eps must lie in (0, 1), got {eps}")
    config = config or NumericConfig.from_env()
    checks = pgst_preconditions(base, u, v, g, zero_in_supp, config)
    if not checks.ok:
        offending = list(checks.failed()) or [checks.route.value]
        raise PreconditionError(f"PGST preconditions fail for ({u}, {v}), route {checks.route.value}", offending)
    base.entries(u, v)  # raises SpectralDataError when the pair is missing
    support = _support(base, u, v, config.support_tol)
    assert support is not None
    targets = _targets(base, support, checks.route, g, config.recognition_tol)
    roots = [target["sqrt_c"] for target in targets]
    alphas = [target["alpha"] for target in targets]
    s_max = max(s for target in targets for s in target["s"])
    tol = math.acos(1 - eps) / (2 * math.pi * s_max)

    limit = l_max or config.l_max
    cap = max(config.l_cap, limit)
    start, best = 1, 0.0
    while True:
        witness: Optional[KroneckerWitness] = None
        if start <= limit:
            witness = kronecker_witness(roots, alphas, tol, limit, l_min=start)
        if witness is None:
            if limit >= cap:
                rank_zero_warn(f"no PGST witness up to l = {limit}; best fidelity {best:.6f}")
                return PgstWitness(
                    u=u,
                    v=v,
                    preconditions=checks,
                    eps=eps,
                    found=False,
                    best_fidelity=best,
                    targets=tuple(targets),
                    l_max_used=limit,
                )
            start, limit = limit + 1, min(10 * limit, cap)
            rank_zero_warn(f"Kronecker scan exhausted, retrying with l_max = {limit}")
            continue

        t = _witness_time(checks.route, g, witness.l)
        fidelity = abs(corona_transfer_entry(base, 0, 1, t, u, v))
        best = max(best, fidelity)
        if fidelity >= 1 - eps:
            break
        start = witness.l + 1

    deviation = _phase_deviation(targets, checks.route, t)
    phase_ok = deviation <= eps + 1e-9
    if not phase_ok:
        rank_zero_warn(f"phase check failed at T = {t}: max deviation {deviation:.3e} exceeds eps = {eps}")
    rank_zero_info(f"PGST witness l = {witness.l}, T = {t:.6f}, fidelity = {fidelity:.6f}")
    return PgstWitness(
        u=u,
        v=v,
        preconditions=checks,
        eps=eps,
        found=True,
        l=witness.l,
        T=t,
        achieved_fidelity=fidelity,
        best_fidelity=best,
        targets=tuple(targets),
        kronecker=witness,
        phase_check=phase_ok,
        max_phase_deviation=deviation,
        l_max_used=limit,
    )
