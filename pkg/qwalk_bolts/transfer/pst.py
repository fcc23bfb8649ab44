import math
from functools import reduce
from typing import Any, Dict, Optional

from pytorch_lightning.utilities import rank_zero_info, rank_zero_warn

from qwalk_bolts.config import NumericConfig
from qwalk_bolts.number_theory.integers import recognize_integer
from qwalk_bolts.number_theory.quadratic import QuadraticKind, classify_quadratic
from qwalk_bolts.spectral.decomposition import Spectrum
from qwalk_bolts.spectral.walks import eigenvalue_support, strongly_cospectral, transition_entry
from qwalk_bolts.transfer.reports import PstCertificate

#: fidelity a certified PST time must reach numerically
PST_FIDELITY_TOL = 1e-8


def certify_pst(s: Spectrum, u: int, v: int, config: Optional[NumericConfig] = None) -> PstCertificate:
    """Decide perfect state transfer between ``u`` and ``v``.

    PST holds iff ``u`` and ``v`` are strongly cospectral, the supported eigenvalues are all integers (``D = 1``) or
    all ``(a + b_l sqrt(D)) / 2``, and ``E_l e_u = +E_l e_v`` exactly when ``(rho - l) / (g sqrt(D))`` is even, where
    ``rho`` is the largest supported eigenvalue and ``g`` the gcd of every ``(rho - l) / sqrt(D)``. The minimum PST
    time is then ``pi / (g sqrt(D))``, which is confirmed numerically.

    Example::

        >>> from qwalk_bolts.spectral.decomposition import eigendecompose
        >>> cert = certify_pst(eigendecompose([[0.0, 1.0], [1.0, 0.0]]), 0, 1)
        >>> cert.holds, cert.g, round(cert.t0, 6)
        (True, 2, 1.570796)
    """
    if u == v:
        raise ValueError("PST needs two distinct vertices")
    config = config or NumericConfig.from_env()
    cospectral = strongly_cospectral(s, u, v, config.support_tol)
    signs = {float(s.eigenvalues[j]): sign for j, sign in cospectral.signs.items()}
    if not cospectral:
        evidence = cospectral.to_dict(s)
        return _refuted(u, v, "strong cospectrality", signs=signs, evidence=evidence)

    support = eigenvalue_support(s, u, config.support_tol)
    values = [float(s.eigenvalues[j]) for j in support]
    found = classify_quadratic(values, config.recognition_tol, config.delta_max)
    evidence: Dict[str, Any] = {"support": values, "classification": found.to_dict()}
    if found.kind is QuadraticKind.UNCLASSIFIABLE:
        return _refuted(u, v, "unclassifiable spectrum", signs=signs, evidence=evidence)
    delta = 1 if found.kind is QuadraticKind.ALL_INTEGER else found.delta
    a = None if found.kind is QuadraticKind.ALL_INTEGER else found.a
    b = {} if found.kind is QuadraticKind.ALL_INTEGER else dict(zip(values, found.b))

    rho = max(values)
    gaps = {lam: recognize_integer((rho - lam) / math.sqrt(delta), config.recognition_tol) for lam in values}
    partial = dict(signs=signs, a=a, delta=delta, b=b, evidence=evidence)
    evidence["gaps"] = {repr(lam): gap for lam, gap in gaps.items()}
    if any(gap is None for gap in gaps.values()):
        return _refuted(u, v, "non-integral eigenvalue gaps", **partial)
    g = reduce(math.gcd, [int(gap) for gap in gaps.values()], 0)  # type: ignore[arg-type]
    if g == 0:
        return _refuted(u, v, "single-eigenvalue support", **partial)

    for lam, gap in gaps.items():
        even = (gap // g) % 2 == 0  # type: ignore[operator]
        if (signs[lam] > 0) != even:
            evidence["parity_failure"] = {"eigenvalue": lam, "sign": signs[lam], "gap_over_g": gap // g}
            return _refuted(u, v, "sign parity", g=g, **partial)

    t0 = math.pi / (g * math.sqrt(delta))
    fidelity = abs(transition_entry(s, t0, u, v))
    if fidelity <= 1 - PST_FIDELITY_TOL:
        rank_zero_warn(f"PST {u}->{v} certified at t0={t0} but numerical fidelity is only {fidelity}")
        return _refuted(u, v, "numeric confirmation", g=g, t0=t0, fidelity=fidelity, **partial)
    rank_zero_info(f"PST {u}->{v}: holds at t0 = pi/{g * math.sqrt(delta):g}")
    return PstCertificate(u=u, v=v, holds=True, g=g, t0=t0, fidelity=fidelity, **partial)  # type: ignore[arg-type]


def _refuted(u: int, v: int, condition: str, **fields: Any) -> PstCertificate:
    rank_zero_info(f"PST {u}->{v}: fails ({condition})")
    return PstCertificate(u=u, v=v, holds=False, failed_condition=condition, **fields)
