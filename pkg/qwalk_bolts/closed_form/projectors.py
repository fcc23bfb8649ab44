"""Corona eigenprojectors assembled from the eigenprojectors of the factors.

In the flat corona order, with ``theta = lambda_+- - k``:

- satellite eigenvalues ``mu``: ``E_mu(H_l)`` (minus ``J_m / m`` when ``mu = k``) on the diagonal block of ``H_l``
- base eigenvalues ``lambda != r``: ``theta**2 / (theta**2 + m)`` times
  ``[[E, c E (x) j^T], [c E (x) j, c**2 E (x) J_m]]`` with ``c = -1 / theta``
- the degree ``r``: the same block form with ``E = J_n / n``, ``c = (n - 1) / theta`` and
  prefactor ``theta**2 / (theta**2 + m(n - 1)**2)``
"""
from typing import List, Optional, Sequence, Tuple

import torch
from torch import Tensor

from qwalk_bolts.closed_form.eigenvalues import base_parameters, check_satellite_spectra, expand_satellites
from qwalk_bolts.config import NumericConfig
from qwalk_bolts.spectral.decomposition import Spectrum, merge_spectral_terms
from qwalk_bolts.utils.exceptions import PreconditionError


def _base_block(e: Tensor, m: int, c: float, weight: float) -> Tensor:
    ones = torch.ones(1, m, dtype=e.dtype)
    side = c * torch.kron(e, ones)
    satellite = c * c * torch.kron(e, torch.ones(m, m, dtype=e.dtype))
    top = torch.cat([e, side], dim=1)
    bottom = torch.cat([side.T, satellite], dim=1)
    return weight * torch.cat([top, bottom], dim=0)


def corona_eigenprojectors(
    base: Spectrum,
    sat_spectra: Sequence[Spectrum],
    k: int,
    m: int,
    group_tol: Optional[float] = None,
    config: Optional[NumericConfig] = None,
) -> Spectrum:
    """Spectrum of the corona built from the full base and satellite spectra.

    Eigenvalues from different branches that coincide within ``group_tol`` (default ``1e-9 * max(1, |value|)``)
    are merged into one eigenspace by summing their projectors. Satellite eigenvalues within ``config.recognition_tol``
    of ``k`` belong to the all-ones eigenspace.
    """
    if not isinstance(base, Spectrum):
        raise PreconditionError("eigenprojectors need the full base spectrum, not only projector entries")
    recognition = (config or NumericConfig.from_env()).recognition_tol
    r, n, lambdas, _ = base_parameters(base, recognition)
    satellites = expand_satellites(sat_spectra, n)
    check_satellite_spectra(satellites, k, m, recognition)
    size = n * (m + 1)

    terms: List[Tuple[float, Tensor]] = []
    uniform = torch.full((m, m), 1.0 / m, dtype=torch.float64)
    for i, s in enumerate(satellites):
        start = n + i * m
        for mu, e in zip(s.values(), s.projectors):
            if abs(mu - k) < recognition:
                mu, e = float(k), e - uniform
            embedded = torch.zeros(size, size, dtype=torch.float64)
            embedded[start : start + m, start : start + m] = e
            terms.append((mu, embedded))

    for lam, e in zip(lambdas[1:], base.projectors[1:]):
        for sign in (1.0, -1.0):
            value = (lam + k + sign * ((lam - k) ** 2 + 4 * m) ** 0.5) / 2
            theta = value - k
            terms.append((value, _base_block(e, m, -1.0 / theta, theta ** 2 / (theta ** 2 + m))))

    spread = m * (n - 1) ** 2
    e_r = torch.full((n, n), 1.0 / n, dtype=torch.float64)
    for sign in (1.0, -1.0):
        value = (r + k + sign * ((r - k) ** 2 + 4 * spread) ** 0.5) / 2
        theta = value - k
        terms.append((value, _base_block(e_r, m, (n - 1) / theta, theta ** 2 / (theta ** 2 + spread))))

    scale = max(1.0, max(abs(value) for value, _ in terms))
    tol = 1e-9 * scale if group_tol is None else group_tol
    return merge_spectral_terms(terms, tol)
