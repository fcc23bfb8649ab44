import math
from typing import Sequence

import torch
from torch import Tensor

from qwalk_bolts.closed_form.base_data import BaseSpectralData


def corona_transfer_entries(base: BaseSpectralData, k: int, m: int, times: Sequence[float], u: int, v: int) -> Tensor:
    """``H(t)_{(u,0),(v,0)}`` of the corona for every ``t`` in ``times``, from base spectral data only.

    Each base eigenvalue ``lambda`` contributes
    ``exp(-it(lambda + k)/2) (cos(Lambda t/2) - i (lambda - k)/Lambda sin(Lambda t/2)) e_u^T E_lambda e_v``
    with ``Lambda = sqrt((lambda - k)**2 + 4m)``, except that the degree ``r`` uses
    ``Lambda_r = sqrt((r - k)**2 + 4m(n - 1)**2)``.
    """
    if m < 1:
        raise ValueError(f"satellite order must be positive, got {m}")
    entries = torch.tensor(base.entries(u, v), dtype=torch.float64)
    lam = torch.tensor(base.eigenvalues, dtype=torch.float64)
    big = torch.sqrt((lam - k) ** 2 + 4 * m)
    big[0] = math.sqrt((base.r - k) ** 2 + 4 * m * (base.n - 1) ** 2)
    lam[0] = float(base.r)

    t = torch.as_tensor(times, dtype=torch.float64).reshape(-1, 1)
    phase = torch.polar(torch.ones_like(t * lam), -t * (lam + k) / 2)
    half = big * t / 2
    rotation = torch.complex(torch.cos(half), -((lam - k) / big) * torch.sin(half))
    return (phase * rotation) @ entries.to(torch.complex128)


def corona_transfer_entry(base: BaseSpectralData, k: int, m: int, t: float, u: int, v: int) -> complex:
    """Transition amplitude between the base copies ``(u, 0)`` and ``(v, 0)`` at time ``t``."""
    return complex(corona_transfer_entries(base, k, m, [float(t)], u, v)[0].item())
