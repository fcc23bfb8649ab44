"""Bounded search for simultaneous Diophantine approximations ``|l * lambda_k - alpha_k - q_k| < eps``.

Kronecker's theorem guarantees a solution whenever ``1, lambda_1, ..., lambda_m`` are linearly independent over the
rationals, but gives no bound on ``l``; the scan here is exhaustive up to ``l_max`` and reports ``None`` beyond it.
"""
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

import torch


@dataclass(frozen=True)
class KroneckerWitness:
    l: int  # noqa: E741
    q: Tuple[int, ...]
    errors: Tuple[float, ...]
    eps: float

    @property
    def max_error(self) -> float:
        return max(self.errors)

    def to_dict(self) -> Dict[str, Any]:
        return {"l": self.l, "q": list(self.q), "errors": list(self.errors), "eps": self.eps}


def _exact_check(
    multiplier: int, lambdas: Sequence[float], alphas: Sequence[float], eps: float
) -> Optional[KroneckerWitness]:
    q = tuple(int(round(multiplier * lam - alpha)) for lam, alpha in zip(lambdas, alphas))
    errors = tuple(abs(multiplier * lam - alpha - qk) for lam, alpha, qk in zip(lambdas, alphas, q))
    if max(errors) < eps:
        return KroneckerWitness(l=multiplier, q=q, errors=errors, eps=eps)
    return None


def kronecker_witness(
    lambdas: Sequence[float],
    alphas: Sequence[float],
    eps: float,
    l_max: int,
    l_min: int = 1,
    chunk_size: int = 1 << 15,
) -> Optional[KroneckerWitness]:
    """Smallest ``l`` in ``[l_min, l_max]`` with every ``|l * lambdas[k] - alphas[k] - q_k| < eps``.

    Candidates are screened in vectorised chunks and confirmed in plain float arithmetic, so the returned witness
    satisfies the inequality exactly as stated.

    >>> kronecker_witness([0.5], [0.25], eps=0.1, l_max=1000) is None
    True
    """
    if len(lambdas) != len(alphas):
        raise ValueError(f"got {len(lambdas)} lambdas but {len(alphas)} alphas")
    if not lambdas:
        raise ValueError("need at least one target")
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    if l_min < 1 or l_max < l_min:
        raise ValueError(f"need 1 <= l_min <= l_max, got [{l_min}, {l_max}]")

    lam = torch.tensor([float(x) for x in lambdas], dtype=torch.float64)
    alpha = torch.tensor([float(x) for x in alphas], dtype=torch.float64)
    for start in range(l_min, l_max + 1, chunk_size):
        ls = torch.arange(start, min(start + chunk_size, l_max + 1), dtype=torch.float64)
        x = ls[:, None] * lam - alpha
        # screen with a small margin; the exact check decides
        worst = (x - torch.round(x)).abs().max(dim=1).values
        for idx in torch.nonzero(worst < eps * (1 + 1e-9) + 1e-12).flatten().tolist():
            witness = _exact_check(int(ls[idx]), lambdas, alphas, eps)
            if witness is not None:
                return witness
    return None
