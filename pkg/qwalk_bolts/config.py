"""Numeric tolerances and search bounds shared by every decision procedure.

Bounds such as the largest square-free radicand or the Kronecker scan length are not mathematical constants: the
approximation theorem behind the PGST witness is non-effective, so every bound is configuration the user can see.
"""
import os
from dataclasses import dataclass, replace
from typing import Any, Optional

#: Environment variable overriding :attr:`NumericConfig.support_tol` only; :attr:`NumericConfig.recognition_tol` keeps
#: its default.
TOLERANCE_ENV = "QWALK_TOL"


@dataclass(frozen=True)
class NumericConfig:
    """Tolerances and bounds.

    Args:
        group_tol: eigenvalue clustering tolerance; ``None`` means ``1e-9 * max(1, ||A||)``
        support_tol: threshold on ``||E e_u||`` for eigenvalue supports and strong cospectrality
        recognition_tol: distance to the nearest integer accepted when recognising floats as integers
        delta_max: largest square-free radicand searched by the quadratic classification
        divisor_fallback_max: exhaustive radicand bound cross-checking the divisor restriction when ``r = k``
        l_max: initial Kronecker scan length
        l_cap: Kronecker scan length after which the PGST witness search gives up
        probe_horizon: time horizon of the periodicity falsification probe
        probe_step: grid step of the periodicity falsification probe
        probe_threshold: ``1 - |H(t)_uu|`` below which the probe reports a near return
    """

    group_tol: Optional[float] = None
    support_tol: float = 1e-8
    recognition_tol: float = 1e-6
    delta_max: int = 10 ** 6
    divisor_fallback_max: int = 10 ** 4
    l_max: int = 10 ** 5
    l_cap: int = 10 ** 7
    probe_horizon: float = 500.0
    probe_step: float = 1e-3
    probe_threshold: float = 1e-3

    def __post_init__(self) -> None:
        if self.group_tol is not None and self.group_tol <= 0:
            raise ValueError(f"group_tol must be positive, got {self.group_tol}")
        if self.support_tol <= 0:
            raise ValueError(f"support_tol must be positive, got {self.support_tol}")
        if not 0 < self.recognition_tol < 0.5:
            raise ValueError(f"recognition_tol must lie in (0, 0.5), got {self.recognition_tol}")
        if self.l_max < 1 or self.l_cap < self.l_max:
            raise ValueError(f"Kronecker bounds need 1 <= l_max <= l_cap, got {self.l_max}, {self.l_cap}")
        if self.delta_max < 2:
            raise ValueError(f"delta_max must be at least 2, got {self.delta_max}")

    @classmethod
    def from_env(cls, **overrides: Any) -> "NumericConfig":
        """Defaults with ``QWALK_TOL`` applied to the support tolerance.

        The variable does not touch ``recognition_tol``: recognising computed eigenvalues as integers needs a looser
        bound than deciding whether a projection vanishes. Pass ``recognition_tol`` as an override instead.

        >>> NumericConfig.from_env(support_tol=1e-7).support_tol
        1e-07
        """
        config = cls()
        value = os.environ.get(TOLERANCE_ENV)
        if value:
            config = replace(config, support_tol=float(value))
        return replace(config, **overrides)


DEFAULT_CONFIG = NumericConfig()
