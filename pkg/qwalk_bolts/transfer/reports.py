"""Verdicts returned by the transfer decision procedures.

Every report carries a ``criterion`` naming the result applied and an ``evidence`` mapping with the certifying or
offending numbers, so a verdict can be audited without rerunning the procedure.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from qwalk_bolts.number_theory.kronecker import KroneckerWitness


class Verdict(str, Enum):
    PERIODIC = "periodic"
    NOT_PERIODIC = "not_periodic"
    INCONCLUSIVE = "inconclusive"


class PgstRoute(str, Enum):
    NONZERO_SUPPORT = "pgst-nonzero-support"
    ZERO_SUPPORT = "pgst-zero-support"
    NO_APPLICABLE_THEOREM = "no-applicable-theorem"


@dataclass(frozen=True)
class PeriodicityReport:
    vertex: Any
    verdict: Verdict
    criterion: str
    evidence: Dict[str, Any] = field(default_factory=dict)

    @property
    def periodic(self) -> bool:
        return self.verdict is Verdict.PERIODIC

    def to_dict(self) -> Dict[str, Any]:
        vertex = self.vertex if isinstance(self.vertex, (int, type(None))) else str(self.vertex)
        return {"vertex": vertex, "verdict": self.verdict.value, "criterion": self.criterion, "evidence": self.evidence}


@dataclass(frozen=True)
class BoundCheck:
    """Degree bound ``m >= |lambda - k| + 1`` on every supported base eigenvalue and ``m(n - 1)**2 >= |r - k| + 1``.

    A failed check proves the base copy is not periodic.
    """

    passed: bool
    violated: Optional[str] = None
    eigenvalue: Optional[float] = None
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    criterion: str = "corona-degree-bound"

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> Dict[str, Any]:
        return {
            "criterion": self.criterion,
            "passed": self.passed,
            "violated": self.violated,
            "eigenvalue": self.eigenvalue,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass(frozen=True)
class GapResult:
    """Outcome of the gap test; when ``fired`` every corona vertex over the base vertex is not periodic."""

    fired: bool
    criterion: Optional[str] = None
    witness: Dict[str, Any] = field(default_factory=dict)
    note: str = ""

    def __bool__(self) -> bool:
        return self.fired

    def to_dict(self) -> Dict[str, Any]:
        return {"fired": self.fired, "criterion": self.criterion, "witness": self.witness, "note": self.note}


@dataclass(frozen=True)
class NoPstVerdict:
    """No-PST verdict for a corona with complete satellites; ``vertices`` lists the per base vertex evidence."""

    holds: bool
    m: int
    vertices: Tuple[Dict[str, Any], ...]
    criterion: str = "complete-satellites"

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> Dict[str, Any]:
        return {"criterion": self.criterion, "no_pst": self.holds, "m": self.m, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class PstCertificate:
    """Perfect state transfer certificate for ``u -> v``.

    ``signs`` and ``b`` are keyed by the supported eigenvalues. When ``holds`` is false ``failed_condition`` names the
    first condition that failed; the remaining fields hold whatever was computed before it.
    """

    u: int
    v: int
    holds: bool
    signs: Dict[float, int] = field(default_factory=dict)
    a: Optional[int] = None
    delta: Optional[int] = None
    b: Dict[float, int] = field(default_factory=dict)
    g: Optional[int] = None
    t0: Optional[float] = None
    fidelity: Optional[float] = None
    failed_condition: Optional[str] = None
    evidence: Dict[str, Any] = field(default_factory=dict)
    criterion: str = "pst-characterization"

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> Dict[str, Any]:
        return {
            "criterion": self.criterion,
            "u": self.u,
            "v": self.v,
            "holds": self.holds,
            "signs": [{"eigenvalue": lam, "sign": sign} for lam, sign in self.signs.items()],
            "a": self.a,
            "delta": self.delta,
            "b": [{"eigenvalue": lam, "b": b} for lam, b in self.b.items()],
            "g": self.g,
            "t0": self.t0,
            "fidelity": self.fidelity,
            "failed_condition": self.failed_condition,
            "evidence": self.evidence,
        }


@dataclass(frozen=True)
class PgstCheck:
    name: str
    passed: bool
    detail: Any = None

    def to_dict(self) -> Dict[str, Any]:
        return {"check": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class PgstChecks:
    """Named precondition checks and the construction they route to."""

    u: int
    v: int
    g: int
    route: PgstRoute
    checks: Tuple[PgstCheck, ...]

    @property
    def ok(self) -> bool:
        return self.route is not PgstRoute.NO_APPLICABLE_THEOREM and all(c.passed for c in self.checks)

    def failed(self) -> Tuple[str, ...]:
        return tuple(c.name for c in self.checks if not c.passed)

    def __getitem__(self, name: str) -> PgstCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "criterion": self.route.value,
            "u": self.u,
            "v": self.v,
            "g": self.g,
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks],
        }


@dataclass(frozen=True)
class PgstWitness:
    """Witness time ``T`` with ``|H(T)_{(u,0),(v,0)}| >= 1 - eps`` on the corona with ``K_1`` satellites.

    ``achieved_fidelity`` is recomputed from the closed-form transfer entry at ``T``; ``best_fidelity`` is the best
    value over every candidate tried, and is all a caller gets when ``found`` is false.
    """

    u: int
    v: int
    preconditions: PgstChecks
    eps: float
    found: bool
    l: Optional[int] = None  # noqa: E741
    T: Optional[float] = None
    achieved_fidelity: Optional[float] = None
    best_fidelity: float = 0.0
    targets: Tuple[Dict[str, Any], ...] = ()
    kronecker: Optional[KroneckerWitness] = None
    phase_check: Optional[bool] = None
    max_phase_deviation: Optional[float] = None
    l_max_used: int = 0

    def __bool__(self) -> bool:
        return self.found

    def to_dict(self) -> Dict[str, Any]:
        return {
            "criterion": self.preconditions.route.value,
            "u": self.u,
            "v": self.v,
            "eps": self.eps,
            "found": self.found,
            "l": self.l,
            "T": self.T,
            "T_over_pi": None if self.T is None else self._t_over_pi(),
            "achieved_fidelity": self.achieved_fidelity,
            "best_fidelity": self.best_fidelity,
            "targets": list(self.targets),
            "kronecker": None if self.kronecker is None else self.kronecker.to_dict(),
            "phase_check": self.phase_check,
            "max_phase_deviation": self.max_phase_deviation,
            "l_max_used": self.l_max_used,
            "preconditions": self.preconditions.to_dict(),
        }

    def _t_over_pi(self) -> str:
        assert self.l is not None
        g = self.preconditions.g
        if self.preconditions.route is PgstRoute.ZERO_SUPPORT:
            return f"{4 * self.l + 1}"
        return f"4*{self.l}+2/{g}"
