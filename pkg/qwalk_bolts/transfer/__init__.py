from qwalk_bolts.transfer.corona_criteria import (  # noqa: F401
    corona_base_periodicity,
    gap_non_periodicity,
    necessary_bound_check,
    no_pst_complete_satellites,
    radical_gap_membership,
)
from qwalk_bolts.transfer.periodicity import (  # noqa: F401
    CoronaSurvey,
    ReturnProbe,
    corona_vertex_survey,
    is_periodic_vertex,
    return_probe,
)
from qwalk_bolts.transfer.pgst import pgst_preconditions, pgst_witness_time  # noqa: F401
from qwalk_bolts.transfer.pst import certify_pst  # noqa: F401
from qwalk_bolts.transfer.reports import (  # noqa: F401
    BoundCheck,
    GapResult,
    NoPstVerdict,
    PeriodicityReport,
    PgstCheck,
    PgstChecks,
    PgstRoute,
    PgstWitness,
    PstCertificate,
    Verdict,
)

__all__ = [
    "BoundCheck",
    "CoronaSurvey",
    "GapResult",
    "NoPstVerdict",
    "PeriodicityReport",
    "PgstCheck",
    "PgstChecks",
    "PgstRoute",
    "PgstWitness",
    "PstCertificate",
    "ReturnProbe",
    "Verdict",
    "certify_pst",
    "corona_base_periodicity",
    "corona_vertex_survey",
    "gap_non_periodicity",
    "is_periodic_vertex",
    "necessary_bound_check",
    "no_pst_complete_satellites",
    "pgst_preconditions",
    "pgst_witness_time",
    "radical_gap_membership",
    "return_probe",
]
