from qwalk_bolts.spectral.decomposition import (  # noqa: F401
    Spectrum,
    cluster_eigenvalues,
    eigendecompose,
    merge_spectral_terms,
)
from qwalk_bolts.spectral.walks import (  # noqa: F401
    AmplitudeCurve,
    Cospectrality,
    eigenvalue_support,
    fidelity_scan,
    scan_amplitudes,
    strongly_cospectral,
    transition_entries,
    transition_entry,
    transition_matrix,
)

__all__ = [
    "AmplitudeCurve",
    "Cospectrality",
    "Spectrum",
    "cluster_eigenvalues",
    "eigendecompose",
    "eigenvalue_support",
    "fidelity_scan",
    "merge_spectral_terms",
    "scan_amplitudes",
    "strongly_cospectral",
    "transition_entries",
    "transition_entry",
    "transition_matrix",
]
