from qwalk_bolts.closed_form.base_data import BaseSpectralData, as_base_data  # noqa: F401
from qwalk_bolts.closed_form.eigenvalues import (  # noqa: F401
    CoronaEigenvalue,
    CoronaEigenvalueSet,
    EigenvaluePair,
    corona_eigenvalues,
    spectral_inputs,
)
from qwalk_bolts.closed_form.projectors import corona_eigenprojectors  # noqa: F401
from qwalk_bolts.closed_form.transfer import corona_transfer_entries, corona_transfer_entry  # noqa: F401

__all__ = [
    "BaseSpectralData",
    "CoronaEigenvalue",
    "CoronaEigenvalueSet",
    "EigenvaluePair",
    "as_base_data",
    "corona_eigenprojectors",
    "corona_eigenvalues",
    "corona_transfer_entries",
    "corona_transfer_entry",
    "spectral_inputs",
]
