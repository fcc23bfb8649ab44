"""Root package crossroad."""

import os

from qwalk_bolts.__about__ import *  # noqa: F401, F403

_PACKAGE_ROOT = os.path.dirname(__file__)
_PROJECT_ROOT = os.path.dirname(_PACKAGE_ROOT)

from qwalk_bolts import (  # noqa: E402
    closed_form,
    corona,
    graphs,
    number_theory,
    spectral,
    transfer,
    utils,
)

__all__ = [
    "closed_form",
    "corona",
    "graphs",
    "number_theory",
    "spectral",
    "transfer",
    "utils",
]
