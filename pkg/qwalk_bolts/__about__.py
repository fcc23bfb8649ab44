__version__ = "0.1.0dev"
__author__ = "qwalk-bolts contributors"
__author_email__ = "maintainers@qwalk-bolts.dev"
__license__ = "Apache-2.0"
__copyright__ = f"Copyright (c) 2021, {__author__}"
__homepage__ = "https://github.com/qwalk-bolts/qwalk-bolts"
__docs__ = "Quantum walks on vertex complemented coronas: spectra, transfer amplitudes and state transfer certificates."
__long_doc__ = """
What is it?
-----------
Bolts for continuous-time quantum walks. Build vertex complemented coronas, decompose their
adjacency matrices into eigenprojectors (numerically or straight from the spectra of the factors),
evaluate transition amplitudes, and certify or refute periodicity, perfect state transfer and
pretty good state transfer.

Spectral data
-------------
Coronas over very large regular graphs never need to be built: the closed forms only consume the
base spectrum and a handful of projector entries, which can be ingested from JSON.
"""

__all__ = [
    "__author__",
    "__author_email__",
    "__copyright__",
    "__docs__",
    "__homepage__",
    "__license__",
    "__version__",
]
