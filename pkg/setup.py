#!/usr/bin/env python

import os
import sys

# Always prefer setuptools over distutils
from setuptools import find_packages, setup

_PATH_ROOT = os.path.realpath(os.path.dirname(__file__))
_PATH_REQUIRE = os.path.join(_PATH_ROOT, "requirements")

try:
    from qwalk_bolts import __about__ as about
    from qwalk_bolts import setup_tools
except ImportError:
    # alternative https://stackoverflow.com/a/67692/4521646
    sys.path.append("qwalk_bolts")
    import __about__ as about
    import setup_tools


def _prepare_extras():
    extras = {
        "test": setup_tools._load_requirements(path_dir=_PATH_REQUIRE, file_name="test.txt"),
    }
    extras["dev"] = extras["test"]
    return extras


long_description = setup_tools._load_readme_description(_PATH_ROOT, homepage=about.__homepage__, ver=about.__version__)

setup(
    name="qwalk-bolts",
    version=about.__version__,
    description=about.__docs__,
    author=about.__author__,
    author_email=about.__author_email__,
    url=about.__homepage__,
    license=about.__license__,
    packages=find_packages(exclude=["tests", "tests.*", "docs", "examples", "examples.*"]),
    long_description=long_description,
    long_description_content_type="text/markdown",
    include_package_data=True,
    zip_safe=False,
    keywords=["quantum walks", "state transfer", "spectral graph theory", "pytorch"],
    python_requires=">=3.6",
    setup_requires=["wheel"],
    install_requires=setup_tools._load_requirements(_PATH_ROOT),
    extras_require=_prepare_extras(),
    entry_points={"console_scripts": ["qwalk = qwalk_bolts.cli:cli_main"]},
    classifiers=[
        "Environment :: Console",
        "Natural Language :: English",
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Scientific/Engineering :: Physics",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
    ],
)
