"""Base graphs and satellites shared by the corona test suites."""
from typing import Dict, List, Tuple

import pytest

from qwalk_bolts.graphs import Graph, build_named_graph

BASES: Dict[str, Tuple[str, List[int]]] = {
    "K2": ("complete", [2]),
    "C4": ("cycle", [4]),
    "C5": ("cycle", [5]),
    "C6": ("cycle", [6]),
    "K4": ("complete", [4]),
    "Q3": ("hypercube", [3]),
    "Petersen": ("petersen", []),
}

SATELLITES: Dict[str, Tuple[str, List[int]]] = {
    "K1": ("complete", [1]),
    "K2": ("complete", [2]),
    "2K1": ("empty", [2]),
    "C3": ("cycle", [3]),
    "K3": ("complete", [3]),
}


def named(name: str, table: Dict[str, Tuple[str, List[int]]] = BASES) -> Graph:
    family, params = table[name]
    return build_named_graph(family, params)


def battery(bases=tuple(BASES), satellites=tuple(SATELLITES)):
    """``pytest.param(base, satellite list)`` for every base/satellite combination."""
    params = []
    for b in bases:
        base = named(b)
        for s in satellites:
            params.append(pytest.param(base, [named(s, SATELLITES)] * base.n, id=f"{b}-{s}"))
    return params
