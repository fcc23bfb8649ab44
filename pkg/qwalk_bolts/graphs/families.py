"""Standard graph families.

Vertex numbering:

- ``path`` and ``cycle``: ``0..n-1`` along the path / around the cycle
- ``hypercube``: vertex ``i`` is the binary word of ``i`` (most significant coordinate first), adjacent words differ
  in one bit
- ``circulant``: ``i ~ i +- s (mod n)`` for every offset ``s``
- ``petersen``: outer 5-cycle ``0..4``, inner pentagram ``5..9``, spokes ``i ~ i+5``
"""
import os
from typing import Callable, Dict, List, Sequence

import networkx as nx

from qwalk_bolts.graphs.edge_list import read_graph_file
from qwalk_bolts.graphs.graph import Graph
from qwalk_bolts.utils.exceptions import GraphParameterError


def _expect(family: str, params: Sequence[int], count: int) -> None:
    if len(params) != count:
        raise GraphParameterError(f"{family} expects {count} parameter(s), got {len(params)}")


def _path(params: Sequence[int]) -> Graph:
    _expect("path", params, 1)
    if params[0] < 1:
        raise GraphParameterError("path requires n >= 1")
    return Graph.from_networkx(nx.path_graph(params[0]))


def _cycle(params: Sequence[int]) -> Graph:
    _expect("cycle", params, 1)
    if params[0] < 3:
        raise GraphParameterError("cycle requires n >= 3")
    return Graph.from_networkx(nx.cycle_graph(params[0]))


def _complete(params: Sequence[int]) -> Graph:
    _expect("complete", params, 1)
    if params[0] < 1:
        raise GraphParameterError("complete requires n >= 1")
    return Graph.from_networkx(nx.complete_graph(params[0]))


def _empty(params: Sequence[int]) -> Graph:
    _expect("empty", params, 1)
    if params[0] < 1:
        raise GraphParameterError("empty requires n >= 1")
    return Graph(params[0])


def _star(params: Sequence[int]) -> Graph:
    _expect("star", params, 1)
    if params[0] < 2:
        raise GraphParameterError("star requires n >= 2")
    return Graph.from_networkx(nx.star_graph(params[0] - 1))


def _hypercube(params: Sequence[int]) -> Graph:
    _expect("hypercube", params, 1)
    if params[0] < 1:
        raise GraphParameterError("hypercube requires d >= 1")
    g = nx.hypercube_graph(params[0])
    # nodes are 0/1 tuples; lexicographic order is binary-word order
    return Graph.from_networkx(g, ordering=sorted(g.nodes))


def _circulant(params: Sequence[int]) -> Graph:
    if len(params) < 2:
        raise GraphParameterError("circulant expects n followed by at least one offset")
    n, offsets = params[0], list(params[1:])
    if n < 2:
        raise GraphParameterError("circulant requires n >= 2")
    bad = [s for s in offsets if not 1 <= s <= n - 1]
    if bad:
        raise GraphParameterError(f"circulant offsets must lie in [1, n-1], got {bad}")
    return Graph.from_networkx(nx.circulant_graph(n, offsets))


def _petersen(params: Sequence[int]) -> Graph:
    _expect("petersen", params, 0)
    return Graph.from_networkx(nx.petersen_graph())


FAMILIES: Dict[str, Callable[[Sequence[int]], Graph]] = {
    "path": _path,
    "cycle": _cycle,
    "complete": _complete,
    "hypercube": _hypercube,
    "circulant": _circulant,
    "petersen": _petersen,
    "empty": _empty,
    "star": _star,
}


def build_named_graph(family: str, params: Sequence[int]) -> Graph:
    """Build a member of a standard family.

    >>> build_named_graph("hypercube", [3]).num_edges
    12
    """
    if family not in FAMILIES:
        raise GraphParameterError(f"unknown graph family '{family}', choose from {sorted(FAMILIES)}")
    return FAMILIES[family]([int(p) for p in params])


def parse_graph_spec(spec: str) -> Graph:
    """Resolve a command line graph spec: ``family:p1:p2`` or ``@path`` to an edge list / JSON file.

    >>> parse_graph_spec("circulant:8:1:3").degrees()[0]
    4
    """
    spec = spec.strip()
    if spec.startswith("@"):
        path = spec[1:]
        if not os.path.isfile(path):
            raise GraphParameterError(f"graph file not found: {path}")
        return read_graph_file(path)
    family, *raw = spec.split(":")
    try:
        params: List[int] = [int(p) for p in raw if p != ""]
    except ValueError as err:
        raise GraphParameterError(f"non-integer parameter in '{spec}'") from err
    return build_named_graph(family, params)


def parse_satellite_specs(spec: str, count: int) -> List[Graph]:
    """Comma separated satellite specs; a single spec is repeated ``count`` times."""
    parts = [p for p in spec.split(",") if p.strip()]
    graphs = [parse_graph_spec(p) for p in parts]
    if len(graphs) == 1:
        graphs = graphs * count
    return graphs
