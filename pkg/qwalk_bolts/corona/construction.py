"""Vertex complemented coronas.

Given a base graph ``G`` on ``v_0..v_{n-1}`` and satellites ``H_0..H_{n-1}``, the corona takes the disjoint union of
``G`` and all ``H_i`` and joins every vertex of ``H_i`` to every base vertex except ``v_i``.

Flat vertex order: the base copies ``(v_i, -)`` first, in base order, then the vertices of ``H_0``, then ``H_1``, and
so on. This is the block order of :func:`corona_adjacency_blocks`.
"""
import re
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import torch
from torch import Tensor

from qwalk_bolts.graphs.edge_list import graph_from_dict, graph_to_dict
from qwalk_bolts.graphs.graph import Graph, analyze_structure
from qwalk_bolts.utils.exceptions import CoronaSpecError, PreconditionError

_LABEL_PATTERN = re.compile(r"^v:(\d+)(?:/w:(\d+))?$")


@dataclass(frozen=True)
class CoronaSpec:
    base: Graph
    satellites: Tuple[Graph, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "satellites", tuple(self.satellites))
        if len(self.satellites) != self.base.n:
            raise CoronaSpecError(
                f"expected one satellite per base vertex ({self.base.n}), got {len(self.satellites)}"
            )

    def to_dict(self) -> Dict[str, Any]:
        return {"base": graph_to_dict(self.base), "satellites": [graph_to_dict(h) for h in self.satellites]}

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> "CoronaSpec":
        return cls(graph_from_dict(doc["base"]), tuple(graph_from_dict(h) for h in doc["satellites"]))


@dataclass(frozen=True)
class CoronaLabel:
    """Vertex ``(v, w)`` of a corona; ``satellite_vertex`` is ``None`` for the base copy ``(v, 0)``.

    >>> str(CoronaLabel(3)), str(CoronaLabel(3, 1))
    ('v:3', 'v:3/w:1')
    """

    base_vertex: int
    satellite_vertex: Optional[int] = None

    @property
    def is_base(self) -> bool:
        return self.satellite_vertex is None

    def __str__(self) -> str:
        if self.satellite_vertex is None:
            return f"v:{self.base_vertex}"
        return f"v:{self.base_vertex}/w:{self.satellite_vertex}"

    @classmethod
    def parse(cls, text: str) -> "CoronaLabel":
        match = _LABEL_PATTERN.match(text.strip())
        if match is None:
            raise ValueError(f"malformed corona label '{text}', expected 'v:<i>' or 'v:<i>/w:<j>'")
        w = match.group(2)
        return cls(int(match.group(1)), None if w is None else int(w))


@dataclass(frozen=True)
class CoronaGraph:
    """A built corona together with its bidirectional label map."""

    spec: CoronaSpec
    graph: Graph
    offsets: Tuple[int, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.graph.n

    def index_of(self, label: CoronaLabel) -> int:
        v, w = label.base_vertex, label.satellite_vertex
        if not 0 <= v < self.spec.base.n:
            raise ValueError(f"base vertex {v} out of range")
        if w is None:
            return v
        if not 0 <= w < self.spec.satellites[v].n:
            raise ValueError(f"satellite vertex {w} out of range for H_{v}")
        return self.offsets[v] + w

    def label_of(self, index: int) -> CoronaLabel:
        if not 0 <= index < self.n:
            raise ValueError(f"flat index {index} out of range")
        if index < self.spec.base.n:
            return CoronaLabel(index)
        for v in reversed(range(self.spec.base.n)):
            if index >= self.offsets[v]:
                return CoronaLabel(v, index - self.offsets[v])
        raise AssertionError("unreachable")

    def labels(self) -> List[CoronaLabel]:
        return [self.label_of(i) for i in range(self.n)]

    def resolve(self, vertex: str) -> int:
        """Flat index from either a flat index string or a ``v:i[/w:j]`` label."""
        vertex = vertex.strip()
        if vertex.isdigit():
            index = int(vertex)
            self.label_of(index)
            return index
        return self.index_of(CoronaLabel.parse(vertex))


def build_corona(spec: CoronaSpec) -> CoronaGraph:
    """Construct the vertex complemented corona of ``spec``.

    >>> from qwalk_bolts.graphs import build_named_graph
    >>> k1 = build_named_graph("complete", [1])
    >>> corona = build_corona(CoronaSpec(build_named_graph("complete", [2]), (k1, k1)))
    >>> corona.graph.sorted_edges()
    [(0, 1), (0, 3), (1, 2)]
    """
    n = spec.base.n
    offsets = []
    total = n
    for h in spec.satellites:
        offsets.append(total)
        total += h.n

    edges = list(spec.base.edges)
    for i, h in enumerate(spec.satellites):
        offset = offsets[i]
        edges.extend((offset + a, offset + b) for a, b in h.edges)
        edges.extend((j, offset + w) for j in range(n) if j != i for w in range(h.n))
    return CoronaGraph(spec=spec, graph=Graph(total, edges), offsets=tuple(offsets))


def satellite_parameters(satellites: Sequence[Graph]) -> Tuple[int, int]:
    """Common order ``m`` and degree ``k`` of regular equal-size satellites.

    Raises:
        PreconditionError: listing every satellite that is irregular or differs in order/degree from ``H_0``
    """
    if not satellites:
        raise PreconditionError("at least one satellite is required")
    m = satellites[0].n
    info = [analyze_structure(h) for h in satellites]
    k = info[0].degree
    offending = [
        f"H_{i}" for i, (h, s) in enumerate(zip(satellites, info)) if h.n != m or not s.is_regular or s.degree != k
    ]
    if offending:
        raise PreconditionError("satellites must be k-regular with a common order m", offending)
    return k, m


def check_base(base: Graph) -> int:
    info = analyze_structure(base)
    if base.n < 2 or not info.is_regular or not info.is_connected:
        raise PreconditionError(
            f"base graph must be regular, connected and have n >= 2 (n={base.n}, regular={info.is_regular},"
            f" connected={info.is_connected})",
            ["G"],
        )
    return info.degree


def corona_adjacency_blocks(
    base: Graph, satellites: Sequence[Graph], k: Optional[int] = None, m: Optional[int] = None
) -> Tensor:
    """Block adjacency ``[[A_G, M (x) j_m^T], [M^T (x) j_m, diag(A_H_i)]]`` with ``M = J_n - I_n``.

    Args:
        base: regular connected base graph
        satellites: ``n`` k-regular satellites on ``m`` vertices each
        k: expected satellite degree, checked when given
        m: expected satellite order, checked when given
    """
    check_base(base)
    if len(satellites) != base.n:
        raise CoronaSpecError(f"expected {base.n} satellites, got {len(satellites)}")
    k_found, m_found = satellite_parameters(satellites)
    if (k is not None and k != k_found) or (m is not None and m != m_found):
        raise PreconditionError(f"satellites are {k_found}-regular on {m_found} vertices, expected k={k}, m={m}")

    n = base.n
    ones = torch.ones(1, m_found, dtype=torch.float64)
    mask = torch.ones(n, n, dtype=torch.float64) - torch.eye(n, dtype=torch.float64)
    top_right = torch.kron(mask, ones)
    bottom_right = torch.block_diag(*[h.adjacency() for h in satellites])
    top = torch.cat([base.adjacency(), top_right], dim=1)
    bottom = torch.cat([top_right.T, bottom_right], dim=1)
    return torch.cat([top, bottom], dim=0)
