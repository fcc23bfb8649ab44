from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import torch
from torch import Tensor

from qwalk_bolts.utils.exceptions import GraphParameterError

Edge = Tuple[int, int]


def _normalize_edges(n: int, edges: Iterable[Sequence[int]]) -> FrozenSet[Edge]:
    normalized = set()
    for edge in edges:
        i, j = (int(x) for x in edge)
        if i == j:
            raise GraphParameterError(f"self-loop at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise GraphParameterError(f"edge ({i}, {j}) out of range for {n} vertices")
        normalized.add((min(i, j), max(i, j)))
    return frozenset(normalized)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on the dense vertex set ``0..n-1``.

    Edges are stored as sorted pairs ``(i, j)`` with ``i < j``; duplicates collapse.

    Example::

        >>> g = Graph(3, [(0, 1), (2, 1), (1, 0)])
        >>> g.num_edges, g.degrees()
        (2, [1, 2, 1])
    """

    n: int
    edges: FrozenSet[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphParameterError(f"a graph needs at least one vertex, got n={self.n}")
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def degrees(self) -> List[int]:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def adjacency(self, dtype: torch.dtype = torch.float64) -> Tensor:
        """Dense symmetric 0/1 adjacency matrix with zero diagonal."""
        a = torch.zeros(self.n, self.n, dtype=dtype)
        if self.edges:
            idx = torch.tensor(self.sorted_edges(), dtype=torch.long)
            a[idx[:, 0], idx[:, 1]] = 1
            a[idx[:, 1], idx[:, 0]] = 1
        return a

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph, ordering: Optional[Sequence] = None) -> "Graph":
        """Relabel ``g`` onto ``0..n-1`` following ``ordering`` (insertion order by default)."""
        nodes = list(ordering) if ordering is not None else list(g.nodes)
        index = {node: i for i, node in enumerate(nodes)}
        return cls(len(nodes), [(index[a], index[b]) for a, b in g.edges])

    @classmethod
    def from_adjacency(cls, a: Tensor) -> "Graph":
        a = torch.as_tensor(a)
        rows, cols = torch.nonzero(torch.triu(a, diagonal=1), as_tuple=True)
        return cls(a.shape[0], zip(rows.tolist(), cols.tolist()))


@dataclass(frozen=True)
class RegularityInfo:
    is_regular: bool
    degree: int
    is_connected: bool


def analyze_structure(g: Graph) -> RegularityInfo:
    """Regularity and connectivity of ``g``; ``degree`` is only meaningful when ``is_regular``.

    >>> analyze_structure(Graph(4, [(0, 1), (2, 3)]))
    RegularityInfo(is_regular=True, degree=1, is_connected=False)
    """
    degrees = g.degrees()
    is_regular = len(set(degrees)) == 1
    return RegularityInfo(
        is_regular=is_regular,
        degree=degrees[0] if is_regular else -1,
        is_connected=nx.is_connected(g.to_networkx()),
    )
