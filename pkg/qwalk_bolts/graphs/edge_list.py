"""Edge-list text format and its JSON mirror.

Text format::

    # optional comments
    n 4
    0 1
    1 2

The ``n <count>`` header is optional and must be the first non-comment line; without it the vertex count is
``1 + max index``. JSON mirror: ``{"n": 4, "edges": [[0, 1], [1, 2]]}``.
"""
import json
from typing import Any, Dict, List, Optional, Tuple

from qwalk_bolts.graphs.graph import Graph
from qwalk_bolts.utils.exceptions import GraphParameterError, GraphParseError


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    >>> parse_edge_list("n 4\\n0 1").n
    4
    """
    declared: Optional[int] = None
    edges: List[Tuple[int, int]] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if seen_content or declared is not None:
                raise GraphParseError("vertex count header must be the first entry", line=lineno)
            if len(tokens) != 2:
                raise GraphParseError(f"expected 'n <count>', got '{line}'", line=lineno)
            declared = _parse_int(tokens[1], lineno)
            if declared < 1:
                raise GraphParseError(f"vertex count must be positive, got {declared}", line=lineno)
            seen_content = True
            continue
        seen_content = True
        if len(tokens) != 2:
            raise GraphParseError(f"expected two vertex indices, got '{line}'", line=lineno)
        i, j = _parse_int(tokens[0], lineno), _parse_int(tokens[1], lineno)
        if i < 0 or j < 0:
            raise GraphParseError(f"negative vertex index in '{line}'", line=lineno)
        if i == j:
            raise GraphParseError(f"self-loop at vertex {i}", line=lineno)
        if declared is not None and max(i, j) >= declared:
            raise GraphParseError(f"index {max(i, j)} exceeds declared vertex count {declared}", line=lineno)
        edges.append((i, j))

    if declared is None:
        if not edges:
            raise GraphParseError("empty edge list without a vertex count header")
        declared = 1 + max(max(e) for e in edges)
    return Graph(declared, edges)


def serialize_edge_list(g: Graph) -> str:
    """Canonical text form: header line then sorted edges, one per line."""
    lines = [f"n {g.n}"] + [f"{i} {j}" for i, j in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def graph_to_dict(g: Graph) -> Dict[str, Any]:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def graph_from_dict(doc: Dict[str, Any]) -> Graph:
    if not isinstance(doc, dict) or "edges" not in doc:
        raise GraphParseError("graph document needs an 'edges' list")
    try:
        edges = [(int(i), int(j)) for i, j in doc["edges"]]
    except (TypeError, ValueError) as err:
        raise GraphParseError(f"malformed edge in graph document: {err}") from err
    n = doc.get("n")
    if n is None:
        if not edges:
            raise GraphParseError("graph document without 'n' needs at least one edge")
        n = 1 + max(max(e) for e in edges)
    try:
        return Graph(int(n), edges)
    except GraphParameterError as err:
        raise GraphParseError(str(err)) from err


def parse_graph_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise GraphParseError(err.msg, line=err.lineno) from err
    return graph_from_dict(doc)


def graph_to_json(g: Graph) -> str:
    return json.dumps(graph_to_dict(g))


def read_graph_file(path: str) -> Graph:
    """Read either format, choosing JSON when the document starts with ``{``."""
    with open(path, encoding="utf-8") as fp:
        text = fp.read()
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    return parse_edge_list(text)


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError as err:
        raise GraphParseError(f"unparsable token '{token}'", line=lineno) from err
