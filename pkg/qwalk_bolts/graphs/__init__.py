from qwalk_bolts.graphs.edge_list import (  # noqa: F401
    graph_from_dict,
    graph_to_dict,
    graph_to_json,
    parse_edge_list,
    parse_graph_json,
    read_graph_file,
    serialize_edge_list,
)
from qwalk_bolts.graphs.families import (  # noqa: F401
    FAMILIES,
    build_named_graph,
    parse_graph_spec,
    parse_satellite_specs,
)
from qwalk_bolts.graphs.graph import Graph, RegularityInfo, analyze_structure  # noqa: F401

__all__ = [
    "FAMILIES",
    "Graph",
    "RegularityInfo",
    "analyze_structure",
    "build_named_graph",
    "graph_from_dict",
    "graph_to_dict",
    "graph_to_json",
    "parse_edge_list",
    "parse_graph_json",
    "parse_graph_spec",
    "parse_satellite_specs",
    "read_graph_file",
    "serialize_edge_list",
]
