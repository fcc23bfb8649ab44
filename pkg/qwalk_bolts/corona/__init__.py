from qwalk_bolts.corona.construction import (  # noqa: F401
    CoronaGraph,
    CoronaLabel,
    CoronaSpec,
    build_corona,
    check_base,
    corona_adjacency_blocks,
    satellite_parameters,
)

__all__ = [
    "CoronaGraph",
    "CoronaLabel",
    "CoronaSpec",
    "build_corona",
    "check_base",
    "corona_adjacency_blocks",
    "satellite_parameters",
]
