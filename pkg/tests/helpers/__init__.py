from tests.helpers.battery import BASES, SATELLITES, battery, named  # noqa: F401
from tests.helpers.random_graphs import random_adjacency, random_graph, random_order  # noqa: F401
