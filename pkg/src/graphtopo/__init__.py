"""Homotopy classification of graphs by contractible transformations."""

__version__ = "0.1.0"

from .graph import (  # noqa: E402
    CanonicalForm,
    Graph,
    GraphError,
    ParseError,
    ball,
    canonical_form,
    complete,
    cycle,
    edge_rim,
    is_isomorphic,
    join,
    octahedron,
    parse_graph,
    path,
    point,
    read_graph,
    rim,
    serialize_graph,
    write_graph,
)
from .contractibility import (  # noqa: E402
    is_contractible,
    is_simple_edge,
    is_simple_point,
    is_simple_subgraph,
)
from .transforms import Trace, Transformation, compress, is_compressed, replay, validate  # noqa: E402
from .invariants import InvariantProfile, euler_characteristic, homology  # noqa: E402
from .equivalence import distinguish, homotopy_equivalent  # noqa: E402
from .classification import basic_graph_of, classify, enumerate_compressed, enumerate_connected  # noqa: E402
from .kernels import BACKEND  # noqa: E402
