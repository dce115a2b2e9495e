"""matchroots: exact matching-polynomial root structure for small graphs.

The matching polynomial of a graph is computed exactly over the integers
and factored into irreducible root classes.  For each root class the
library classifies vertices by how deletion moves the root's multiplicity,
builds the resulting D/A/C decomposition, and can verify the whole family
of structural lemmas over exhaustive small-graph corpora.
"""

__version__ = "0.1.0"

from .factorint import FactoredPoly, RootClass, ZERO_ROOT, factor, multiplicity
from .graphs import Graph, from_edge_list, parse_graph6, to_graph6
from .intpoly import IntPoly
from .matching import (
    MatchCounts,
    deficiency,
    match_counts,
    matching_number,
    matching_polynomial,
    root_support,
)
from .structure import (
    Decomposition,
    LemmaReport,
    SignTable,
    VertexSign,
    classify_all,
    decomposition,
    is_essential_path,
    vertex_sign,
)

__all__ = [
    "FactoredPoly",
    "RootClass",
    "ZERO_ROOT",
    "factor",
    "multiplicity",
    "Graph",
    "from_edge_list",
    "parse_graph6",
    "to_graph6",
    "IntPoly",
    "MatchCounts",
    "deficiency",
    "match_counts",
    "matching_number",
    "matching_polynomial",
    "root_support",
    "Decomposition",
    "LemmaReport",
    "SignTable",
    "VertexSign",
    "classify_all",
    "decomposition",
    "is_essential_path",
    "vertex_sign",
    "__version__",
]
