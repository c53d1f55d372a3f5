"""surfclass: classification and homeomorphism testing of triangulated surfaces.

A compact surface given as a gluing table is classified by the complete
invariant (orientability, Euler characteristic, boundary count) per
connected component.  Two execution engines compute the same answers: a
fast baseline and a space-metered engine that accounts every live work
bit against a budget.
"""

__version__ = "0.1.0"

from .classify import NormalForm, classify, extract_component, homeomorphic, \
    normal_form_name
from .connectivity import (DoublingClosure, SavitchOracle, UnionFind,
                           UnionFindOracle, count_components_scan,
                           count_components_unionfind, savitch_connected,
                           savitch_reach)
from .engine import BaselineEngine, MeteredEngine, make_engine
from .errors import (BudgetExceeded, ComponentOutOfRange, IndexOutOfRange,
                     InvalidSurface, InvalidTriple, NotConnected, ParityError,
                     SurfclassError, TapeRangeError, TapeSyntaxError,
                     UnknownVertex, UnsupportedSpec)
from .generate import (FamilySpec, Relabel, Subdivide, closed_form_triples,
                       disjoint_union, generate, relabel, subdivide, surface)
from .graphs import (EdgeStreamGraph, UndirectedGraph,
                     boundary_identification_graph, corner_id, double_cover,
                     face_dual, vertex_identification_graph)
from .invariants import (InvariantTriple, boundary_components,
                         euler_characteristic, invariant_triple, orientability)
from .triangulation import (Triangulation, input_symbol_count, parse,
                            read_entry, serialize)
from .validate import Violation, check_surface, is_surface
from .workspace import (ChargeToken, MeteredWorkspace, counter_bits,
                        default_budget_bits, savitch_query_bits)

__all__ = [
    "BaselineEngine", "BudgetExceeded", "ChargeToken", "ComponentOutOfRange",
    "DoublingClosure", "EdgeStreamGraph", "FamilySpec", "IndexOutOfRange",
    "InvalidSurface", "InvalidTriple", "InvariantTriple", "MeteredEngine",
    "MeteredWorkspace", "NormalForm", "NotConnected", "ParityError", "Relabel",
    "SavitchOracle", "Subdivide", "SurfclassError", "TapeRangeError",
    "TapeSyntaxError", "Triangulation", "UndirectedGraph", "UnionFind",
    "UnionFindOracle", "UnknownVertex", "UnsupportedSpec", "Violation",
    "boundary_components", "boundary_identification_graph", "check_surface",
    "classify", "closed_form_triples", "corner_id", "count_components_scan",
    "count_components_unionfind", "counter_bits", "default_budget_bits",
    "disjoint_union", "double_cover", "euler_characteristic",
    "extract_component", "face_dual", "generate", "homeomorphic",
    "input_symbol_count", "invariant_triple", "is_surface", "make_engine",
    "normal_form_name", "orientability", "parse", "read_entry", "relabel",
    "savitch_connected", "savitch_query_bits", "savitch_reach", "serialize",
    "subdivide", "surface", "vertex_identification_graph",
]
