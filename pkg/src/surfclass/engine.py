"""Execution engines: fast baseline vs space-metered.

The baseline engine materialises every intermediate graph and counts
components with one union-find pass.  The metered engine never stores an
intermediate: graphs are edge streams recomputed from the table on each
pass, components are counted by the literal pairwise scan, and every
live counter is charged against a :class:`MeteredWorkspace`.
"""

from __future__ import annotations

from .connectivity import (ORACLES, SavitchOracle, UnionFindOracle,
                           count_components_scan, count_components_unionfind)
from .graphs import (boundary_identification_graph, cover_dual_stream_graph,
                     double_cover, dual_stream_graph, face_dual,
                     k_stream_graph, kprime_stream_graph,
                     vertex_identification_graph)
from .triangulation import input_symbol_count
from .validate import check_surface
from .workspace import MeteredWorkspace, default_budget_bits


class BaselineEngine:
    name = "baseline"

    def __init__(self, oracle=None):
        self.oracle = oracle if oracle is not None else UnionFindOracle()
        self.workspace = None

    def dual_graph(self, tri):
        return face_dual(tri)

    def cover_dual_graph(self, tri):
        return face_dual(double_cover(tri))

    def vertex_graph(self, tri):
        return vertex_identification_graph(tri)

    def boundary_graph(self, tri):
        return boundary_identification_graph(tri)

    def boundary_edges(self, tri):
        return sum(1 for t in range(1, tri.n + 1)
                   for c in range(3) if tri.entry_at(t, c) is None)

    def count_components(self, graph):
        if isinstance(self.oracle, UnionFindOracle):
            return count_components_unionfind(graph)
        return count_components_scan(graph, self.oracle, None, early_exit=True)

    def check(self, tri):
        return check_surface(tri)


class MeteredEngine:
    name = "metered"

    def __init__(self, workspace, oracle=None):
        self.workspace = workspace
        self.oracle = oracle if oracle is not None else SavitchOracle(workspace)

    def dual_graph(self, tri):
        return dual_stream_graph(tri, self.workspace)

    def cover_dual_graph(self, tri):
        return cover_dual_stream_graph(tri, self.workspace)

    def vertex_graph(self, tri):
        return k_stream_graph(tri, self.workspace)

    def boundary_graph(self, tri):
        return kprime_stream_graph(tri, self.workspace)

    def boundary_edges(self, tri):
        ws = self.workspace
        with ws.counter(3 * tri.n):
            count = 0
            for t in range(1, tri.n + 1):
                for c in range(3):
                    ws.input_reads += 1
                    if tri.entry_at(t, c) is None:
                        count += 1
        return count

    def count_components(self, graph):
        return count_components_scan(graph, self.oracle, self.workspace,
                                     early_exit=False)

    def check(self, tri):
        return check_surface(tri, self.workspace)


def make_engine(engine: str = "baseline", oracle: str | None = None, tri=None,
                budget_bits: int | None = None, input_symbols: int | None = None):
    """Build an engine by name.

    The metered engine needs an input size to fix its budget: pass the
    triangulation (symbol count is derived) or input_symbols directly.
    budget_bits overrides the default budget; 0 means unlimited.
    """
    if engine == "baseline":
        oracle_name = oracle or "unionfind"
        return BaselineEngine(ORACLES[oracle_name]())
    if engine != "metered":
        raise ValueError(f"unknown engine {engine!r}")
    oracle_name = oracle or "savitch"
    if oracle_name == "unionfind":
        raise ValueError("the metered engine requires the savitch or derand oracle")
    if input_symbols is None:
        if tri is None:
            raise ValueError("metered engine needs tri or input_symbols to size its budget")
        input_symbols = input_symbol_count(tri)
    if budget_bits is None:
        budget_bits = default_budget_bits(input_symbols)
    ws = MeteredWorkspace(budget_bits=budget_bits, input_symbols=input_symbols)
    return MeteredEngine(ws, ORACLES[oracle_name](ws))
