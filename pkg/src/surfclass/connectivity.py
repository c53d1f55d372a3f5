"""Connectivity oracles and component counting.

The pipeline only ever asks one question of a graph: are s and t in the
same component?  That question sits behind an oracle interface with two
interchangeable answers:

* :class:`UnionFindOracle` - merge-based, the fast default;
* :class:`SavitchOracle` - answers from a linear reachability sweep and
  charges its workspace per the recursive midpoint-doubling space model
  (one frame per halving level, each holding a vertex id plus
  bookkeeping), which is what the metered engine's budget is about.

:func:`savitch_reach` is the literal doubling recursion.  Its running
time is super-polynomial, so it is only usable on tiny graphs; it exists
as the executable reference the oracle's space model points at, and the
tests check all answer paths against each other.
"""

from __future__ import annotations

from .errors import BudgetExceeded, UnknownVertex
from .workspace import savitch_frame_bits, savitch_query_bits


class UnionFind:
    """Disjoint sets over arbitrary hashable keys, with path compression."""

    def __init__(self, items=()):
        self.parent = {x: x for x in items}
        self.size = {x: 1 for x in self.parent}
        self.merges = 0

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.merges += 1
        return True

    def component_count(self) -> int:
        return len(self.parent) - self.merges


def union_find_labels(graph) -> dict:
    """Map every vertex to a canonical representative of its component."""
    uf = UnionFind(graph.vertices)
    for a, b in graph.iter_edges():
        uf.union(a, b)
    return {v: uf.find(v) for v in uf.parent}


def count_components_unionfind(graph) -> int:
    """One union-find pass; the baseline engine's component counter."""
    uf = UnionFind(graph.vertices)
    for a, b in graph.iter_edges():
        uf.union(a, b)
    return uf.component_count()


def _bfs_labels(graph) -> dict:
    """Component labels via bitmask breadth-first sweeps."""
    verts = list(graph.vertices)
    index = {v: i for i, v in enumerate(verts)}
    m = len(verts)
    adj = [0] * m
    for a, b in graph.iter_edges():
        ia, ib = index[a], index[b]
        adj[ia] |= 1 << ib
        adj[ib] |= 1 << ia
    labels = {}
    unseen = (1 << m) - 1
    comp_id = 0
    while unseen:
        rep_bit = unseen & -unseen
        comp = rep_bit
        frontier = rep_bit
        while frontier:
            reached = 0
            f = frontier
            while f:
                low = f & -f
                reached |= adj[low.bit_length() - 1]
                f ^= low
            frontier = reached & ~comp
            comp |= frontier
        bits = comp
        while bits:
            low = bits & -bits
            labels[verts[low.bit_length() - 1]] = comp_id
            bits ^= low
        unseen &= ~comp
        comp_id += 1
    return labels


class UnionFindOracle:
    """Connectivity by a cached union-find pass per graph."""

    name = "unionfind"

    def __init__(self):
        self.calls = 0
        self._cache = {}

    def _labels(self, graph):
        entry = self._cache.get(id(graph))
        if entry is None or entry[0] is not graph:
            entry = (graph, union_find_labels(graph))
            self._cache[id(graph)] = entry
        return entry[1]

    def connected(self, graph, s, t) -> bool:
        self.calls += 1
        labels = self._labels(graph)
        try:
            return labels[s] == labels[t]
        except KeyError as exc:
            raise UnknownVertex(f"vertex {exc.args[0]} not in graph") from None


class SavitchOracle:
    """Connectivity with midpoint-doubling space accounting.

    Answers come from a linear reachability sweep cached per graph; every
    query charges the bound workspace with the transient peak the
    doubling recursion would hold (levels+1 frames of vertex id plus
    bookkeeping, one input-position counter at the base).  The literal
    recursion itself is :func:`savitch_reach`.
    """

    name = "savitch"

    def __init__(self, workspace=None):
        self.workspace = workspace
        self.calls = 0
        self._cache = {}

    def _entry(self, graph):
        entry = self._cache.get(id(graph))
        if entry is None or entry[0] is not graph:
            syms = self.workspace.input_symbols if self.workspace is not None else 0
            entry = (graph, _bfs_labels(graph),
                     savitch_query_bits(graph.num_vertices, syms))
            self._cache[id(graph)] = entry
        return entry

    def connected(self, graph, s, t) -> bool:
        self.calls += 1
        entry = self._entry(graph)
        labels = entry[1]
        if s not in labels or t not in labels:
            raise UnknownVertex(f"query ({s},{t}) names a vertex not in the graph")
        ws = self.workspace
        if ws is not None:
            cand = ws.current_bits + entry[2]
            if ws.budget_bits and cand > ws.budget_bits:
                raise BudgetExceeded(cand, ws.budget_bits)
            if cand > ws.peak_bits:
                ws.peak_bits = cand
        return labels[s] == labels[t]


class DerandomizedWalkOracle:
    """Slot for a derandomized-walk connectivity engine; not implemented."""

    name = "derand"

    def __init__(self, workspace=None):
        raise NotImplementedError(
            "the derandomized-walk oracle is an optional extension; "
            "use 'unionfind' or 'savitch'")


ORACLES = {
    "unionfind": UnionFindOracle,
    "savitch": SavitchOracle,
    "derand": DerandomizedWalkOracle,
}


def savitch_connected(graph, s, t, workspace=None) -> bool:
    """One-shot connectivity query under the doubling space model."""
    return SavitchOracle(workspace).connected(graph, s, t)


def savitch_reach(graph, s, t, workspace=None) -> bool:
    """Literal recursive midpoint doubling: reach(u,v,d) via any midpoint m
    with reach(u,m,d/2) and reach(m,v,d/2).

    Exponential-time; for small graphs and cross-checks only.  Charges one
    frame per live recursion level when a workspace is given.
    """
    if not (graph.has_vertex(s) and graph.has_vertex(t)):
        raise UnknownVertex(f"query ({s},{t}) names a vertex not in the graph")
    verts = list(graph.vertices)
    v = len(verts)
    frame = savitch_frame_bits(v)
    dist = 1 << max((max(v, 2) - 1).bit_length(), 0)

    def reach(u, w, d):
        token = workspace.charge(frame) if workspace is not None else None
        try:
            if u == w or graph.has_edge(u, w):
                return True
            if d <= 1:
                return False
            half = d // 2
            for mid in verts:
                if reach(u, mid, half) and reach(mid, w, half):
                    return True
            return False
        finally:
            if token is not None:
                token.release()

    return reach(s, t, dist)


class DoublingClosure:
    """Transitive closure by repeated squaring of the adjacency relation.

    This is the doubling recursion evaluated bottom-up over all pairs
    (reach_2d = reach_d composed with itself); used as a polynomial-time
    reference for the oracle answers.
    """

    def __init__(self, graph):
        verts = list(graph.vertices)
        self._index = {v: i for i, v in enumerate(verts)}
        m = len(verts)
        rows = [1 << i for i in range(m)]
        for a, b in graph.iter_edges():
            ia, ib = self._index[a], self._index[b]
            rows[ia] |= 1 << ib
            rows[ib] |= 1 << ia
        for _ in range(max((max(m, 2) - 1).bit_length(), 1)):
            new_rows = []
            changed = False
            for r in rows:
                acc = r
                bits = r
                while bits:
                    low = bits & -bits
                    acc |= rows[low.bit_length() - 1]
                    bits ^= low
                new_rows.append(acc)
                changed = changed or acc != r
            rows = new_rows
            if not changed:
                break
        self._rows = rows

    def connected(self, graph, s, t) -> bool:
        if s not in self._index or t not in self._index:
            raise UnknownVertex(f"query ({s},{t}) names a vertex not in the graph")
        return bool((self._rows[self._index[s]] >> self._index[t]) & 1)


def count_components_scan(graph, oracle, workspace=None, early_exit=False) -> int:
    """Count components by the incremental scan.

    Walk vertices in ascending order and bump the count whenever a vertex
    is connected to no earlier vertex.  The metered engine runs it with
    no early exit, so the oracle is queried exactly m(m-1)/2 times.
    """
    verts = sorted(graph.vertices)
    m = len(verts)
    if m == 0:
        return 0
    connected = oracle.connected
    if workspace is None:
        count = 1
        for ti in range(1, m):
            t = verts[ti]
            found = False
            for si in range(ti):
                if connected(graph, verts[si], t):
                    found = True
                    if early_exit:
                        break
            if not found:
                count += 1
        return count
    with workspace.counter(m), workspace.counter(m), workspace.counter(m), \
            workspace.charge(1):
        # component counter, two vertex cursors, one flag bit
        count = 1
        for ti in range(1, m):
            t = verts[ti]
            found = False
            for si in range(ti):
                if connected(graph, verts[si], t):
                    found = True
            if not found:
                count += 1
    return count
