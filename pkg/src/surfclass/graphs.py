"""Auxiliary graphs of a triangulation and the orientation double cover.

Three graphs drive the pipeline:

* the face-dual graph (one vertex per triangle, one edge per glued pair),
  whose components are the surface components;
* the vertex identification graph K on the 3n triangle corners, whose
  components are the surface vertices;
* the boundary identification graph K', which is K plus one edge per
  unglued triangle edge, closing boundary paths into cycles.

Each comes in two forms: a materialised :class:`UndirectedGraph` and a
restartable edge stream that recomputes edges from the table on every
pass, storing nothing.  Corner (t, i) gets vertex id ``3*(t-1) + i``.
"""

from __future__ import annotations

from typing import Callable, Iterator, Tuple

from .errors import UnknownVertex
from .triangulation import COLUMNS, DIRECT_LABELS, LABEL_CORNERS, Triangulation
from .workspace import counter_bits


class UndirectedGraph:
    """Simple undirected graph: ordered vertices, loop-free deduplicated edges."""

    __slots__ = ("_vertices", "_vset", "_edges")

    def __init__(self, vertices=(), edges=()):
        self._vertices = []
        self._vset = set()
        self._edges = set()
        for v in vertices:
            self.add_vertex(v)
        for a, b in edges:
            self.add_edge(a, b)

    def add_vertex(self, v):
        if v not in self._vset:
            self._vset.add(v)
            self._vertices.append(v)

    def add_edge(self, a, b):
        if a == b:
            raise ValueError(f"loop at vertex {a} not allowed in a simple graph")
        if a not in self._vset or b not in self._vset:
            raise UnknownVertex(f"edge ({a},{b}) touches an unlisted vertex")
        self._edges.add((a, b) if a < b else (b, a))

    @property
    def vertices(self):
        return list(self._vertices)

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def has_vertex(self, v) -> bool:
        return v in self._vset

    def has_edge(self, a, b) -> bool:
        return ((a, b) if a < b else (b, a)) in self._edges

    def iter_edges(self) -> Iterator[Tuple[int, int]]:
        return iter(self._edges)

    def sorted_edges(self):
        return sorted(self._edges)

    def degree(self, v) -> int:
        return sum(1 for a, b in self._edges if a == v or b == v)

    def __repr__(self):
        return f"UndirectedGraph(|V|={self.num_vertices}, |E|={self.num_edges})"


class EdgeStreamGraph:
    """Graph on vertices 1..m given as a restartable edge enumeration.

    Nothing is materialised; every :meth:`iter_edges` call replays the
    producing scan.
    """

    __slots__ = ("_num_vertices", "_factory")

    def __init__(self, num_vertices: int, factory: Callable[[], Iterator[Tuple[int, int]]]):
        self._num_vertices = num_vertices
        self._factory = factory

    @property
    def num_vertices(self) -> int:
        return self._num_vertices

    @property
    def vertices(self):
        return range(1, self._num_vertices + 1)

    def has_vertex(self, v) -> bool:
        return isinstance(v, int) and 1 <= v <= self._num_vertices

    def iter_edges(self) -> Iterator[Tuple[int, int]]:
        return self._factory()

    def has_edge(self, a, b) -> bool:
        want = (a, b) if a < b else (b, a)
        for edge in self._factory():
            if edge == want:
                return True
        return False

    def __repr__(self):
        return f"EdgeStreamGraph(|V|={self._num_vertices})"


def corner_id(t: int, i: int) -> int:
    """Vertex id of corner i of triangle t in K and K'."""
    return 3 * (t - 1) + i


def corner_of(cid: int) -> Tuple[int, int]:
    return (cid - 1) // 3 + 1, (cid - 1) % 3 + 1


# ---------------------------------------------------------------------------
# face-dual graph

def face_dual(tri) -> UndirectedGraph:
    """Materialised face-dual graph on vertices 1..n."""
    g = UndirectedGraph(range(1, tri.n + 1))
    for t, _, entry in tri.sites():
        if entry is not None and entry[0] != t:
            g.add_edge(t, entry[0])
    return g


def _row_targets(entry_at, t, s) -> bool:
    for c in range(3):
        e = entry_at(t, c)
        if e is not None and e[0] == s:
            return True
    return False


def _dual_stream(entry_at, num_rows, ws):
    """Shared face-dual edge stream over any row-entry accessor.

    Emits each edge {t, s} once, at the first table site generating it
    (lexicographic first-site rule).
    """
    token = ws.charge(2 * counter_bits(num_rows) + 4) if ws is not None else None
    try:
        for t in range(1, num_rows + 1):
            for c in range(3):
                entry = entry_at(t, c)
                if ws is not None:
                    ws.input_reads += 1
                s = entry[0] if entry is not None else None
                if s is None or s == t:
                    continue
                dup = False
                for c2 in range(c):
                    e2 = entry_at(t, c2)
                    if ws is not None:
                        ws.input_reads += 1
                    if e2 is not None and e2[0] == s:
                        dup = True
                        break
                if dup:
                    continue
                if s < t:
                    if ws is not None:
                        ws.input_reads += 3
                    if _row_targets(entry_at, s, t):
                        continue
                yield (s, t) if s < t else (t, s)
    finally:
        if token is not None:
            token.release()


def dual_edge_stream(tri, workspace=None):
    return _dual_stream(tri.entry_at, tri.n, workspace)


def dual_stream_graph(tri, workspace=None) -> EdgeStreamGraph:
    return EdgeStreamGraph(tri.n, lambda: dual_edge_stream(tri, workspace))


# ---------------------------------------------------------------------------
# orientation double cover

def cover_entry(tri, r: int, col_idx: int):
    """Row r of the double cover's table, computed from the base table.

    Sheets are 1..n and n+1..2n.  A boundary edge stays boundary on both
    sheets; a gluing written with a direct label crosses sheets, one
    written with a reversed label stays within its sheet.
    """
    n = tri.n
    if r <= n:
        base = tri.entry_at(r, col_idx)
        if base is None:
            return None
        s, f = base
        return (s + n, f) if f in DIRECT_LABELS else (s, f)
    base = tri.entry_at(r - n, col_idx)
    if base is None:
        return None
    s, f = base
    return (s, f) if f in DIRECT_LABELS else (s + n, f)


def double_cover(tri) -> Triangulation:
    """Materialised orientation double cover, triangles 1..n then 1'..n'."""
    rows = []
    for r in range(1, 2 * tri.n + 1):
        rows.append(tuple(cover_entry(tri, r, c) for c in range(3)))
    return Triangulation(rows)


def cover_dual_edge_stream(tri, workspace=None):
    """Face-dual edges of the double cover, without building the cover."""
    return _dual_stream(lambda r, c: cover_entry(tri, r, c), 2 * tri.n, workspace)


def cover_dual_stream_graph(tri, workspace=None) -> EdgeStreamGraph:
    return EdgeStreamGraph(2 * tri.n, lambda: cover_dual_edge_stream(tri, workspace))


# ---------------------------------------------------------------------------
# identification graphs K and K'

def _site_pairs(entry_at, t, col_idx, include_boundary):
    """Corner-id pairs a table site generates, in sub-edge order.

    A glued site (t, e=(ij)) -> (s, (pq)) identifies corner i with p and
    corner j with q; a boundary site joins the two corners of its own
    edge when K' edges are requested.  Loops (self-identified corners)
    are dropped.
    """
    entry = entry_at(t, col_idx)
    i, j = LABEL_CORNERS[COLUMNS[col_idx]]
    pairs = []
    if entry is None:
        if include_boundary:
            a = corner_id(t, i)
            b = corner_id(t, j)
            pairs.append((a, b) if a < b else (b, a))
        return pairs
    s, f = entry
    p, q = LABEL_CORNERS[f]
    for x, y in ((corner_id(t, i), corner_id(s, p)), (corner_id(t, j), corner_id(s, q))):
        if x != y:
            pairs.append((x, y) if x < y else (y, x))
    return pairs


def identification_edge_stream(tri, workspace=None, include_boundary=False):
    """Edges of K (or K' with boundary edges), deduplicated on the fly.

    Every edge is emitted exactly once, at its lexicographically first
    generating site; candidate duplicate sites are confined to the rows
    of the edge's two endpoint corners, so the test re-reads at most two
    rows of the table.
    """
    n = tri.n
    token = workspace.charge(3 * counter_bits(n) + 8) if workspace is not None else None
    entry_at = tri.entry_at
    try:
        for t in range(1, n + 1):
            for c in range(3):
                pairs = _site_pairs(entry_at, t, c, include_boundary)
                if workspace is not None:
                    workspace.input_reads += 1
                for alpha, pair in enumerate(pairs):
                    row_a = (pair[0] - 1) // 3 + 1
                    row_b = (pair[1] - 1) // 3 + 1
                    rows = (row_a,) if row_a == row_b else (row_a, row_b)
                    # a generating site always lies in the row of one of the
                    # two endpoint corners, so those rows suffice for the
                    # first-site test
                    dup = False
                    for r in rows:
                        for c2 in range(3):
                            if (r, c2) > (t, c):
                                break
                            earlier = _site_pairs(entry_at, r, c2, include_boundary)
                            if workspace is not None:
                                workspace.input_reads += 1
                            if (r, c2) == (t, c):
                                if pair in earlier[:alpha]:
                                    dup = True
                                break
                            if pair in earlier:
                                dup = True
                                break
                        if dup:
                            break
                    if not dup:
                        yield pair
    finally:
        if token is not None:
            token.release()


def vertex_identification_graph(tri) -> UndirectedGraph:
    """Materialised K: 3n corner vertices, one edge per direct identification."""
    g = UndirectedGraph(range(1, 3 * tri.n + 1))
    for t in range(1, tri.n + 1):
        for c in range(3):
            for pair in _site_pairs(tri.entry_at, t, c, include_boundary=False):
                g.add_edge(*pair)
    return g


def boundary_identification_graph(tri) -> UndirectedGraph:
    """Materialised K': K plus one edge per boundary edge of the table."""
    g = UndirectedGraph(range(1, 3 * tri.n + 1))
    for t in range(1, tri.n + 1):
        for c in range(3):
            for pair in _site_pairs(tri.entry_at, t, c, include_boundary=True):
                g.add_edge(*pair)
    return g


def k_stream_graph(tri, workspace=None) -> EdgeStreamGraph:
    return EdgeStreamGraph(
        3 * tri.n, lambda: identification_edge_stream(tri, workspace, include_boundary=False))


def kprime_stream_graph(tri, workspace=None) -> EdgeStreamGraph:
    return EdgeStreamGraph(
        3 * tri.n, lambda: identification_edge_stream(tri, workspace, include_boundary=True))
