"""Multi-component classification and homeomorphism testing.

Components are indexed by their lowest-numbered triangle, in ascending
order.  Classification returns one invariant triple per component,
sorted lexicographically by (o, chi, b); two surfaces are homeomorphic
exactly when these lists coincide.
"""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import union_find_labels
from .engine import BaselineEngine, MeteredEngine
from .errors import ComponentOutOfRange, IndexOutOfRange, InvalidSurface, \
    InvalidTriple
from .invariants import InvariantTriple, euler_characteristic, \
    boundary_components, invariant_triple
from .triangulation import COLUMNS, Triangulation, _COL_INDEX
from .workspace import counter_bits, savitch_query_bits


def _component_members(tri, engine):
    """Triangle lists of each face-dual component, ordered by lowest member."""
    dual = engine.dual_graph(tri)
    labels = union_find_labels(dual)
    groups = {}
    for t in range(1, tri.n + 1):
        groups.setdefault(labels[t], []).append(t)
    return sorted(groups.values(), key=lambda members: members[0])


def extract_component(tri, index, engine=None) -> Triangulation:
    """Materialise the index-th component, triangles renumbered 1..k.

    The new numbering preserves the ascending order of the original
    triangle indices; gluing targets are rewritten accordingly.
    """
    engine = engine if engine is not None else BaselineEngine()
    if tri.n == 0:
        raise ComponentOutOfRange(f"component {index} of an empty surface")
    if isinstance(engine, MeteredEngine):
        view = _ComponentView(tri, index, engine)
        return Triangulation(
            tuple(view.entry_at(t, c) for c in range(3))
            for t in range(1, view.n + 1))
    members_list = _component_members(tri, engine)
    if not 1 <= index <= len(members_list):
        raise ComponentOutOfRange(
            f"component {index} requested, surface has {len(members_list)}")
    members = members_list[index - 1]
    rank = {old: new for new, old in enumerate(members, start=1)}
    rows = []
    for old in members:
        row = []
        for c in range(3):
            entry = tri.entry_at(old, c)
            if entry is None:
                row.append(None)
            else:
                s, f = entry
                assert s in rank, "gluing target escapes its component"
                row.append((rank[s], f))
        rows.append(tuple(row))
    return Triangulation(rows)


class _ComponentView:
    """Read-only view of one component, nothing copied.

    Every cell read locates the old triangle by rank among the vertices
    connected to the component representative and rewrites targets the
    same way, which is how the metered engine composes extraction with
    the downstream stages.  The member scan the model repeats per read is
    cached host-side; its transient space cost is still pulsed per read.
    """

    def __init__(self, tri, index, engine):
        self.base = tri
        self.engine = engine
        self.dual = engine.dual_graph(tri)
        ws = engine.workspace
        oracle = engine.oracle
        n = tri.n
        # walk to the index-th lowest triangle not connected to anything lower
        tokens = [ws.counter(n), ws.counter(n)] if ws is not None else []
        try:
            rep = None
            seen = 0
            for t in range(1, n + 1):
                fresh = True
                for s in range(1, t):
                    if oracle.connected(self.dual, s, t):
                        fresh = False
                if fresh:
                    seen += 1
                    if seen == index:
                        rep = t
                        break
            if rep is None:
                raise ComponentOutOfRange(
                    f"component {index} requested, surface has {seen}")
            self.rep = rep
            members = [t for t in range(rep, n + 1)
                       if oracle.connected(self.dual, rep, t)]
            self._members = members
            self._rank_of = {old: new for new, old in enumerate(members, start=1)}
            self.n = len(members)
        finally:
            for token in tokens:
                token.release()
        # one rank rescan of the model: a counter plus one oracle query live
        self._read_cost = counter_bits(n) + savitch_query_bits(
            n, ws.input_symbols if ws is not None else 0)

    def entry_at(self, t, col_idx):
        ws = self.engine.workspace
        if ws is not None:
            ws.pulse(self._read_cost)
            ws.input_reads += 1
        old = self._members[t - 1]
        entry = self.base.entry_at(old, col_idx)
        if entry is None:
            return None
        return (self._rank_of[entry[0]], entry[1])

    def entry(self, t, column):
        if not 1 <= t <= self.n or column not in _COL_INDEX:
            raise IndexOutOfRange(f"({t}, {column}) outside component table")
        return self.entry_at(t, _COL_INDEX[column])

    def sites(self):
        for t in range(1, self.n + 1):
            for c, col in enumerate(COLUMNS):
                yield t, col, self.entry_at(t, c)


def classify(tri, engine=None):
    """Sorted invariant triples of all components; [] for the empty surface."""
    engine = engine if engine is not None else BaselineEngine()
    violations = engine.check(tri)
    if violations:
        raise InvalidSurface("input is not a surface", violations)
    if tri.n == 0:
        return []
    count = engine.count_components(engine.dual_graph(tri))
    if count == 1:
        return [invariant_triple(tri, engine)]
    if isinstance(engine, MeteredEngine):
        return _classify_metered(tri, engine, count)
    triples = [invariant_triple(extract_component(tri, i, engine), engine)
               for i in range(1, count + 1)]
    triples.sort()
    return triples


def _classify_metered(tri, engine, count):
    """Candidate-triple enumeration for a disconnected metered run.

    Global chi and b bound the candidate space: each component's chi is
    at least chi(S) - 2(c-1), at most 2, and its boundary count is at
    most b(S).  Candidates are swept in output order and every component
    is compared against each; matches are emitted in place, so the output
    comes out sorted.  Component triples are computed once up front (the
    comparisons recompute them in the space model, which the pulses
    account for).
    """
    ws = engine.workspace
    chi_total = euler_characteristic(tri, engine)
    b_total = boundary_components(tri, engine)
    comp_triples = []
    for i in range(1, count + 1):
        view = _ComponentView(tri, i, engine)
        comp_triples.append(invariant_triple(view, engine))
    lo = chi_total - 2 * (count - 1)
    recheck_cost = (savitch_query_bits(3 * tri.n, ws.input_symbols)
                    + 6 * counter_bits(3 * tri.n) + 16)
    out = []
    with ws.charge(1), ws.counter(max(2 - lo, 1)), ws.counter(b_total), \
            ws.counter(count):
        for o in (0, 1):
            for chi in range(lo, 3):
                for x in range(b_total + 1):
                    candidate = (o, chi, x)
                    for idx in range(count):
                        ws.pulse(recheck_cost)
                        if comp_triples[idx] == candidate:
                            out.append(InvariantTriple(o, chi, x))
    return out


def homeomorphic(tri1, tri2, engine=None) -> bool:
    """Whether the two surfaces have identical sorted invariant lists."""
    engine = engine if engine is not None else BaselineEngine()
    try:
        first = classify(tri1, engine)
    except InvalidSurface as exc:
        raise InvalidSurface("first input is not a surface", exc.violations,
                             which="first") from None
    try:
        second = classify(tri2, engine)
    except InvalidSurface as exc:
        raise InvalidSurface("second input is not a surface", exc.violations,
                             which="second") from None
    return first == second


_SPECIAL = {
    (0, 0, 0): "sphere",
    (0, 0, 1): "disk",
    (0, 1, 0): "torus",
    (1, 1, 0): "projective plane",
    (1, 1, 1): "Möbius band",
    (1, 2, 0): "Klein bottle",
}


@dataclass(frozen=True)
class NormalForm:
    orientable: bool
    genus: int
    boundary: int
    text: str
    description: str


def normal_form_name(triple) -> NormalForm:
    """Name the standard surface with the given invariant triple."""
    o, chi, b = triple
    if o not in (0, 1) or b < 0:
        raise InvalidTriple(f"no surface has triple {tuple(triple)}")
    if o == 0:
        doubled = 2 - chi - b
        if doubled < 0 or doubled % 2:
            raise InvalidTriple(
                f"orientable genus of {tuple(triple)} would be {doubled}/2")
        genus = doubled // 2
    else:
        genus = 2 - chi - b
        if genus < 1:
            raise InvalidTriple(
                f"non-orientable genus of {tuple(triple)} would be {genus}")
    special = _SPECIAL.get((o, genus, b))
    if special is not None:
        text = special
    else:
        base = _SPECIAL.get((o, genus, 0))
        if base is None:
            kind = "orientable" if o == 0 else "non-orientable"
            base = f"{kind} surface of genus {genus}"
        plural = "component" if b == 1 else "components"
        text = f"{base} with {b} boundary {plural}" if b else base
    kind = "orientable" if o == 0 else "non-orientable"
    plural = "component" if b == 1 else "components"
    description = f"{kind} genus {genus} with {b} boundary {plural}"
    return NormalForm(orientable=(o == 0), genus=genus, boundary=b,
                      text=text, description=description)
