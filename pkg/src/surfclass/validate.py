"""Surface validation: the five gluing-consistency conditions.

For every cell (t, e) of a well-formed table we require:

1. (t, e) or its reverse occurs at most once as a table value;
2. if the cell is a boundary marker, neither occurs at all;
3. a gluing written with a direct label is mirrored exactly;
4. a gluing written with a reversed label is mirrored with both sides
   reversed;
5. no edge is glued to itself or to its own reverse.

All violations are collected rather than stopping at the first; the
decision (valid surface or not) is "no violations".
"""

from __future__ import annotations

from dataclasses import dataclass

from .triangulation import COLUMNS, DIRECT_LABELS, REVERSE, read_entry

KINDS = ("DuplicateTarget", "BoundaryReferenced", "AsymmetricGluing",
         "AsymmetricReversedGluing", "SelfGluing")


@dataclass(frozen=True)
class Violation:
    kind: str
    triangle: int
    column: int
    detail: str

    def __str__(self):
        return f"{self.kind} t={self.triangle} e={self.column}: {self.detail}"


def _label_class(label):
    return label if label in DIRECT_LABELS else REVERSE[label]


def check_surface(tri, workspace=None):
    """Return the list of violations; empty means the table is a surface.

    With a workspace the check runs as the literal double scan (one pass
    over the whole table per cell, counting occurrences on a charged
    counter); otherwise a prebuilt occurrence index makes it linear.
    """
    if workspace is None:
        return _check_fast(tri)
    return _check_metered(tri, workspace)


def _conditions(tri, t, col, entry, count, out):
    if count > 1:
        out.append(Violation("DuplicateTarget", t, col,
                             f"({t},({col})) or its reverse appears {count} times as a target"))
    if entry is None:
        if count != 0:
            out.append(Violation("BoundaryReferenced", t, col,
                                 "boundary edge is referenced elsewhere in the table"))
        return
    s, f = entry
    if f in DIRECT_LABELS:
        partner = tri.entry(s, f)
        if partner != (t, col):
            out.append(Violation("AsymmetricGluing", t, col,
                                 f"row {s} column ({f}) is {_fmt(partner)}, "
                                 f"expected ({t},({col}))"))
    else:
        fbar = REVERSE[f]
        partner = tri.entry(s, fbar)
        expected = (t, REVERSE[col])
        if partner != expected:
            out.append(Violation("AsymmetricReversedGluing", t, col,
                                 f"row {s} column ({fbar}) is {_fmt(partner)}, "
                                 f"expected ({t},({REVERSE[col]}))"))
    if entry == (t, col) or entry == (t, REVERSE[col]):
        out.append(Violation("SelfGluing", t, col,
                             "edge glued to itself or its own reverse"))


def _fmt(entry):
    if entry is None:
        return "boundary"
    return f"({entry[0]},({entry[1]}))"


def _check_fast(tri):
    occurrences = {}
    for _, _, entry in tri.sites():
        if entry is not None:
            key = (entry[0], _label_class(entry[1]))
            occurrences[key] = occurrences.get(key, 0) + 1
    violations = []
    for t, col, entry in tri.sites():
        count = occurrences.get((t, col), 0)
        _conditions(tri, t, col, entry, count, violations)
    return violations


def _check_metered(tri, ws):
    n = tri.n
    violations = []
    with ws.counter(n), ws.charge(2), ws.counter(3 * n), ws.counter(n), ws.charge(2):
        # row and column cursors, the occurrence counter, and one pointer
        # for the partner lookup stay live across the scan
        for t in range(1, n + 1):
            for col in COLUMNS:
                count = 0
                for u in range(1, n + 1):
                    for c2 in COLUMNS:
                        value = read_entry(tri, u, c2, ws)
                        if value is not None and value[0] == t and \
                                _label_class(value[1]) == col:
                            count += 1
                entry = read_entry(tri, t, col, ws)
                if entry is not None:
                    ws.input_reads += 1  # partner lookup in conditions 3/4
                _conditions(tri, t, col, entry, count, violations)
    return violations


def is_surface(tri, workspace=None) -> bool:
    return not check_surface(tri, workspace)
