"""Gluing-table triangulations and their exact tape encoding.

A triangulation is n triangles, each with corners labelled 1, 2, 3 and a
row of three gluing entries for its directed edges (12), (23), (31).  An
entry is either a boundary marker or ``(s, f)``: this edge is glued onto
edge f of triangle s, corners matching in the order written, so label
(pq) identifies our first corner with corner p of s and our second with
corner q.

Tape format (whitespace-separated tokens, one '#' per triangle)::

    # 10 (13) 11 (12) 11 (32) # 11 (13) - 1 (21) # 1 (23) 1 (13) 10 (21)

'-' marks a boundary edge, triangle indices are binary numerals without
leading zeros, and the six labels are literal tokens.
"""

from __future__ import annotations

from typing import Iterator, Optional, Tuple

from .errors import IndexOutOfRange, TapeRangeError, TapeSyntaxError

#: The three table columns, in order.
COLUMNS = (12, 23, 31)

#: Reversal involution on the six oriented edge labels.
REVERSE = {12: 21, 21: 12, 23: 32, 32: 23, 31: 13, 13: 31}

DIRECT_LABELS = frozenset(COLUMNS)
REVERSED_LABELS = frozenset(REVERSE[c] for c in COLUMNS)
ALL_LABELS = DIRECT_LABELS | REVERSED_LABELS

#: Corner pair (i, j) spanned by each label, in written order.
LABEL_CORNERS = {12: (1, 2), 21: (2, 1), 23: (2, 3), 32: (3, 2), 31: (3, 1), 13: (1, 3)}

_COL_INDEX = {12: 0, 23: 1, 31: 2}
_LABEL_TOKEN = {lab: f"({lab})" for lab in ALL_LABELS}
_TOKEN_LABEL = {tok: lab for lab, tok in _LABEL_TOKEN.items()}

#: A gluing entry: None for a boundary edge, else (target triangle, label).
GluingEntry = Optional[Tuple[int, int]]


def reverse_label(label: int) -> int:
    return REVERSE[label]


class Triangulation:
    """Immutable n-row gluing table."""

    __slots__ = ("n", "table")

    def __init__(self, rows):
        table = []
        for row in rows:
            row = tuple(row)
            if len(row) != 3:
                raise ValueError("each triangle needs exactly three entries")
            table.append(row)
        self.table = tuple(table)
        self.n = len(self.table)
        self._check_well_formed()

    def _check_well_formed(self):
        for t, row in enumerate(self.table, start=1):
            for col, entry in zip(COLUMNS, row):
                if entry is None:
                    continue
                s, f = entry
                if not 1 <= s <= self.n:
                    raise TapeRangeError(
                        f"row {t} column ({col}) targets triangle {s}, outside 1..{self.n}")
                if f not in ALL_LABELS:
                    raise ValueError(f"row {t} column ({col}) has bad label {f!r}")

    def entry(self, t: int, column: int) -> GluingEntry:
        """Table cell at row t (1-indexed), column in {12, 23, 31}."""
        if column not in _COL_INDEX:
            raise IndexOutOfRange(f"no column ({column}); columns are (12), (23), (31)")
        if not 1 <= t <= self.n:
            raise IndexOutOfRange(f"triangle {t} outside 1..{self.n}")
        return self.table[t - 1][_COL_INDEX[column]]

    def entry_at(self, t: int, col_idx: int) -> GluingEntry:
        """Fast unchecked access by row (1-indexed) and column index 0..2."""
        return self.table[t - 1][col_idx]

    def sites(self) -> Iterator[Tuple[int, int, GluingEntry]]:
        """All (t, column, entry) cells in scan order."""
        for t, row in enumerate(self.table, start=1):
            for col, entry in zip(COLUMNS, row):
                yield t, col, entry

    def boundary_edge_count(self) -> int:
        return sum(1 for row in self.table for entry in row if entry is None)

    def __eq__(self, other):
        return isinstance(other, Triangulation) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"Triangulation(n={self.n})"


def read_entry(tri, t: int, column: int, workspace=None) -> GluingEntry:
    """Read one table cell, counting the read against a workspace if given.

    Reading the input never charges work bits.
    """
    value = tri.entry(t, column)
    if workspace is not None:
        workspace.input_reads += 1
    return value


def parse(text: str) -> Triangulation:
    """Parse the tape format; the inverse of :func:`serialize`.

    Raises TapeSyntaxError for malformed tokens or structure and
    TapeRangeError for indices outside 1..n or non-canonical numerals.
    """
    tokens = text.split()
    # First pass: n is the number of '#' markers.
    n = sum(1 for tok in tokens if tok == "#")
    rows = []
    pos = 0
    total = len(tokens)

    def take_entry(t):
        nonlocal pos
        if pos >= total:
            raise TapeSyntaxError(f"triangle {t}: unexpected end of input, expected an entry")
        tok = tokens[pos]
        if tok == "-":
            pos += 1
            return None
        if tok == "#":
            raise TapeSyntaxError(f"triangle {t}: expected three entries before next '#'")
        if not all(c in "01" for c in tok):
            raise TapeSyntaxError(f"triangle {t}: expected '-' or a binary numeral, got {tok!r}")
        if tok[0] == "0":
            raise TapeRangeError(f"triangle {t}: numeral {tok!r} has a leading zero"
                                 if len(tok) > 1 else
                                 f"triangle {t}: triangle indices start at 1, got 0")
        target = int(tok, 2)
        pos += 1
        if pos >= total:
            raise TapeSyntaxError(f"triangle {t}: numeral {tok!r} not followed by a label")
        lab_tok = tokens[pos]
        if lab_tok not in _TOKEN_LABEL:
            raise TapeSyntaxError(f"triangle {t}: expected an edge label, got {lab_tok!r}")
        pos += 1
        if target > n:
            raise TapeRangeError(f"triangle {t}: target {target} exceeds n={n}")
        return (target, _TOKEN_LABEL[lab_tok])

    t = 0
    while pos < total:
        tok = tokens[pos]
        if tok != "#":
            raise TapeSyntaxError(f"expected '#', got {tok!r}")
        pos += 1
        t += 1
        row = (take_entry(t), take_entry(t), take_entry(t))
        rows.append(row)
    assert t == n
    return Triangulation(rows)


def serialize(tri) -> str:
    """Canonical tape form: single spaces, minimal binary numerals."""
    parts = []
    for t in range(1, tri.n + 1):
        parts.append("#")
        for idx in range(3):
            entry = tri.entry_at(t, idx)
            if entry is None:
                parts.append("-")
            else:
                s, f = entry
                parts.append(format(s, "b"))
                parts.append(_LABEL_TOKEN[f])
    return " ".join(parts)


def input_symbol_count(tri) -> int:
    """Length of the tape in alphabet symbols.

    Each '#', boundary marker, and label is one symbol; a binary numeral
    contributes one symbol per bit.
    """
    total = tri.n
    for row in tri.table:
        for entry in row:
            if entry is None:
                total += 1
            else:
                total += entry[0].bit_length() + 1
    return total
