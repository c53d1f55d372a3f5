"""Test-surface generation with known homeomorphism type.

Families come with a closed-form invariant triple: orientable genus g
with b boundary circles gives (0, 2-2g-b, b), non-orientable genus k
gives (1, 2-k-b, b).  Constructions keep every interior vertex incident
to at least three triangle corners, so the identification graphs retain
their clean cycle structure.

Most families are built from a fan-triangulated polygon with its sides
glued by an edge word: handles contribute [a, b, a', b'] blocks,
crosscaps [a, a], and each boundary circle an [x, c, x'] block whose c
side stays unglued.  The sphere, the projective plane, and the disk are
small special cases.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Tuple

from .errors import UnsupportedSpec
from .invariants import InvariantTriple
from .triangulation import DIRECT_LABELS, REVERSE, Triangulation

# column and its written corner order, keyed by the unordered corner pair
_COLUMN_OF_PAIR = {
    frozenset((1, 2)): (12, (1, 2)),
    frozenset((2, 3)): (23, (2, 3)),
    frozenset((1, 3)): (31, (3, 1)),
}
_LABEL_OF_ORDER = {(1, 2): 12, (2, 1): 21, (2, 3): 23, (3, 2): 32,
                   (3, 1): 31, (1, 3): 13}
_COL_IDX = {12: 0, 23: 1, 31: 2}


class _TableBuilder:
    """Accumulates corner-level gluings into a table."""

    def __init__(self, n):
        self.rows = [[None, None, None] for _ in range(n)]

    def _set(self, t, column, value):
        cell = self.rows[t - 1]
        idx = _COL_IDX[column]
        if cell[idx] is not None:
            raise ValueError(f"edge ({column}) of triangle {t} glued twice")
        cell[idx] = value

    def glue(self, t, ij, s, pq):
        """Identify corners: t's i with s's p and t's j with s's q."""
        i, j = ij
        p, q = pq
        column, direct = _COLUMN_OF_PAIR[frozenset((i, j))]
        mapped = (p, q) if (i, j) == direct else (q, p)
        self._set(t, column, (s, _LABEL_OF_ORDER[mapped]))
        column2, direct2 = _COLUMN_OF_PAIR[frozenset((p, q))]
        inverse = {p: i, q: j}
        mapped2 = (inverse[direct2[0]], inverse[direct2[1]])
        self._set(s, column2, (t, _LABEL_OF_ORDER[mapped2]))

    def build(self) -> Triangulation:
        return Triangulation(tuple(tuple(row) for row in self.rows))


def _polygon_surface(word) -> Triangulation:
    """Surface from a fan-triangulated polygon with sides glued by a word.

    word is a sequence of (letter, exponent) with every letter used once
    (boundary side) or twice.  Side r runs from polygon vertex r to
    vertex r+1; triangle r of the fan spans vertices (0, r, r+1).
    """
    sides = len(word)
    if sides < 3:
        raise UnsupportedSpec(f"polygon needs at least 3 sides, got {sides}")
    ntri = sides - 2
    builder = _TableBuilder(ntri)
    for r in range(1, ntri):
        builder.glue(r, (1, 3), r + 1, (1, 2))

    def owner(r):
        # positions of side r's tail and head corners in its owning triangle
        if r == 0:
            return 1, (1, 2)
        if r == sides - 1:
            return ntri, (3, 1)
        return r, (2, 3)

    occurrences = {}
    for r, (letter, exponent) in enumerate(word):
        occurrences.setdefault(letter, []).append((r, exponent))
    for letter, occ in occurrences.items():
        if len(occ) == 1:
            continue
        if len(occ) > 2:
            raise UnsupportedSpec(f"letter {letter!r} used {len(occ)} times")
        (r1, e1), (r2, e2) = occ
        t1, (i1, j1) = owner(r1)
        t2, (i2, j2) = owner(r2)
        if e1 == e2:
            builder.glue(t1, (i1, j1), t2, (i2, j2))
        else:
            builder.glue(t1, (i1, j1), t2, (j2, i2))
    return builder.build()


def _word_orientable(genus, boundaries):
    word = []
    for i in range(genus):
        word += [(f"a{i}", 1), (f"b{i}", 1), (f"a{i}", -1), (f"b{i}", -1)]
    for j in range(boundaries):
        word += [(f"x{j}", 1), (f"c{j}", 1), (f"x{j}", -1)]
    return word


def _word_nonorientable(genus, boundaries):
    word = []
    for i in range(genus):
        word += [(f"a{i}", 1), (f"a{i}", 1)]
    for j in range(boundaries):
        word += [(f"x{j}", 1), (f"c{j}", 1), (f"x{j}", -1)]
    return word


def _tetrahedron() -> Triangulation:
    faces = ((0, 1, 2), (0, 3, 1), (0, 2, 3), (1, 3, 2))
    builder = _TableBuilder(len(faces))
    shared = {}
    for t, face in enumerate(faces, start=1):
        for pi, pj in ((1, 2), (2, 3), (3, 1)):
            key = frozenset((face[pi - 1], face[pj - 1]))
            shared.setdefault(key, []).append((t, pi, pj, face[pi - 1]))
    for sites in shared.values():
        assert len(sites) == 2
        (t, pi, pj, tail), (s, qi, qj, tail2) = sites
        if tail == tail2:
            builder.glue(t, (pi, pj), s, (qi, qj))
        else:
            builder.glue(t, (pi, pj), s, (qj, qi))
    return builder.build()


def _projective_plane() -> Triangulation:
    """Antipodal quotient of the octahedron: 4 triangles, 3 vertices.

    Triangle r holds one axis vertex per position; the antipodal map
    preserves axes, so every gluing matches corners position-for-position.
    """
    builder = _TableBuilder(4)
    for (t, edge_t), (s, edge_s) in (
            ((1, (1, 2)), (2, (1, 2))),
            ((1, (2, 3)), (4, (2, 3))),
            ((1, (3, 1)), (3, (3, 1))),
            ((2, (2, 3)), (3, (2, 3))),
            ((2, (3, 1)), (4, (3, 1))),
            ((3, (1, 2)), (4, (1, 2)))):
        builder.glue(t, edge_t, s, edge_s)
    return builder.build()


def _boundary_triangle() -> Triangulation:
    return Triangulation([(None, None, None)])


def surface(orientable: bool, genus: int, boundaries: int) -> Triangulation:
    """Connected surface of the requested type."""
    if boundaries < 0:
        raise UnsupportedSpec("boundary count must be non-negative")
    if orientable:
        if genus < 0:
            raise UnsupportedSpec("orientable genus must be non-negative")
        if genus == 0 and boundaries == 0:
            return _tetrahedron()
        if genus == 0 and boundaries == 1:
            return _boundary_triangle()
        return _polygon_surface(_word_orientable(genus, boundaries))
    if genus < 1:
        raise UnsupportedSpec("non-orientable genus must be at least 1")
    if genus == 1 and boundaries == 0:
        return _projective_plane()
    return _polygon_surface(_word_nonorientable(genus, boundaries))


def disjoint_union(parts) -> Triangulation:
    """Concatenate tables, shifting gluing targets past earlier parts."""
    rows = []
    offset = 0
    for part in parts:
        for t in range(1, part.n + 1):
            row = []
            for c in range(3):
                entry = part.entry_at(t, c)
                row.append(None if entry is None else (entry[0] + offset, entry[1]))
            rows.append(tuple(row))
        offset += part.n
    return Triangulation(rows)


# ---------------------------------------------------------------------------
# homeomorphism-preserving mutations

def relabel(tri, seed=0) -> Triangulation:
    """Permute triangle indices with a seeded shuffle."""
    rng = random.Random(seed)
    perm = list(range(1, tri.n + 1))
    rng.shuffle(perm)
    rows = [None] * tri.n
    for old in range(1, tri.n + 1):
        row = []
        for c in range(3):
            entry = tri.entry_at(old, c)
            row.append(None if entry is None else (perm[entry[0] - 1], entry[1]))
        rows[perm[old - 1] - 1] = tuple(row)
    return Triangulation(rows)


def subdivide_triangle(tri, t) -> Triangulation:
    """Split triangle t into three around a new centre vertex.

    The three old edges keep their gluings: edge (12) stays on t, edge
    (23) moves to new triangle n+1, edge (31) to n+2, each becoming that
    child's (12) edge with the same corner order.  Adds one vertex, three
    edges and two faces, so the homeomorphism type is untouched.
    """
    n = tri.n
    owner = {12: t, 23: n + 1, 31: n + 2}

    def translate(entry):
        if entry is None or entry[0] != t:
            return entry
        _, f = entry
        base = f if f in DIRECT_LABELS else REVERSE[f]
        return (owner[base], 12 if f in DIRECT_LABELS else 21)

    old_row = tri.table[t - 1]
    rows = []
    for r in range(1, n + 1):
        if r == t:
            rows.append((translate(old_row[0]), (n + 1, 13), (n + 2, 32)))
        else:
            rows.append(tuple(translate(e) for e in tri.table[r - 1]))
    rows.append((translate(old_row[1]), (n + 2, 13), (t, 32)))
    rows.append((translate(old_row[2]), (t, 13), (n + 1, 32)))
    return Triangulation(rows)


def subdivide(tri, count=1, seed=0) -> Triangulation:
    """Apply `count` random triangle subdivisions."""
    rng = random.Random(seed)
    for _ in range(count):
        tri = subdivide_triangle(tri, rng.randint(1, tri.n))
    return tri


# ---------------------------------------------------------------------------
# family specs

@dataclass(frozen=True)
class Relabel:
    seed: int = 0


@dataclass(frozen=True)
class Subdivide:
    count: int = 1
    seed: int = 0


@dataclass(frozen=True)
class FamilySpec:
    """A surface family with a closed-form invariant triple.

    family is one of sphere, orientable, nonorientable, disk, moebius, or
    union (with components).  punctures adds boundary circles on top of
    what the family itself carries.
    """
    family: str = "sphere"
    genus: int = 0
    punctures: int = 0
    components: Tuple["FamilySpec", ...] = ()
    mutations: Tuple = ()

    def base_type(self):
        """(orientable?, genus, boundaries) of a non-union spec."""
        if self.family == "sphere":
            return True, 0, self.punctures
        if self.family == "orientable":
            return True, self.genus, self.punctures
        if self.family == "disk":
            return True, 0, 1 + self.punctures
        if self.family == "nonorientable":
            return False, self.genus, self.punctures
        if self.family == "moebius":
            return False, 1, 1 + self.punctures
        raise UnsupportedSpec(f"unknown family {self.family!r}")


def generate(spec: FamilySpec) -> Triangulation:
    """Build the triangulation a spec describes."""
    if spec.family == "union":
        tri = disjoint_union(generate(part) for part in spec.components)
    else:
        orientable, genus, boundaries = spec.base_type()
        tri = surface(orientable, genus, boundaries)
    for mutation in spec.mutations:
        if isinstance(mutation, Relabel):
            tri = relabel(tri, mutation.seed)
        elif isinstance(mutation, Subdivide):
            tri = subdivide(tri, mutation.count, mutation.seed)
        else:
            raise UnsupportedSpec(f"unknown mutation {mutation!r}")
    return tri


def closed_form_triples(spec: FamilySpec):
    """The invariant list generate(spec) must classify to."""
    if spec.family == "union":
        triples = []
        for part in spec.components:
            triples.extend(closed_form_triples(part))
        return sorted(triples)
    orientable, genus, boundaries = spec.base_type()
    if orientable:
        return [InvariantTriple(0, 2 - 2 * genus - boundaries, boundaries)]
    return [InvariantTriple(1, 2 - genus - boundaries, boundaries)]
