"""Shared fixtures: the worked Klein-bottle example, hand-built small
surfaces, a generator corpus, and a brute-force invariant computation
kept deliberately independent of the library's pipeline."""

from collections import deque

import pytest

from surfclass.generate import (FamilySpec, Relabel, Subdivide, generate)
from surfclass.triangulation import (COLUMNS, DIRECT_LABELS, LABEL_CORNERS,
                                     Triangulation, parse)

KLEIN_TAPE = ("# 10 (13) 11 (12) 11 (32) "
              "# 11 (13) - 1 (21) "
              "# 1 (23) 1 (13) 10 (21)")

KLEIN_TABLE = (
    ((2, 13), (3, 12), (3, 32)),
    ((3, 13), None, (1, 21)),
    ((1, 23), (1, 13), (2, 21)),
)

KLEIN_COVER_TABLE = (
    ((2, 13), (6, 12), (3, 32)),
    ((3, 13), None, (1, 21)),
    ((4, 23), (1, 13), (2, 21)),
    ((5, 13), (3, 12), (6, 32)),
    ((6, 13), None, (4, 21)),
    ((1, 23), (4, 13), (5, 21)),
)

# the displayed edge sets for the Klein example under id = 3(t-1)+i
KLEIN_K_EDGES = {(1, 4), (2, 6), (4, 7), (5, 9), (1, 8), (3, 9), (2, 7), (3, 8)}
KLEIN_KPRIME_EDGES = KLEIN_K_EDGES | {(5, 6)}


@pytest.fixture
def klein():
    return parse(KLEIN_TAPE)


def two_triangle_sphere():
    """Pillow: two triangles glued along all three edges, corner to corner."""
    return Triangulation([
        ((2, 12), (2, 23), (2, 31)),
        ((1, 12), (1, 23), (1, 31)),
    ])


def all_boundary_triangle():
    return Triangulation([(None, None, None)])


@pytest.fixture
def pillow_sphere():
    return two_triangle_sphere()


# ---------------------------------------------------------------------------
# independent invariant computation (never touches graphs/invariants modules)

def brute_triple(tri):
    """(o, chi, b) by sign propagation, corner-class BFS, and boundary walking."""
    n = tri.n
    adjacency = {(t, i): set() for t in range(1, n + 1) for i in (1, 2, 3)}
    x = 0
    for t in range(1, n + 1):
        for ci, col in enumerate(COLUMNS):
            entry = tri.entry_at(t, ci)
            if entry is None:
                x += 1
                continue
            s, f = entry
            i, j = LABEL_CORNERS[col]
            p, q = LABEL_CORNERS[f]
            for a, b in (((t, i), (s, p)), ((t, j), (s, q))):
                if a != b:
                    adjacency[a].add(b)
                    adjacency[b].add(a)
    labels = {}
    classes = 0
    for corner in adjacency:
        if corner in labels:
            continue
        classes += 1
        queue = deque([corner])
        labels[corner] = classes
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                if v not in labels:
                    labels[v] = classes
                    queue.append(v)
    vertices = classes
    edges = (3 * n + x) // 2
    chi = vertices - edges + n

    # orientability: a gluing written with a direct label reverses orientation
    sign = {}
    orientable = True
    for start in range(1, n + 1):
        if start in sign:
            continue
        sign[start] = 1
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for ci in range(3):
                entry = tri.entry_at(u, ci)
                if entry is None:
                    continue
                s, f = entry
                want = -sign[u] if f in DIRECT_LABELS else sign[u]
                if s in sign:
                    if sign[s] != want:
                        orientable = False
                else:
                    sign[s] = want
                    queue.append(s)

    # boundary circles: components of the multigraph of boundary arcs
    arcs = []
    for t in range(1, n + 1):
        for ci, col in enumerate(COLUMNS):
            if tri.entry_at(t, ci) is None:
                i, j = LABEL_CORNERS[col]
                arcs.append((labels[(t, i)], labels[(t, j)]))
    incident = {}
    for idx, (a, b) in enumerate(arcs):
        incident.setdefault(a, []).append(idx)
        incident.setdefault(b, []).append(idx)
    seen = set()
    circles = 0
    for idx in range(len(arcs)):
        if idx in seen:
            continue
        circles += 1
        queue = deque([idx])
        seen.add(idx)
        while queue:
            arc = queue.popleft()
            for vertex_class in arcs[arc]:
                for other in incident[vertex_class]:
                    if other not in seen:
                        seen.add(other)
                        queue.append(other)
    return (0 if orientable else 1, chi, circles)


# ---------------------------------------------------------------------------
# generator corpus: every family in range, mutations, and random unions

def _single_specs():
    specs = []
    for genus in range(6):
        for punctures in range(5):
            specs.append(FamilySpec("orientable", genus=genus, punctures=punctures))
    for genus in range(1, 7):
        for punctures in range(5):
            specs.append(FamilySpec("nonorientable", genus=genus, punctures=punctures))
    for punctures in range(3):
        specs.append(FamilySpec("disk", punctures=punctures))
        specs.append(FamilySpec("moebius", punctures=punctures))
    return specs


def build_corpus(seed=20240601):
    """At least 200 (spec, triangulation) pairs, deterministic."""
    import random
    rng = random.Random(seed)
    singles = _single_specs()
    corpus = [(spec, generate(spec)) for spec in singles]
    for i, spec in enumerate(singles[::2]):
        mutated = FamilySpec(spec.family, spec.genus, spec.punctures,
                             mutations=(Subdivide(count=1 + i % 3, seed=i),
                                        Relabel(seed=i)))
        corpus.append((mutated, generate(mutated)))
    small = [s for s in singles
             if (s.genus <= 2 and s.punctures <= 2)]
    for i in range(110):
        count = rng.randint(2, 6)
        parts = tuple(rng.choice(small) for _ in range(count))
        spec = FamilySpec("union", components=parts,
                          mutations=(Relabel(seed=1000 + i),))
        corpus.append((spec, generate(spec)))
    return corpus


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def closed_corpus(corpus):
    """Connected members without boundary, for mutation fuzzing."""
    from surfclass.generate import closed_form_triples
    out = []
    for spec, tri in corpus:
        if spec.family == "union":
            continue
        triples = closed_form_triples(spec)
        if all(t.b == 0 for t in triples):
            out.append((spec, tri))
    return out
