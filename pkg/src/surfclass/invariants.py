"""The complete invariant of a connected surface: (o, chi, b).

o is 0 for orientable and 1 for non-orientable, decided by whether the
orientation double cover stays connected.  chi = |V| - |E| + n with
|E| = (3n + x)/2 for x boundary edges and |V| the component count of the
vertex identification graph K.  b = k' - k + x, where k and k' count
components of K and of the boundary identification graph K'.
"""

from __future__ import annotations

from typing import NamedTuple

from .engine import BaselineEngine
from .errors import NotConnected, ParityError


class InvariantTriple(NamedTuple):
    o: int
    chi: int
    b: int


def _require_connected(tri, engine):
    components = engine.count_components(engine.dual_graph(tri))
    if components != 1:
        raise NotConnected(f"surface has {components} components, expected 1")


def orientability(tri, engine=None) -> int:
    """0 if the double cover splits in two, 1 if it stays connected."""
    engine = engine if engine is not None else BaselineEngine()
    _require_connected(tri, engine)
    cover_components = engine.count_components(engine.cover_dual_graph(tri))
    assert cover_components in (1, 2), \
        f"double cover of a connected surface has {cover_components} components"
    return 0 if cover_components == 2 else 1


def euler_characteristic(tri, engine=None) -> int:
    """|V| - |E| + n; additive over components, so connectivity not required."""
    engine = engine if engine is not None else BaselineEngine()
    x = engine.boundary_edges(tri)
    doubled = 3 * tri.n + x
    if doubled % 2:
        raise ParityError(f"3n + x = {doubled} is odd; table cannot be a surface")
    edges = doubled // 2
    vertices = engine.count_components(engine.vertex_graph(tri))
    return vertices - edges + tri.n


def boundary_components(tri, engine=None) -> int:
    """Number of boundary circles: k' - k + x."""
    engine = engine if engine is not None else BaselineEngine()
    k = engine.count_components(engine.vertex_graph(tri))
    kprime = engine.count_components(engine.boundary_graph(tri))
    x = engine.boundary_edges(tri)
    b = kprime - k + x
    assert b >= 0, f"negative boundary count k'={kprime} k={k} x={x}"
    return b


def invariant_triple(tri, engine=None) -> InvariantTriple:
    """(orientability, Euler characteristic, boundary count) of a connected surface."""
    engine = engine if engine is not None else BaselineEngine()
    return InvariantTriple(
        orientability(tri, engine),
        euler_characteristic(tri, engine),
        boundary_components(tri, engine),
    )
