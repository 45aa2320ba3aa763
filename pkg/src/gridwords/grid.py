"""Triangular-lattice geometry and triangular grid graphs.

Lattice convention
------------------
A lattice point ``(x, y)`` sits at Cartesian ``(x + y/2, y*sqrt(3)/2)``,
so two points are adjacent exactly when ``(dx, dy)`` is one of
``(+-1, 0), (0, +-1), (1, -1), (-1, 1)``.

Cells are addressed by an anchor point plus a pointing flag:

* ``Up(x, y)`` has corners ``(x, y), (x+1, y), (x, y+1)``;
* ``Down(x, y)`` has corners ``(x+1, y), (x, y+1), (x+1, y+1)``.

A grid graph is determined by a set of specified cells: its edges are
all cell sides, its vertices all side endpoints.  A cell *belongs* to
the graph when all three of its sides are edges (specified or implied).
An edge is *boundary* when exactly one of its two incident lattice
cells belongs, *interior* when both do.

Boundary-edge types
-------------------
Each boundary edge gets one of six types from its direction class and
the side its unique belonging cell lies on:

=============  =================   ====
direction      belonging cell on   type
=============  =================   ====
horizontal     above               S
horizontal     below               N
rising  60deg  south-east side     NW
rising  60deg  north-west side     SE
falling 120deg south-west side     NE
falling 120deg north-east side     SW
=============  =================   ====

All graph logic uses exact integer coordinates; Cartesian values are
for layout export only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .graphs import Graph, edge

UP = "Up"
DOWN = "Down"

BOUNDARY = "boundary"
INTERIOR = "interior"

#: The six boundary-edge types in their canonical order.
BOUNDARY_TYPES = ("S", "SE", "NE", "N", "NW", "SW")


class GridCoord(NamedTuple):
    x: int
    y: int


class CellRef(NamedTuple):
    pointing: str
    x: int
    y: int

    @property
    def anchor(self) -> GridCoord:
        return GridCoord(self.x, self.y)

    def corners(self) -> tuple[GridCoord, GridCoord, GridCoord]:
        x, y = self.x, self.y
        if self.pointing == UP:
            return (GridCoord(x, y), GridCoord(x + 1, y), GridCoord(x, y + 1))
        return (GridCoord(x + 1, y), GridCoord(x, y + 1), GridCoord(x + 1, y + 1))

    def sides(self) -> tuple[tuple, tuple, tuple]:
        a, b, c = self.corners()
        return (edge(a, b), edge(a, c), edge(b, c))


def Up(x: int, y: int) -> CellRef:
    return CellRef(UP, x, y)


def Down(x: int, y: int) -> CellRef:
    return CellRef(DOWN, x, y)


def cartesian(c: GridCoord) -> tuple[float, float]:
    """Cartesian embedding of a lattice point (layout only)."""
    return (c.x + c.y / 2.0, c.y * math.sqrt(3.0) / 2.0)


def adjacent(u: GridCoord, v: GridCoord) -> bool:
    return (v.x - u.x, v.y - u.y) in {(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)}


def incident_cells(e: tuple) -> tuple[tuple[CellRef, str], tuple[CellRef, str]]:
    """The two lattice cells flanking a lattice edge.

    Returns ``((cell, type), (cell, type))`` where each type is the
    boundary type the edge would get if that cell were the belonging one.
    """
    u, v = e
    dx, dy = v.x - u.x, v.y - u.y
    if dy == 0 and abs(dx) == 1:  # horizontal
        x, y = min(u.x, v.x), u.y
        return ((Up(x, y), "S"), (Down(x, y - 1), "N"))
    if dx == 0 and abs(dy) == 1:  # rising (60 degrees)
        x, y = u.x, min(u.y, v.y)
        return ((Up(x, y), "NW"), (Down(x - 1, y), "SE"))
    if (dx, dy) in {(1, -1), (-1, 1)}:  # falling (120 degrees)
        x, y = min(u.x, v.x), min(u.y, v.y)
        return ((Up(x, y), "NE"), (Down(x, y), "SW"))
    raise ValueError(f"not a lattice edge: {u!r} -- {v!r}")


@dataclass(frozen=True)
class TriGridGraph:
    """A finite triangular grid graph given by its specified cells.

    ``isolated_vertices`` admits degenerate single-point graphs that no
    cell set can produce (a one-level triangle is a lone vertex).
    """

    specified_cells: frozenset
    isolated_vertices: frozenset = frozenset()

    @cached_property
    def edges(self) -> frozenset:
        return frozenset(s for c in self.specified_cells for s in c.sides())

    @cached_property
    def vertices(self) -> frozenset:
        vs = {p for e in self.edges for p in e}
        return frozenset(vs | set(self.isolated_vertices))

    @cached_property
    def belonging_cells(self) -> frozenset:
        candidates = set(self.specified_cells)
        for e in self.edges:
            for cell, _ in incident_cells(e):
                candidates.add(cell)
        return frozenset(c for c in candidates if all(s in self.edges for s in c.sides()))

    @cached_property
    def graph(self) -> Graph:
        return Graph(self.vertices, self.edges)

    @cached_property
    def boundary_cells(self) -> frozenset:
        return frozenset(c for c in self.belonging_cells if classify_cell(self, c) == BOUNDARY)

    def sorted_cells(self) -> list[CellRef]:
        return sorted(self.belonging_cells)


def build_grid_graph(cells: Iterable[CellRef]) -> TriGridGraph:
    """Grid graph formed by all edges surrounding the given cells."""
    return TriGridGraph(frozenset(cells))


def classify_edge(g: TriGridGraph, e: tuple) -> str:
    """BOUNDARY or INTERIOR, by how many incident cells belong to g."""
    if e not in g.edges:
        raise ValueError(f"edge not in graph: {e!r}")
    count = sum(cell in g.belonging_cells for cell, _ in incident_cells(e))
    if count == 0:
        raise AssertionError(f"edge {e!r} bounds no belonging cell")
    return BOUNDARY if count == 1 else INTERIOR


def classify_cell(g: TriGridGraph, c: CellRef) -> str:
    """BOUNDARY if the cell has a boundary edge, else INTERIOR."""
    if c not in g.belonging_cells:
        raise ValueError(f"cell does not belong to graph: {c!r}")
    if any(classify_edge(g, s) == BOUNDARY for s in c.sides()):
        return BOUNDARY
    return INTERIOR


def boundary_type(g: TriGridGraph, e: tuple) -> str:
    """The type (S, SE, NE, N, NW, SW) of a boundary edge."""
    if classify_edge(g, e) != BOUNDARY:
        raise ValueError(f"interior edge has no boundary type: {e!r}")
    for cell, kind in incident_cells(e):
        if cell in g.belonging_cells:
            return kind
    raise AssertionError("unreachable: boundary edge with no belonging cell")


def property_set(g: TriGridGraph, c: CellRef) -> frozenset:
    """Types of the boundary edges of a belonging cell (empty if interior)."""
    if c not in g.belonging_cells:
        raise ValueError(f"cell does not belong to graph: {c!r}")
    return frozenset(
        boundary_type(g, s) for s in c.sides() if classify_edge(g, s) == BOUNDARY
    )


def three_coloring(g: TriGridGraph) -> dict:
    """A proper 3-coloring: the color of (x, y) is (x - y) mod 3."""
    return {v: (v.x - v.y) % 3 for v in g.vertices}
