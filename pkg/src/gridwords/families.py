"""Generators for the named graphs and parametric families.

Named graphs carry a label map from the conventional small-integer
vertex names to lattice coordinates (or apex labels) so figures and
command output can use the familiar names.

Conventions: the equilateral triangle family ``tn(n)`` counts its
horizontal lines, so ``tn(3)`` is the six-vertex triangle ``A``; it is
anchored at the origin with its south side on y = 0.  The gasket
``sg(n)`` is built recursively from ``sg(0) = {Up(0, 0)}`` by adding
translates by ``(2**n, 0)`` and ``(0, 2**n)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grid import CellRef, Down, GridCoord, TriGridGraph, Up, build_grid_graph
from .subdivision import SubdividedGraph, apex_label, max_subdivision, subdivide


@dataclass
class NamedGraph:
    name: str
    graph: TriGridGraph | SubdividedGraph
    labels: dict  # conventional name -> GridCoord or apex label

    @property
    def base(self) -> TriGridGraph:
        return self.graph.base if isinstance(self.graph, SubdividedGraph) else self.graph

    def vertex(self, name: str):
        return self.labels[name]

    def cell_by_corner_labels(self, names: str) -> CellRef:
        """The belonging cell whose corners carry the given label names."""
        want = {self.labels[c] for c in names}
        for cell in self.base.belonging_cells:
            if set(cell.corners()) == want:
                return cell
        raise ValueError(f"no belonging cell with corners {names!r}")


def gen_tn(n: int) -> TriGridGraph:
    """Equilateral-triangle grid graph with n horizontal lines."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n == 1:
        return TriGridGraph(frozenset(), frozenset({GridCoord(0, 0)}))
    m = n - 1
    cells = {Up(x, y) for x in range(m) for y in range(m) if x + y <= m - 1}
    cells |= {Down(x, y) for x in range(m) for y in range(m) if x + y <= m - 2}
    return build_grid_graph(cells)


def gen_an(n: int) -> SubdividedGraph:
    """Maximum subdivision of the n-line triangle."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return max_subdivision(gen_tn(n))


def gen_sg(n: int) -> TriGridGraph:
    """Stage-n gasket graph: 3/2*(3^n + 1) vertices, 3^(n+1) edges."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    cells = {Up(0, 0)}
    for stage in range(n):
        step = 2 ** stage
        cells = (
            cells
            | {Up(c.x + step, c.y) for c in cells}
            | {Up(c.x, c.y + step) for c in cells}
        )
    return build_grid_graph(cells)


NAMED = ("H", "K", "Kprime", "A", "Aprime", "Adoubleprime")

_ALIASES = {
    "h": "H",
    "k": "K",
    "kprime": "Kprime",
    "k'": "Kprime",
    "a": "A",
    "aprime": "Aprime",
    "a'": "Aprime",
    "adoubleprime": "Adoubleprime",
    "a''": "Adoubleprime",
}


def _labels_h() -> dict:
    return {
        "1": GridCoord(0, 0),
        "2": GridCoord(1, 0),
        "3": GridCoord(1, 1),
        "4": GridCoord(0, 2),
        "5": GridCoord(-1, 2),
        "6": GridCoord(-1, 1),
        "7": GridCoord(0, 1),
    }


def _labels_k() -> dict:
    return {
        "1": GridCoord(0, 0),
        "2": GridCoord(1, -1),
        "3": GridCoord(1, 0),
        "4": GridCoord(2, 0),
        "5": GridCoord(1, 1),
        "6": GridCoord(0, 2),
        "7": GridCoord(0, 1),
        "8": GridCoord(-1, 2),
        "9": GridCoord(-1, 1),
    }


def _labels_a() -> dict:
    return {
        "2": GridCoord(0, 1),
        "3": GridCoord(1, 1),
        "4": GridCoord(1, 0),
        "5": GridCoord(0, 2),
        "6": GridCoord(2, 0),
        "7": GridCoord(0, 0),
    }


def gen_named(name: str) -> NamedGraph:
    """Construct one of the named graphs with its label map."""
    key = _ALIASES.get(name.lower())
    if key is None:
        raise ValueError(f"unknown graph name {name!r} (known: {', '.join(NAMED)})")
    if key == "H":
        cells = {Up(0, 0), Down(0, 0), Up(0, 1), Down(-1, 1), Up(-1, 1), Down(-1, 0)}
        return NamedGraph("H", build_grid_graph(cells), _labels_h())
    if key == "K":
        cells = {Down(0, -1), Down(-1, 0), Up(1, 0), Up(0, 1), Up(-1, 1)}
        return NamedGraph("K", build_grid_graph(cells), _labels_k())
    if key == "Kprime":
        k = gen_named("K")
        sg = subdivide(k.base, {Down(0, -1), Up(0, 1)})
        return NamedGraph("Kprime", sg, dict(k.labels))
    if key == "A":
        return NamedGraph("A", gen_tn(3), _labels_a())
    if key == "Aprime":
        a = gen_named("A")
        sg = subdivide(a.base, {Up(0, 0), Up(1, 0)})
        return NamedGraph("Aprime", sg, dict(a.labels))
    a = gen_named("A")
    sg = subdivide(a.base, {Down(0, 0)})
    labels = dict(a.labels)
    labels["1"] = apex_label(Down(0, 0))
    return NamedGraph("Adoubleprime", sg, labels)
