"""Smart orientations of boundary subdivisions.

Grid edges and vertical apex spokes point left-to-right (horizontal) or
top-to-bottom (60, 90, 120 degrees).  The remaining low-slope apex
spokes are set per subdivided cell by one of six templates.  Writing
L, R for a cell's left/right corners, T/B for the top corner of an Up
cell / bottom corner of a Down cell, and P for the apex:

    A = {T->P, P->L, P->R}        a = {L->P, R->P, P->B}
    B = {T->P, L->P, R->P}        b = {P->L, P->R, P->B}
    C = {T->P, L->P, P->R}        c = {L->P, P->R, P->B}

In B the apex is a sink, in b a source.  A template is licensed for a
cell when its corresponding boundary type (A:NW, B:NE, C:S, a:SE, b:SW,
c:N) occurs in the cell's property set; only boundary cells may be
subdivided here, so every subdivided cell has a licensed template.

Arc classes
-----------
Every smart arc falls into one of eight direction classes.  With the
arc's tri-coordinate displacement (dX, dY) reduced via
(p, q) = (2*dX + dY, dY) / gcd, the classes are:

    a1 (-1,-1)  descending a 60-degree grid line
    a2 ( 1,-1)  descending a 120-degree grid line
    a3 ( 1, 0)  horizontal, left to right
    a4 ( 0,<0)  vertical spoke, downward
    a5 (-3,-1)  apex spoke toward lower-left
    a6 ( 3,-1)  apex spoke toward lower-right
    a7 ( 3, 1)  apex spoke toward upper-right
    a8 (-3, 1)  apex spoke toward upper-left
"""

from __future__ import annotations

from itertools import product
from math import gcd
from typing import Iterable, Iterator

from .grid import BOUNDARY_TYPES, DOWN, UP, CellRef, property_set
from .orientations import OrientedGraph
from .subdivision import SubdividedGraph, apex_label, tri_coords

UP_TEMPLATES = ("A", "B", "C")
DOWN_TEMPLATES = ("a", "b", "c")

#: Boundary type licensing each template.
TYPE_FOR_TEMPLATE = {"A": "NW", "B": "NE", "C": "S", "a": "SE", "b": "SW", "c": "N"}
TEMPLATE_FOR_TYPE = {t: tpl for tpl, t in TYPE_FOR_TEMPLATE.items()}


class InteriorSubdividedError(ValueError):
    def __init__(self, cell: CellRef):
        self.cell = cell
        super().__init__(f"subdivided interior cell {cell!r} admits no smart orientation")


class IllegalTemplateError(ValueError):
    def __init__(self, cell: CellRef, template: str, licensed_types: frozenset):
        self.cell = cell
        self.template = template
        super().__init__(
            f"template {template!r} is not licensed for cell {cell!r}"
            f" (property set {sorted(licensed_types)!r})"
        )


def template_for(boundary_type: str) -> str:
    """The template corresponding to a boundary-edge type."""
    return TEMPLATE_FOR_TYPE[boundary_type]


def default_choice(ps: Iterable[str]) -> str:
    """Template of the least licensed type under the canonical order."""
    ps = set(ps)
    if not ps:
        raise ValueError("empty property set has no licensed template")
    return template_for(min(ps, key=BOUNDARY_TYPES.index))


def template_arcs(cell: CellRef, template: str) -> tuple[tuple, tuple, tuple]:
    """The three apex arcs a template assigns inside a subdivided cell."""
    p = apex_label(cell)
    if cell.pointing == UP:
        if template not in UP_TEMPLATES:
            raise ValueError(f"template {template!r} does not apply to an Up cell")
        corner_l, corner_r, corner_t = cell.corners()
        return {
            "A": ((corner_t, p), (p, corner_l), (p, corner_r)),
            "B": ((corner_t, p), (corner_l, p), (corner_r, p)),
            "C": ((corner_t, p), (corner_l, p), (p, corner_r)),
        }[template]
    if template not in DOWN_TEMPLATES:
        raise ValueError(f"template {template!r} does not apply to a Down cell")
    corner_b, corner_l, corner_r = cell.corners()
    return {
        "a": ((corner_l, p), (corner_r, p), (p, corner_b)),
        "b": ((p, corner_l), (p, corner_r), (p, corner_b)),
        "c": ((corner_l, p), (p, corner_r), (p, corner_b)),
    }[template]


def grid_arc_direction(e: tuple) -> tuple:
    """Orient a grid edge or vertical spoke: rightward, else downward.

    Low-slope apex spokes are template business and are rejected here.
    """
    u, v = e
    (ux, uy), (vx, vy) = tri_coords(u), tri_coords(v)
    if uy == vy:
        if ux == vx:
            raise ValueError(f"degenerate edge {e!r}")
        return (u, v) if ux < vx else (v, u)
    if 2 * (ux - vx) + (uy - vy) != 0 and abs(uy - vy) < 3:
        raise ValueError(f"low-slope apex spoke is template-governed: {e!r}")
    return (u, v) if uy > vy else (v, u)


def licensed_templates(sg: SubdividedGraph) -> dict:
    """Sorted licensed templates for each subdivided cell."""
    return {
        cell: tuple(
            sorted(template_for(t) for t in property_set(sg.base, cell))
        )
        for cell in sorted(sg.subdivided_set)
    }


def smart_orient(sg: SubdividedGraph, choices: dict | None = None) -> OrientedGraph:
    """Build the smart orientation of a boundary subdivision.

    Grid edges follow the direction rule; each subdivided cell's apex
    arcs follow its chosen template (default: the least licensed type).
    The vertical spoke is covered by both authorities; the template is
    used and its agreement with the direction rule asserted.
    """
    for cell in sorted(sg.subdivided_set):
        if not property_set(sg.base, cell):  # empty property set <=> interior
            raise InteriorSubdividedError(cell)

    arcs = [grid_arc_direction(e) for e in sg.base.edges]
    choices = dict(choices or {})
    stray = set(choices) - sg.subdivided_set
    if stray:
        raise ValueError(f"template choices for unsubdivided cells: {sorted(stray)!r}")
    for cell in sorted(sg.subdivided_set):
        ps = property_set(sg.base, cell)
        template = choices.get(cell)
        if template is None:
            template = default_choice(ps)
        elif TYPE_FOR_TEMPLATE.get(template) not in ps:
            raise IllegalTemplateError(cell, template, ps)
        cell_arcs = template_arcs(cell, template)
        for t, h in cell_arcs:
            (tx, ty), (hx, hy) = tri_coords(t), tri_coords(h)
            if 2 * (hx - tx) + (hy - ty) == 0:  # vertical spoke: covered by both rules
                assert grid_arc_direction((t, h)) == (t, h)
        arcs.extend(cell_arcs)
    return OrientedGraph(sg.graph, frozenset(arcs))


def sweep_smart_orientations(sg: SubdividedGraph) -> Iterator[tuple[dict, OrientedGraph]]:
    """All smart orientations: the product of licensed templates per cell."""
    licensed = licensed_templates(sg)
    cells = sorted(licensed)
    for combo in product(*(licensed[c] for c in cells)):
        choice = dict(zip(cells, combo))
        yield choice, smart_orient(sg, choice)


ARC_CLASSES = ("a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8")

_CLASS_BY_DIRECTION = {
    (-1, -1): "a1",
    (1, -1): "a2",
    (1, 0): "a3",
    (0, -1): "a4",
    (-3, -1): "a5",
    (3, -1): "a6",
    (3, 1): "a7",
    (-3, 1): "a8",
}


def arc_class(arc: tuple) -> str:
    """Direction class of a smart arc (see module docstring table)."""
    t, h = arc
    (tx, ty), (hx, hy) = tri_coords(t), tri_coords(h)
    p, q = 2 * (hx - tx) + (hy - ty), hy - ty
    g = gcd(abs(p), abs(q))
    if g == 0:
        raise ValueError(f"degenerate arc {arc!r}")
    key = (p // g, q // g)
    if key not in _CLASS_BY_DIRECTION:
        raise ValueError(f"arc direction outside the eight smart classes: {arc!r}")
    return _CLASS_BY_DIRECTION[key]
