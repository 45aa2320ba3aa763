"""The line-oriented graph document format.

A document begins with the header line ``gridwords 1`` followed by a
``kind`` line and one directive per line.  Vertex tokens are ``x,y``
for lattice points, ``P@Up(x,y)`` / ``P@Down(x,y)`` for apexes, and
bare tokens (no whitespace) for generic labels.

    gridwords 1
    kind grid | subdivided | generic | oriented
    base grid | subdivided | generic      (oriented only)
    cell Up 0 0                           (grid-like kinds)
    isolated 0 0
    subdivided Down 0 0                   (subdivided kinds)
    vertex a                              (generic kinds)
    edge a b
    arc a b                               (oriented only)
    label 1 0 0
    label 8 apex Up 0 0

Emission is canonical (everything sorted), so parse-then-emit is a
fixed point of emit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .graphs import Graph, edge, make_graph, vertex_key
from .grid import DOWN, UP, CellRef, GridCoord, TriGridGraph
from .orientations import OrientedGraph, orient
from .subdivision import SubdividedGraph, apex_label, parse_apex_label, subdivide

FORMAT_VERSION = 1

KINDS = ("grid", "subdivided", "generic", "oriented")

_COORD_RE = re.compile(r"^(-?\d+),(-?\d+)$")
_TOKEN_RE = re.compile(r"^\S+$")


class GraphDocumentError(ValueError):
    """Malformed document; carries the 1-based offending line number."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


def vertex_token(v) -> str:
    if isinstance(v, GridCoord):
        return f"{v.x},{v.y}"
    token = str(v)
    if not _TOKEN_RE.match(token):
        raise ValueError(f"vertex label {v!r} is not a valid token")
    return token


def parse_vertex_token(token: str):
    m = _COORD_RE.match(token)
    if m:
        return GridCoord(int(m.group(1)), int(m.group(2)))
    apex = parse_apex_label(token)
    if apex is not None:
        return token  # apex labels stay strings
    return token


@dataclass
class GraphDocument:
    kind: str
    cells: frozenset = frozenset()
    isolated: frozenset = frozenset()
    subdivided: frozenset = frozenset()
    vertices: frozenset = frozenset()  # generic kinds only
    edges: frozenset = frozenset()  # generic kinds only
    arcs: frozenset = frozenset()  # oriented only
    base_kind: str | None = None  # oriented only
    labels: dict = field(default_factory=dict)

    # -- reconstruction ------------------------------------------------

    def structure_kind(self) -> str:
        return self.base_kind if self.kind == "oriented" else self.kind

    def to_grid(self) -> TriGridGraph:
        if self.structure_kind() not in ("grid", "subdivided"):
            raise ValueError(f"document of kind {self.kind!r} has no grid structure")
        return TriGridGraph(self.cells, self.isolated)

    def to_subdivided(self) -> SubdividedGraph:
        if self.structure_kind() != "subdivided":
            raise ValueError(f"document of kind {self.kind!r} is not a subdivision")
        return subdivide(self.to_grid(), self.subdivided)

    def to_graph(self) -> Graph:
        kind = self.structure_kind()
        if kind == "grid":
            return self.to_grid().graph
        if kind == "subdivided":
            return self.to_subdivided().graph
        return make_graph(self.vertices, self.edges)

    def to_oriented(self) -> OrientedGraph:
        if self.kind != "oriented":
            raise ValueError(f"document of kind {self.kind!r} is not an orientation")
        return orient(self.to_graph(), self.arcs)


def from_grid(g: TriGridGraph, labels: dict | None = None) -> GraphDocument:
    return GraphDocument(
        "grid", cells=g.specified_cells, isolated=g.isolated_vertices, labels=dict(labels or {})
    )


def from_subdivided(sg: SubdividedGraph, labels: dict | None = None) -> GraphDocument:
    return GraphDocument(
        "subdivided",
        cells=sg.base.specified_cells,
        isolated=sg.base.isolated_vertices,
        subdivided=sg.subdivided_set,
        labels=dict(labels or {}),
    )


def from_generic(g: Graph, labels: dict | None = None) -> GraphDocument:
    return GraphDocument(
        "generic", vertices=g.vertices, edges=g.edges, labels=dict(labels or {})
    )


def from_oriented(
    d: OrientedGraph,
    structure: TriGridGraph | SubdividedGraph | None = None,
    labels: dict | None = None,
) -> GraphDocument:
    doc = GraphDocument("oriented", arcs=d.arcs, labels=dict(labels or {}))
    if isinstance(structure, SubdividedGraph):
        doc.base_kind = "subdivided"
        doc.cells = structure.base.specified_cells
        doc.isolated = structure.base.isolated_vertices
        doc.subdivided = structure.subdivided_set
    elif isinstance(structure, TriGridGraph):
        doc.base_kind = "grid"
        doc.cells = structure.specified_cells
        doc.isolated = structure.isolated_vertices
    else:
        doc.base_kind = "generic"
        doc.vertices = d.base.vertices
        doc.edges = d.base.edges
    return doc


# -- emission ----------------------------------------------------------


def _cell_key(c: CellRef):
    return (c.x, c.y, 0 if c.pointing == UP else 1)


def emit(doc: GraphDocument) -> str:
    if doc.kind not in KINDS:
        raise ValueError(f"unknown document kind {doc.kind!r}")
    lines = [f"gridwords {FORMAT_VERSION}", f"kind {doc.kind}"]
    if doc.kind == "oriented":
        lines.append(f"base {doc.base_kind}")
    for c in sorted(doc.cells, key=_cell_key):
        lines.append(f"cell {c.pointing} {c.x} {c.y}")
    for v in sorted(doc.isolated):
        lines.append(f"isolated {v.x} {v.y}")
    for c in sorted(doc.subdivided, key=_cell_key):
        lines.append(f"subdivided {c.pointing} {c.x} {c.y}")
    if doc.structure_kind() == "generic":
        for v in sorted(doc.vertices, key=vertex_key):
            lines.append(f"vertex {vertex_token(v)}")
        for u, v in sorted(
            doc.edges, key=lambda e: (vertex_key(e[0]), vertex_key(e[1]))
        ):
            lines.append(f"edge {vertex_token(u)} {vertex_token(v)}")
    if doc.kind == "oriented":
        for t, h in sorted(
            doc.arcs, key=lambda a: (vertex_key(a[0]), vertex_key(a[1]))
        ):
            lines.append(f"arc {vertex_token(t)} {vertex_token(h)}")
    for name in sorted(doc.labels):
        v = doc.labels[name]
        if isinstance(v, GridCoord):
            lines.append(f"label {name} {v.x} {v.y}")
        else:
            cell = parse_apex_label(str(v))
            if cell is None:
                raise ValueError(f"label {name!r} maps to unsupported vertex {v!r}")
            lines.append(f"label {name} apex {cell.pointing} {cell.x} {cell.y}")
    return "\n".join(lines) + "\n"


# -- parsing -----------------------------------------------------------


def _parse_int(no: int, token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphDocumentError(no, f"expected an integer, got {token!r}") from None


def _parse_pointing(no: int, token: str) -> str:
    if token not in (UP, DOWN):
        raise GraphDocumentError(no, f"expected Up or Down, got {token!r}")
    return token


def parse(text: str) -> GraphDocument:
    lines = text.splitlines()
    items = [(no + 1, line.strip()) for no, line in enumerate(lines) if line.strip()]
    if not items:
        raise GraphDocumentError(1, "empty document")
    no, header = items[0]
    if header.split() != ["gridwords", str(FORMAT_VERSION)]:
        raise GraphDocumentError(no, f"bad header {header!r}")
    if len(items) < 2:
        raise GraphDocumentError(no, "missing kind line")
    no, kind_line = items[1]
    parts = kind_line.split()
    if len(parts) != 2 or parts[0] != "kind" or parts[1] not in KINDS:
        raise GraphDocumentError(no, f"bad kind line {kind_line!r}")
    doc = GraphDocument(parts[1])
    cells, isolated, subdivided = set(), set(), set()
    vertices, edges, arcs = set(), set(), set()
    for no, line in items[2:]:
        parts = line.split()
        directive, args = parts[0], parts[1:]
        if directive == "base":
            if doc.kind != "oriented" or len(args) != 1 or args[0] not in (
                "grid",
                "subdivided",
                "generic",
            ):
                raise GraphDocumentError(no, f"bad base line {line!r}")
            doc.base_kind = args[0]
        elif directive == "cell" and len(args) == 3:
            cells.add(
                CellRef(_parse_pointing(no, args[0]), _parse_int(no, args[1]), _parse_int(no, args[2]))
            )
        elif directive == "isolated" and len(args) == 2:
            isolated.add(GridCoord(_parse_int(no, args[0]), _parse_int(no, args[1])))
        elif directive == "subdivided" and len(args) == 3:
            subdivided.add(
                CellRef(_parse_pointing(no, args[0]), _parse_int(no, args[1]), _parse_int(no, args[2]))
            )
        elif directive == "vertex" and len(args) == 1:
            vertices.add(parse_vertex_token(args[0]))
        elif directive == "edge" and len(args) == 2:
            try:
                edges.add(edge(parse_vertex_token(args[0]), parse_vertex_token(args[1])))
            except ValueError as exc:
                raise GraphDocumentError(no, str(exc)) from None
        elif directive == "arc" and len(args) == 2:
            arcs.add((parse_vertex_token(args[0]), parse_vertex_token(args[1])))
        elif directive == "label" and len(args) == 3:
            doc.labels[args[0]] = GridCoord(_parse_int(no, args[1]), _parse_int(no, args[2]))
        elif directive == "label" and len(args) == 5 and args[1] == "apex":
            cell = CellRef(
                _parse_pointing(no, args[2]), _parse_int(no, args[3]), _parse_int(no, args[4])
            )
            doc.labels[args[0]] = apex_label(cell)
        else:
            raise GraphDocumentError(no, f"unknown or malformed directive {line!r}")
    doc.cells = frozenset(cells)
    doc.isolated = frozenset(isolated)
    doc.subdivided = frozenset(subdivided)
    doc.vertices = frozenset(vertices)
    doc.edges = frozenset(edges)
    doc.arcs = frozenset(arcs)
    _validate(doc)
    return doc


def _validate(doc: GraphDocument) -> None:
    kind = doc.kind
    if kind == "oriented" and doc.base_kind is None:
        raise GraphDocumentError(1, "oriented document missing base line")
    structure = doc.structure_kind()
    if structure == "generic" and (doc.cells or doc.subdivided or doc.isolated):
        raise GraphDocumentError(1, "generic document carries cell directives")
    if structure != "generic" and (doc.vertices or doc.edges):
        raise GraphDocumentError(1, "grid document carries vertex/edge directives")
    if structure != "subdivided" and doc.subdivided:
        raise GraphDocumentError(1, f"subdivided directive in document of kind {kind}")
    if kind != "oriented" and doc.arcs:
        raise GraphDocumentError(1, f"arc directive in document of kind {kind}")
    if structure == "subdivided":
        grid = doc.to_grid()
        stray = doc.subdivided - grid.belonging_cells
        if stray:
            raise GraphDocumentError(
                1, f"subdivided cells do not belong to the graph: {sorted(stray)!r}"
            )
    if kind == "oriented":
        try:
            doc.to_oriented()
        except ValueError as exc:
            raise GraphDocumentError(1, f"invalid orientation: {exc}") from None
    if doc.labels:
        known = doc.to_graph().vertices
        for name, v in doc.labels.items():
            if v not in known:
                raise GraphDocumentError(1, f"label {name!r} names unknown vertex {v!r}")
