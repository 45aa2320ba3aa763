"""Cell subdivisions of grid graphs and the obstruction machinery.

Subdividing a cell adds one apex vertex adjacent to the cell's three
corners.  Apex labels are stable strings of the form ``P@Up(x,y)`` /
``P@Down(x,y)`` so exports diff cleanly across runs.

For exact direction arithmetic every vertex also has *tri-coordinates*
(lattice coordinates scaled by three): a grid vertex ``(x, y)`` maps to
``(3x, 3y)`` and the apex of a cell to the integer centroid of its
corners.  Apexes of Up cells get ``(3x+1, 3y+1)``, of Down cells
``(3x+2, 3y+2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .graphs import Graph, edge, make_graph, vertex_key
from .grid import DOWN, INTERIOR, UP, CellRef, GridCoord, TriGridGraph, classify_cell
from .orientations import SearchOutcome, find_semi_transitive_orientation

DEFAULT_BUDGET = 10_000_000

_APEX_RE = re.compile(r"^P@(Up|Down)\((-?\d+),(-?\d+)\)$")


def apex_label(c: CellRef) -> str:
    return f"P@{c.pointing}({c.x},{c.y})"


def parse_apex_label(label: str) -> CellRef | None:
    m = _APEX_RE.match(label)
    if not m:
        return None
    return CellRef(m.group(1), int(m.group(2)), int(m.group(3)))


def tri_coords(v) -> tuple[int, int]:
    """Exact scaled-by-three lattice coordinates of a vertex or apex."""
    if isinstance(v, GridCoord):
        return (3 * v.x, 3 * v.y)
    if isinstance(v, str):
        cell = parse_apex_label(v)
        if cell is not None:
            if cell.pointing == UP:
                return (3 * cell.x + 1, 3 * cell.y + 1)
            return (3 * cell.x + 2, 3 * cell.y + 2)
    raise ValueError(f"no lattice position for vertex {v!r}")


def tri_cartesian(v) -> tuple[float, float]:
    """Cartesian position of a grid vertex or apex (layout only)."""
    tx, ty = tri_coords(v)
    return ((tx + ty / 2.0) / 3.0, ty * 0.8660254037844386 / 3.0)


@dataclass(frozen=True)
class SubdividedGraph:
    """A grid graph together with a set of subdivided cells."""

    base: TriGridGraph
    subdivided_set: frozenset

    @cached_property
    def graph(self) -> Graph:
        vertices = set(self.base.vertices)
        edges = set(self.base.edges)
        for cell in self.subdivided_set:
            apex = apex_label(cell)
            vertices.add(apex)
            for corner in cell.corners():
                edges.add(edge(apex, corner))
        return Graph(frozenset(vertices), frozenset(edges))

    @cached_property
    def apexes(self) -> dict:
        return {cell: apex_label(cell) for cell in sorted(self.subdivided_set)}


def subdivide(g: TriGridGraph, cells: Iterable[CellRef]) -> SubdividedGraph:
    """Subdivide the given belonging cells of g."""
    cells = frozenset(cells)
    stray = cells - g.belonging_cells
    if stray:
        raise ValueError(f"cells do not belong to the graph: {sorted(stray)!r}")
    return SubdividedGraph(g, cells)


def max_subdivision(g: TriGridGraph) -> SubdividedGraph:
    """Subdivide every boundary cell of g."""
    return SubdividedGraph(g, g.boundary_cells)


def has_interior_subdivision(sg: SubdividedGraph) -> bool:
    return any(
        classify_cell(sg.base, c) == INTERIOR for c in sg.subdivided_set
    )


def is_word_representable(sg: SubdividedGraph) -> bool:
    """Decide representability of a subdivision from its subdivided set.

    A subdivision is word-representable exactly when no interior cell is
    subdivided; cross_validate re-earns this equivalence by search.
    """
    return not has_interior_subdivision(sg)


def minimal_obstruction() -> Graph:
    """The 7-vertex minimal non-word-representable subdivision.

    A three-level triangle with its central (interior) cell subdivided.
    """
    base = TriGridGraph(
        frozenset({CellRef(UP, 0, 0), CellRef(UP, 1, 0), CellRef(UP, 0, 1), CellRef(DOWN, 0, 0)})
    )
    return subdivide(base, {CellRef(DOWN, 0, 0)}).graph


@dataclass(frozen=True)
class MatchOutcome:
    status: str  # "found" | "absent" | "budget"
    mapping: tuple | None  # sorted (pattern vertex, host vertex) pairs
    nodes_expanded: int

    @property
    def found(self) -> bool:
        return self.status == "found"

    def as_dict(self) -> dict:
        return dict(self.mapping) if self.mapping is not None else {}


def find_induced_pattern(
    pattern: Graph, host: Graph, budget: int = DEFAULT_BUDGET
) -> MatchOutcome:
    """Backtracking search for an induced copy of pattern inside host.

    Candidates are filtered by degree and by dominance of the sorted
    neighbor-degree sequence before the usual consistency backtracking.
    """
    if budget <= 0:
        raise ValueError(f"budget must be positive, got {budget}")
    if len(pattern.vertices) > len(host.vertices):
        return MatchOutcome("absent", None, 0)

    p_order = _match_order(pattern)
    h_vertices = host.sorted_vertices

    def nds(g: Graph, v) -> list[int]:
        return sorted((g.degree(u) for u in g.neighbors(v)), reverse=True)

    def dominates(hseq: list[int], pseq: list[int]) -> bool:
        if len(hseq) < len(pseq):
            return False
        it = iter(hseq)
        for need in pseq:
            for got in it:
                if got >= need:
                    break
            else:
                return False
        return True

    candidates = {}
    for pv in p_order:
        pdeg, pnds = pattern.degree(pv), nds(pattern, pv)
        cs = [
            hv
            for hv in h_vertices
            if host.degree(hv) >= pdeg and dominates(nds(host, hv), pnds)
        ]
        if not cs:
            return MatchOutcome("absent", None, 0)
        candidates[pv] = cs

    mapping: dict = {}
    used: set = set()
    nodes = 0
    budget_hit = False

    def extend(k: int) -> bool:
        nonlocal nodes, budget_hit
        if k == len(p_order):
            return True
        pv = p_order[k]
        for hv in candidates[pv]:
            if hv in used:
                continue
            nodes += 1
            if nodes > budget:
                budget_hit = True
                return False
            ok = True
            for qv, qh in mapping.items():
                if pattern.has_edge(pv, qv) != host.has_edge(hv, qh):
                    ok = False
                    break
            if not ok:
                continue
            mapping[pv] = hv
            used.add(hv)
            if extend(k + 1):
                return True
            if budget_hit:
                return False
            del mapping[pv]
            used.remove(hv)
        return False

    if extend(0):
        pairs = tuple(sorted(mapping.items(), key=lambda kv: vertex_key(kv[0])))
        return MatchOutcome("found", pairs, nodes)
    if budget_hit:
        return MatchOutcome("budget", None, nodes)
    return MatchOutcome("absent", None, nodes)


def _match_order(pattern: Graph) -> list:
    """Pattern vertices ordered to fail fast: dense and connected first."""
    remaining = set(pattern.vertices)
    order: list = []
    while remaining:
        best = max(
            remaining,
            key=lambda v: (
                sum(1 for u in pattern.neighbors(v) if u in set(order)),
                pattern.degree(v),
                vertex_key(v),
            ),
        )
        order.append(best)
        remaining.remove(best)
    return order


@dataclass(frozen=True)
class CrossValidationReport:
    """Joint verdicts from the decision rule, the orientation search,
    and the obstruction matcher."""

    rule_representable: bool
    orientation: SearchOutcome
    obstruction: MatchOutcome
    verdict: str  # "consistent" | "inconsistent" | "inconclusive"

    @property
    def consistent(self) -> bool:
        return self.verdict == "consistent"


def cross_validate(sg: SubdividedGraph, budget: int = DEFAULT_BUDGET) -> CrossValidationReport:
    """Run all three representability routes and compare them."""
    rule = is_word_representable(sg)
    search = find_semi_transitive_orientation(sg.graph, budget=budget)
    match = find_induced_pattern(minimal_obstruction(), sg.graph, budget=budget)
    if search.status == "budget" or match.status == "budget":
        verdict = "inconclusive"
    elif rule == search.found == (not match.found):
        verdict = "consistent"
    else:
        verdict = "inconsistent"
    return CrossValidationReport(rule, search, match, verdict)
