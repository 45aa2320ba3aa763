"""Total orientations of simple graphs and semi-transitivity decisions.

An orientation is *semi-transitive* when it is acyclic and contains no
shortcut: a directed path v1 -> ... -> vk together with the arc
v1 -> vk such that some arc vi -> vj (i < j) is missing.  Any shortcut
needs at least four vertices.

The shortcut test works on the transitive closure: an acyclic digraph
has a shortcut iff some arc u -> v admits an ordered pair (a, b) with
a != b, arc a -> b absent, and reachabilities u => a, a => b, b => v
(equality allowed at u = a or b = v).  Concatenating the three
reachability paths yields a *simple* path because vertices along any
directed walk in a DAG strictly increase in topological order; the arc
u -> v then closes the shortcut.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .graphs import Graph, edge, vertex_key

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class OrientedGraph:
    """A total orientation: exactly one arc per base edge."""

    base: Graph
    arcs: frozenset

    @cached_property
    def sorted_arcs(self) -> tuple:
        return tuple(sorted(self.arcs, key=lambda a: (vertex_key(a[0]), vertex_key(a[1]))))

    @cached_property
    def out_adjacency(self) -> dict:
        out: dict = {v: set() for v in self.base.vertices}
        for t, h in self.arcs:
            out[t].add(h)
        return {v: frozenset(ns) for v, ns in out.items()}

    def has_arc(self, t, h) -> bool:
        return (t, h) in self.arcs


def orient(base: Graph, arcs: Iterable[tuple]) -> OrientedGraph:
    """Validate and build an orientation of the base graph."""
    arcset = frozenset(tuple(a) for a in arcs)
    seen = set()
    for t, h in arcset:
        e = edge(t, h)
        if e not in base.edges:
            raise ValueError(f"arc {t!r} -> {h!r} is not over a base edge")
        if e in seen:
            raise ValueError(f"edge {e!r} oriented twice")
        seen.add(e)
    if len(seen) != len(base.edges):
        missing = set(base.edges) - seen
        raise ValueError(f"unoriented edges: {sorted(missing)!r}")
    return OrientedGraph(base, arcset)


def reverse_all(d: OrientedGraph) -> OrientedGraph:
    """Reverse every arc."""
    return OrientedGraph(d.base, frozenset((h, t) for t, h in d.arcs))


@dataclass(frozen=True)
class ShortcutWitness:
    """A directed path whose end chord is present but a middle arc is not."""

    path: tuple
    missing: tuple

    @property
    def chord(self) -> tuple:
        return (self.path[0], self.path[-1])


class _Indexed:
    """Bitset view of an orientation under the canonical vertex order."""

    def __init__(self, d: OrientedGraph):
        self.order = d.base.sorted_vertices
        self.index = {v: i for i, v in enumerate(self.order)}
        n = len(self.order)
        self.n = n
        self.out = [0] * n
        self.nonadjacent = [0] * n
        full = (1 << n) - 1
        for t, h in d.arcs:
            self.out[self.index[t]] |= 1 << self.index[h]
        for i, v in enumerate(self.order):
            mask = 1 << i
            for u in d.base.neighbors(v):
                mask |= 1 << self.index[u]
            self.nonadjacent[i] = full & ~mask

    def topo_order(self) -> list[int] | None:
        """Vertex indices in topological order, or None if cyclic."""
        indeg = [0] * self.n
        for i in range(self.n):
            m = self.out[i]
            while m:
                b = m & -m
                indeg[b.bit_length() - 1] += 1
                m ^= b
        ready = [i for i in range(self.n) if indeg[i] == 0]
        order = []
        while ready:
            i = ready.pop()
            order.append(i)
            m = self.out[i]
            while m:
                b = m & -m
                j = b.bit_length() - 1
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
                m ^= b
        return order if len(order) == self.n else None

    def closures(self, topo: list[int]) -> tuple[list[int], list[int]]:
        """Descendant and ancestor bitmasks (both include the vertex)."""
        reach = [0] * self.n
        for i in reversed(topo):
            r = 1 << i
            m = self.out[i]
            while m:
                b = m & -m
                r |= reach[b.bit_length() - 1]
                m ^= b
            reach[i] = r
        anc = [1 << i for i in range(self.n)]
        for i in topo:
            m = self.out[i]
            while m:
                b = m & -m
                anc[b.bit_length() - 1] |= anc[i]
                m ^= b
        return reach, anc


def find_cycle(d: OrientedGraph) -> tuple | None:
    """A directed cycle as a vertex tuple (first = last omitted), or None."""
    ix = _Indexed(d)
    if ix.topo_order() is not None:
        return None
    WHITE, GRAY, BLACK = 0, 1, 2
    color = [WHITE] * ix.n
    parent = [-1] * ix.n

    def succs(i):
        m = ix.out[i]
        out = []
        while m:
            b = m & -m
            out.append(b.bit_length() - 1)
            m ^= b
        return out

    for start in range(ix.n):
        if color[start] != WHITE:
            continue
        stack = [(start, iter(succs(start)))]
        color[start] = GRAY
        while stack:
            i, it = stack[-1]
            advanced = False
            for j in it:
                if color[j] == GRAY:
                    cyc = [j]
                    k = i
                    while k != j:
                        cyc.append(k)
                        k = parent[k]
                    cyc.reverse()
                    return tuple(ix.order[k] for k in cyc)
                if color[j] == WHITE:
                    color[j] = GRAY
                    parent[j] = i
                    stack.append((j, iter(succs(j))))
                    advanced = True
                    break
            if not advanced:
                color[i] = BLACK
                stack.pop()
    raise AssertionError("unreachable: cyclic digraph with no cycle found")


def is_acyclic(d: OrientedGraph) -> bool:
    return _Indexed(d).topo_order() is not None


def _dag_path(ix: _Indexed, reach: list[int], s: int, t: int) -> list[int]:
    """A directed path s => t choosing the smallest next vertex each step."""
    path = [s]
    cur = s
    while cur != t:
        m = ix.out[cur] & ((1 << ix.n) - 1)
        step = None
        while m:
            b = m & -m
            j = b.bit_length() - 1
            if reach[j] & (1 << t):
                step = j
                break
            m ^= b
        if step is None:
            raise AssertionError("reachability claimed but no path found")
        path.append(step)
        cur = step
    return path


def find_shortcut(d: OrientedGraph) -> ShortcutWitness | None:
    """The canonical shortcut witness of an acyclic orientation, if any.

    Scans arcs, then candidate missing pairs, in the canonical vertex
    order, so the reported witness is the least one under that order.
    """
    ix = _Indexed(d)
    topo = ix.topo_order()
    if topo is None:
        raise ValueError("find_shortcut requires an acyclic orientation")
    reach, anc = ix.closures(topo)
    for t, h in d.sorted_arcs:
        u, v = ix.index[t], ix.index[h]
        am = reach[u]
        while am:
            ab = am & -am
            a = ab.bit_length() - 1
            am ^= ab
            mask = reach[a] & anc[v] & ~ix.out[a] & ~(1 << a)
            if mask:
                b = (mask & -mask).bit_length() - 1
                left = _dag_path(ix, reach, u, a)
                mid = _dag_path(ix, reach, a, b)
                right = _dag_path(ix, reach, b, v)
                idx_path = left + mid[1:] + right[1:]
                path = tuple(ix.order[i] for i in idx_path)
                return ShortcutWitness(path, (ix.order[a], ix.order[b]))
    return None


def is_semi_transitive(d: OrientedGraph) -> bool:
    """Acyclic and shortcut-free."""
    return is_acyclic(d) and find_shortcut(d) is None


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # "found" | "exhausted" | "budget"
    orientation: OrientedGraph | None
    nodes_expanded: int
    prunes: int

    @property
    def found(self) -> bool:
        return self.status == "found"


def find_semi_transitive_orientation(
    g: Graph, budget: int = DEFAULT_BUDGET
) -> SearchOutcome:
    """Backtracking search for a semi-transitive orientation.

    Edges are processed densest-first (by endpoint degree sum); the
    first edge's direction is pinned, which is sound because reversing
    every arc preserves semi-transitivity.  A branch is cut as soon as
    the partial orientation has a directed cycle or a shortcut pattern
    whose missing pair is a non-edge of the base graph; such patterns
    survive any completion.  "exhausted" is therefore conclusive: no
    orientation of g is semi-transitive.
    """
    if budget <= 0:
        raise ValueError(f"budget must be positive, got {budget}")
    order = g.sorted_vertices
    index = {v: i for i, v in enumerate(order)}
    n = len(order)
    full = (1 << n) - 1

    adj_mask = [0] * n
    for u, v in g.edges:
        adj_mask[index[u]] |= 1 << index[v]
        adj_mask[index[v]] |= 1 << index[u]
    nonedge = [full & ~(adj_mask[i] | (1 << i)) for i in range(n)]

    def degsum(e):
        return g.degree(e[0]) + g.degree(e[1])

    edges = sorted(
        g.sorted_edges, key=lambda e: (-degsum(e), vertex_key(e[0]), vertex_key(e[1]))
    )
    m = len(edges)
    if m == 0:
        empty = OrientedGraph(g, frozenset())
        return SearchOutcome("found", empty, 0, 0)

    # reach[i]on/anc[i]: descendants/ancestors including i, under the
    # partial orientation; updated in place, snapshotted per level.
    reach = [1 << i for i in range(n)]
    anc = [1 << i for i in range(n)]
    out = [0] * n
    arcs: list[tuple[int, int]] = []
    nodes = 0
    prunes = 0
    budget_hit = False

    def has_hard_shortcut() -> bool:
        for t, h in arcs:
            am = reach[t]
            while am:
                ab = am & -am
                a = ab.bit_length() - 1
                am ^= ab
                if reach[a] & anc[h] & nonedge[a]:
                    return True
        return False

    def attempt(level: int) -> OrientedGraph | None:
        nonlocal nodes, prunes, budget_hit
        if level == m:
            found = OrientedGraph(
                g, frozenset((order[t], order[h]) for t, h in arcs)
            )
            assert is_semi_transitive(found)
            return found
        a, b = edges[level]
        i, j = index[a], index[b]
        directions = ((i, j),) if level == 0 else ((i, j), (j, i))
        for t, h in directions:
            nodes += 1
            if nodes > budget:
                budget_hit = True
                return None
            if reach[h] & (1 << t):  # arc would close a directed cycle
                prunes += 1
                continue
            saved_reach = reach[:]
            saved_anc = anc[:]
            out[t] |= 1 << h
            arcs.append((t, h))
            tb, hb = 1 << t, 1 << h
            new_desc = reach[h]
            new_anc = anc[t]
            for x in range(n):
                if reach[x] & tb:
                    reach[x] |= new_desc
                if anc[x] & hb:
                    anc[x] |= new_anc
            if has_hard_shortcut():
                prunes += 1
            else:
                found = attempt(level + 1)
                if found is not None or budget_hit:
                    return found
            arcs.pop()
            out[t] &= ~hb
            reach[:] = saved_reach
            anc[:] = saved_anc
        return None

    found = attempt(0)
    if found is not None:
        return SearchOutcome("found", found, nodes, prunes)
    if budget_hit:
        return SearchOutcome("budget", None, nodes, prunes)
    return SearchOutcome("exhausted", None, nodes, prunes)


def orient_by_coloring(g: Graph, coloring: dict) -> OrientedGraph:
    """Direct every edge from the lower to the higher color class."""
    for u, v in g.edges:
        if coloring[u] == coloring[v]:
            raise ValueError(f"coloring is not proper on edge {u!r} -- {v!r}")
    return OrientedGraph(
        g,
        frozenset(
            (u, v) if coloring[u] < coloring[v] else (v, u) for u, v in g.edges
        ),
    )


def all_orientations(g: Graph):
    """Yield every total orientation of g (2^|E| of them)."""
    edges = g.sorted_edges
    m = len(edges)
    for bits in range(1 << m):
        yield OrientedGraph(
            g,
            frozenset(
                (u, v) if bits >> k & 1 == 0 else (v, u)
                for k, (u, v) in enumerate(edges)
            ),
        )
