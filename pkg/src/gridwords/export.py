"""Figure export: DOT, hand-rolled SVG, and matplotlib bitmaps.

Layout comes from the exact lattice embedding; node positions are fixed
(`pos="x,y!"` in DOT), so rendered figures match the conventional
drawings.  Output is byte-deterministic for a fixed document.
"""

from __future__ import annotations

import math

from .documents import GraphDocument, vertex_token
from .graphs import vertex_key
from .grid import GridCoord
from .subdivision import parse_apex_label, tri_cartesian


def _positions(doc: GraphDocument) -> dict | None:
    """Vertex positions when every vertex has a lattice location."""
    pos = {}
    for v in doc.to_graph().vertices:
        if isinstance(v, GridCoord) or (isinstance(v, str) and parse_apex_label(v)):
            pos[v] = tri_cartesian(v)
        else:
            return None
    return pos


def _display_names(doc: GraphDocument) -> dict:
    names = {}
    for name, v in sorted(doc.labels.items()):
        names.setdefault(v, name)
    return names


def emit_dot(doc: GraphDocument) -> str:
    """Graphviz text with pinned positions (undirected or directed)."""
    g = doc.to_graph()
    directed = doc.kind == "oriented"
    pos = _positions(doc)
    names = _display_names(doc)
    lines = ["digraph G {" if directed else "graph G {", "  node [shape=circle];"]
    for v in sorted(g.vertices, key=vertex_key):
        attrs = []
        if v in names:
            attrs.append(f'label="{names[v]}"')
        if pos is not None:
            x, y = pos[v]
            attrs.append(f'pos="{x:.4f},{y:.4f}!"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f'  "{vertex_token(v)}"{suffix};')
    if directed:
        pairs = sorted(doc.arcs, key=lambda a: (vertex_key(a[0]), vertex_key(a[1])))
        connector = "->"
    else:
        pairs = sorted(g.edges, key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))
        connector = "--"
    for u, v in pairs:
        lines.append(f'  "{vertex_token(u)}" {connector} "{vertex_token(v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _bounds(pos: dict) -> tuple[float, float, float, float]:
    xs = [p[0] for p in pos.values()] or [0.0]
    ys = [p[1] for p in pos.values()] or [0.0]
    return min(xs), min(ys), max(xs), max(ys)


def emit_svg(doc: GraphDocument, scale: float = 80.0) -> str:
    """Self-contained SVG with straight edges and arrowheads."""
    g = doc.to_graph()
    directed = doc.kind == "oriented"
    pos = _positions(doc)
    if pos is None:
        pos = _fallback_layout(g)
    names = _display_names(doc)
    x0, y0, x1, y1 = _bounds(pos)
    margin = 0.5
    width = (x1 - x0 + 2 * margin) * scale
    height = (y1 - y0 + 2 * margin) * scale

    def sx(x: float) -> float:
        return (x - x0 + margin) * scale

    def sy(y: float) -> float:
        return height - (y - y0 + margin) * scale  # flip: svg y grows downward

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.2f} {height:.2f}">'
    ]
    pairs = (
        sorted(doc.arcs, key=lambda a: (vertex_key(a[0]), vertex_key(a[1])))
        if directed
        else sorted(g.edges, key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))
    )
    r = 0.07 * scale
    for u, v in pairs:
        ux, uy = sx(pos[u][0]), sy(pos[u][1])
        vx, vy = sx(pos[v][0]), sy(pos[v][1])
        out.append(
            f'<line x1="{ux:.2f}" y1="{uy:.2f}" x2="{vx:.2f}" y2="{vy:.2f}" '
            'stroke="black" stroke-width="1.5"/>'
        )
        if directed:
            out.append(_arrowhead(ux, uy, vx, vy, r))
    for v in sorted(g.vertices, key=vertex_key):
        x, y = sx(pos[v][0]), sy(pos[v][1])
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{r:.2f}" fill="black"/>')
        if v in names:
            out.append(
                f'<text x="{x + 1.6 * r:.2f}" y="{y - 1.6 * r:.2f}" '
                f'font-size="{0.22 * scale:.1f}">{names[v]}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _arrowhead(ux: float, uy: float, vx: float, vy: float, r: float) -> str:
    dx, dy = vx - ux, vy - uy
    norm = math.hypot(dx, dy) or 1.0
    dx, dy = dx / norm, dy / norm
    tipx, tipy = vx - 1.4 * r * dx, vy - 1.4 * r * dy
    size = 1.1 * r
    left = (tipx - size * dx + 0.5 * size * dy, tipy - size * dy - 0.5 * size * dx)
    right = (tipx - size * dx - 0.5 * size * dy, tipy - size * dy + 0.5 * size * dx)
    return (
        f'<polygon points="{tipx:.2f},{tipy:.2f} {left[0]:.2f},{left[1]:.2f} '
        f'{right[0]:.2f},{right[1]:.2f}" fill="black"/>'
    )


def _fallback_layout(g) -> dict:
    """Circular layout for generic graphs without lattice positions."""
    vs = sorted(g.vertices, key=vertex_key)
    n = max(len(vs), 1)
    radius = 1.0 if n > 1 else 0.0
    return {
        v: (radius * math.cos(2 * math.pi * i / n), radius * math.sin(2 * math.pi * i / n))
        for i, v in enumerate(vs)
    }


def render_figure(doc: GraphDocument, path: str, dpi: int = 150) -> None:
    """Render the document to an image file via matplotlib."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    g = doc.to_graph()
    directed = doc.kind == "oriented"
    pos = _positions(doc) or _fallback_layout(g)
    names = _display_names(doc)
    fig, ax = plt.subplots(figsize=(6, 6))
    pairs = doc.arcs if directed else g.edges
    for u, v in sorted(pairs, key=lambda p: (vertex_key(p[0]), vertex_key(p[1]))):
        (ux, uy), (vx, vy) = pos[u], pos[v]
        if directed:
            ax.annotate(
                "",
                xy=(vx, vy),
                xytext=(ux, uy),
                arrowprops=dict(arrowstyle="-|>", color="black", shrinkA=6, shrinkB=6),
            )
        else:
            ax.plot([ux, vx], [uy, vy], color="black", linewidth=1.2, zorder=1)
    xs = [pos[v][0] for v in g.vertices]
    ys = [pos[v][1] for v in g.vertices]
    ax.scatter(xs, ys, s=60, color="black", zorder=2)
    for v, name in sorted(names.items(), key=lambda kv: vertex_key(kv[0])):
        x, y = pos[v]
        ax.annotate(name, (x, y), textcoords="offset points", xytext=(6, 6))
    ax.set_aspect("equal")
    ax.axis("off")
    fig.savefig(path, dpi=dpi, bbox_inches="tight")
    plt.close(fig)
