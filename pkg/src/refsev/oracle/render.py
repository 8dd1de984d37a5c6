"""SVG drawings of floor diagrams and their markings.

Vertices sit on a horizontal line, white circles for floors and black dots for
marked points; edges are arcs above the line labelled by their weight when it
exceeds 1.
"""
from __future__ import annotations

from xml.sax.saxutils import escape

from .floor import FloorDiagram, _marking_types

__all__ = ["example_marking", "marking_layout", "render_svg", "render_many"]

STEP = 48
RADIUS = 9
BASE = 150


def example_marking(D: FloorDiagram) -> list | None:
    """One admissible type word (the lexicographically greedy one), or None."""
    h = D.height
    kinds = _marking_types(D)
    counts = [k[1] for k in kinds]
    word: list = []

    def rec(g):
        if g == h and not any(counts):
            return True
        for t, (kind, _, lo, hi) in enumerate(kinds):
            if counts[t] and lo <= g <= hi:
                counts[t] -= 1
                word.append(kind)
                if rec(g):
                    return True
                word.pop()
                counts[t] += 1
        if g < h and all(counts[t] == 0 for t in range(len(kinds)) if kinds[t][3] == g):
            word.append(("white", g + 1))
            if rec(g + 1):
                return True
            word.pop()
        return False

    return list(word) if rec(0) else None


def marking_layout(D: FloorDiagram, word) -> tuple[list, list]:
    """Vertices ``(x, colour)`` and edges ``(from, to, weight)`` of a marked diagram."""
    verts = []
    floor_pos = {}
    for item in word:
        verts.append("white" if item[0] == "white" else "black")
        if item[0] == "white":
            floor_pos[item[1]] = len(verts) - 1
    edges = []
    for idx, item in enumerate(word):
        kind = item[0]
        if kind == "src":
            edges.append((idx, floor_pos[item[1]], 1))
        elif kind == "sink":
            edges.append((floor_pos[item[1]], idx, 1))
        elif kind == "beta":
            edges.append((floor_pos[item[1]], idx, item[2]))
        elif kind == "mid":
            edges.append((floor_pos[item[1]], idx, item[3]))
            edges.append((idx, floor_pos[item[2]], item[3]))
    return verts, edges


def _diagram_layout(D: FloorDiagram) -> tuple[list, list]:
    verts = ["white"] * D.height
    return verts, [(i - 1, j - 1, w) for i, j, w in D.edges]


def _svg_group(verts, edges, y0: int, caption: str) -> list[str]:
    out = [f'<text x="10" y="{y0 - BASE + 20}" font-size="13">{escape(caption)}</text>']
    x = lambda i: 30 + STEP * i  # noqa: E731
    for a, b, w in edges:
        xa, xb = x(min(a, b)), x(max(a, b))
        rise = 14 + 10 * (max(a, b) - min(a, b))
        mid = (xa + xb) / 2
        out.append(f'<path d="M {xa} {y0} Q {mid} {y0 - 2 * rise} {xb} {y0}" '
                   f'fill="none" stroke="black" stroke-width="1.5"/>')
        if w > 1:
            out.append(f'<text x="{mid}" y="{y0 - rise - 4}" font-size="12" '
                       f'text-anchor="middle">{w}</text>')
    for i, colour in enumerate(verts):
        fill = "white" if colour == "white" else "black"
        out.append(f'<circle cx="{x(i)}" cy="{y0}" r="{RADIUS}" fill="{fill}" '
                   f'stroke="black" stroke-width="1.5"/>')
    return out


def render_many(items: list[tuple[FloorDiagram, list | None, str]]) -> str:
    """A single SVG with one row per (diagram, word-or-None, caption)."""
    width = 60
    for D, word, _ in items:
        n = len(word) if word else D.height
        width = max(width, 60 + STEP * n)
    height = BASE * max(1, len(items)) + 20
    body = []
    for row, (D, word, caption) in enumerate(items):
        y0 = BASE * (row + 1)
        verts, edges = marking_layout(D, word) if word else _diagram_layout(D)
        body.extend(_svg_group(verts, edges, y0, caption))
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">')
    return "\n".join([head, '<rect width="100%" height="100%" fill="white"/>', *body, "</svg>"])


def render_svg(D: FloorDiagram, marked: bool = True) -> str:
    word = example_marking(D) if marked else None
    return render_many([(D, word, _caption(D))])


def _caption(D: FloorDiagram) -> str:
    parts = [f"R={list(D.R)}", f"L={list(D.L)}", f"s={list(D.s)}"]
    if D.free:
        parts.append(f"free={D.free}")
    return " ".join(parts)
