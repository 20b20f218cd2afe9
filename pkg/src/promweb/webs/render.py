"""DOT and SVG export.  Purely cosmetic: nothing reads these back."""
from __future__ import annotations

import math

import numpy as np

from .planar import PlanarWeb


def tutte_layout(web: PlanarWeb, radius: float = 1.0) -> np.ndarray:
    """Boundary on a circle in cut order, internal vertices at barycentres."""
    nv = web.num_vertices
    pos = np.zeros((nv, 2))
    nb = web.num_boundary
    for k in range(nb):
        theta = math.pi / 2 + math.pi / nb - 2 * math.pi * (k + 0.5) / nb
        pos[web.position_vertex(k + 1)] = (radius * math.cos(theta), radius * math.sin(theta))
    inner = [v for v in range(nv) if not web.is_boundary(v)]
    if not inner:
        return pos
    index = {v: i for i, v in enumerate(inner)}
    lap = np.zeros((len(inner), len(inner)))
    rhs = np.zeros((len(inner), 2))
    for v in inner:
        i = index[v]
        for h in web.rotation[v]:
            u = web.other_end(h)
            lap[i, i] += 1
            if u in index:
                lap[i, index[u]] -= 1
            else:
                rhs[i] += pos[u]
    pos[inner] = np.linalg.solve(lap, rhs)
    return pos


def _label_text(x: int) -> str:
    return "-1" if x == -1 else str(x)


def to_dot(web: PlanarWeb, labels: bool = True) -> str:
    lab = web.edge_labels() if labels else None
    lines = ["digraph web {", "  node [shape=circle, width=0.15, label=\"\"];"]
    for v, sign in enumerate(web.signs):
        style = "filled" if sign > 0 else "solid"
        extra = ""
        if web.is_boundary(v):
            extra = f", xlabel=\"{web.vertex_position(v)}\", shape=square"
        lines.append(f"  v{v} [style={style}{extra}];")
    for e, (t, h) in enumerate(web.edges):
        attr = f" [label=\"{_label_text(lab[e])}\"]" if lab is not None else ""
        lines.append(f"  v{t} -> v{h}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_svg(web: PlanarWeb, size: int = 400, labels: bool = True) -> str:
    pos = tutte_layout(web)
    half = size / 2
    scale = 0.42 * size
    xy = lambda v: (half + scale * pos[v][0], half - scale * pos[v][1])  # noqa: E731
    lab = web.edge_labels() if labels else None
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">',
           '<defs><marker id="arrow" viewBox="0 0 10 10" refX="5" refY="5" '
           'markerWidth="6" markerHeight="6" orient="auto-start-reverse">'
           '<path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>',
           f'<circle cx="{half}" cy="{half}" r="{scale:.2f}" fill="none" stroke="#bbb"/>']
    for e, (t, h) in enumerate(web.edges):
        (x1, y1), (x2, y2) = xy(t), xy(h)
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="black"/>')
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{mx:.2f}" y2="{my:.2f}" '
                   f'stroke="black" marker-end="url(#arrow)"/>')
        if lab is not None:
            out.append(f'<text x="{mx + 4:.2f}" y="{my - 4:.2f}" font-size="10">'
                       f'{_label_text(lab[e])}</text>')
    for v, sign in enumerate(web.signs):
        x, y = xy(v)
        fill = "black" if sign > 0 else "white"
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="{fill}" stroke="black"/>')
        if web.is_boundary(v):
            out.append(f'<text x="{x:.2f}" y="{y - 8:.2f}" font-size="10" text-anchor="middle">'
                       f'{web.vertex_position(v)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
