"""Deterministic SVG drawings of tree pairs and flip sequences.

Points sit on the ``n``-th roots of unity, point 0 at angle 0 and the rest
counter-clockwise.  The first tree is drawn in black over the second in
red; during a sequence the black tree is the current one and the red tree
is the target.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Edge, Tree, check_same_instance
from .flipmodel import FlipSequence, FlipStep


@dataclass(frozen=True)
class RenderSpec:
    width: int = 400
    height: int = 400
    point_radius: float = 4.0
    tree1_color: str = "black"
    tree2_color: str = "red"
    flip_color: str = "blue"

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0 or self.point_radius <= 0:
            raise ValueError("render dimensions must be positive")


def point_positions(n: int, spec: RenderSpec = RenderSpec()) -> list[tuple[str, str]]:
    """Pixel coordinates of the points, formatted to six decimals."""
    cx, cy = spec.width / 2, spec.height / 2
    r = 0.42 * min(spec.width, spec.height)
    out = []
    for i in range(n):
        angle = 2 * math.pi * i / n
        # y grows downwards in SVG
        x = round(cx + r * math.cos(angle), 6) + 0.0
        y = round(cy - r * math.sin(angle), 6) + 0.0
        out.append((f"{x:.6f}", f"{y:.6f}"))
    return out


def _line(pos, e: Edge, color: str, width: float, dash: bool = False) -> str:
    (x1, y1), (x2, y2) = pos[e.a], pos[e.b]
    extra = ' stroke-dasharray="6 4"' if dash else ""
    return (
        f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
        f'stroke="{color}" stroke-width="{width:g}"{extra}/>'
    )


def render_frame(t1: Tree, t2: Tree, step: FlipStep | None = None,
                 spec: RenderSpec = RenderSpec()) -> str:
    """One SVG document; ``step`` is highlighted (removed dashed, added bold)."""
    check_same_instance(t1, t2)
    pos = point_positions(t1.n, spec)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" '
        f'height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">',
        f'<rect width="{spec.width}" height="{spec.height}" fill="white"/>',
    ]
    for e in t2.sorted_edges:
        lines.append(_line(pos, e, spec.tree2_color, 4))
    for e in t1.sorted_edges:
        if step is None or e != step.remove:
            lines.append(_line(pos, e, spec.tree1_color, 1.5))
    if step is not None:
        lines.append(_line(pos, step.remove, spec.flip_color, 1.5, dash=True))
        lines.append(_line(pos, step.add, spec.flip_color, 4))
    for i, (x, y) in enumerate(pos):
        lines.append(f'<circle cx="{x}" cy="{y}" r="{spec.point_radius:g}" fill="black">'
                     f'<title>{i}</title></circle>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_sequence(seq: FlipSequence, spec: RenderSpec = RenderSpec()) -> list[str]:
    """One frame per step plus a final frame; the red tree is the final tree."""
    trees = seq.trees()
    target = trees[-1]
    frames = [render_frame(t, target, s, spec) for t, s in zip(trees, seq.steps)]
    frames.append(render_frame(target, target, None, spec))
    return frames
