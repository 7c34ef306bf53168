"""Text and SVG pictures of boards, coverings, and block layouts.

Text form: n lines, row r carrying r glyphs separated by single spaces
and left-padded to center the triangle; '●' is lit/pressed,
'○' is off.

SVG form: one circle per button at the triangular lattice point
(x, y) = (k - r/2, r) in spacing units, shifted to keep margins
positive.  Coverings add a capsule outline around every part; block
layouts color buttons by block.  All numbers are written with two
decimals, so equal inputs give byte-equal documents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from .board import button_count, button_rowcol
from .engine import Configuration, PressSet
from .errors import ShapeError
from .matchings import Covering, validate_covering
from .propagation import BlockLayout

LIT_GLYPH = "●"
OFF_GLYPH = "○"


@dataclass(frozen=True)
class RenderStyle:
    """Geometry and palette knobs, fixed in one place for stable bytes."""

    spacing: float = 40.0
    radius: float = 14.0
    margin: float = 24.0
    lit_fill: str = "#1a1a1a"
    off_fill: str = "#ffffff"
    stroke: str = "#1a1a1a"
    part_stroke: str = "#c03030"
    separator_fill: str = "#e6e6e6"
    block_palette: tuple[str, ...] = (
        "#4e79a7",
        "#f28e2b",
        "#59a14f",
        "#e15759",
        "#b07aa1",
        "#76b7b2",
        "#edc948",
        "#ff9da7",
        "#9c755f",
    )


DEFAULT_STYLE = RenderStyle()

Renderable = Union[Configuration, PressSet, Covering, BlockLayout]


def _size_of(v: Renderable, n: Optional[int]) -> int:
    own = v.m if isinstance(v, BlockLayout) else v.n
    if n is not None and n != own:
        raise ShapeError(f"object is for size {own}, requested {n}")
    return own


def to_text(v: Configuration | PressSet, n: Optional[int] = None) -> str:
    """Centered triangle of lit/off glyphs, one board row per line."""
    size = _size_of(v, n)
    bits = v.state if isinstance(v, Configuration) else v.mask
    lines = []
    i = 0
    for r in range(1, size + 1):
        glyphs = [LIT_GLYPH if bits.get(i + k) else OFF_GLYPH for k in range(r)]
        i += r
        lines.append(" " * (size - r) + " ".join(glyphs))
    return "\n".join(lines)


def _center(n: int, r: int, k: int, style: RenderStyle) -> tuple[float, float]:
    off = style.margin + style.radius
    cx = off + style.spacing * ((n - r) / 2 + (k - 1))
    cy = off + style.spacing * (math.sqrt(3) / 2) * (r - 1)
    return cx, cy


def _f(x: float) -> str:
    return f"{x:.2f}"


def _capsule_path(p1: tuple[float, float], p2: tuple[float, float], rho: float) -> str:
    """Outline enclosing two circles: straight sides plus two half-arcs."""
    dx, dy = p2[0] - p1[0], p2[1] - p1[1]
    dist = math.hypot(dx, dy)
    ux, uy = dx / dist, dy / dist
    nx, ny = -uy, ux
    a = (p1[0] + nx * rho, p1[1] + ny * rho)
    b = (p2[0] + nx * rho, p2[1] + ny * rho)
    c = (p2[0] - nx * rho, p2[1] - ny * rho)
    d = (p1[0] - nx * rho, p1[1] - ny * rho)
    arc = f"A {_f(rho)} {_f(rho)} 0 0 0"
    return (
        f"M {_f(a[0])} {_f(a[1])} L {_f(b[0])} {_f(b[1])} {arc} {_f(c[0])} {_f(c[1])} "
        f"L {_f(d[0])} {_f(d[1])} {arc} {_f(a[0])} {_f(a[1])} Z"
    )


def _ring_path(p: tuple[float, float], rho: float) -> str:
    """Circular outline drawn as a path, keeping circle elements for buttons only."""
    cx, cy = p
    arc = f"A {_f(rho)} {_f(rho)} 0 1 0"
    return (
        f"M {_f(cx - rho)} {_f(cy)} {arc} {_f(cx + rho)} {_f(cy)} "
        f"{arc} {_f(cx - rho)} {_f(cy)} Z"
    )


def _svg_document(n: int, style: RenderStyle, body: list[str]) -> str:
    off = 2 * (style.margin + style.radius)
    width = off + style.spacing * (n - 1)
    height = off + style.spacing * (math.sqrt(3) / 2) * (n - 1)
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_f(width)}" height="{_f(height)}" '
        f'viewBox="0 0 {_f(width)} {_f(height)}">'
    )
    return "\n".join([head, *body, "</svg>"])


def _circle(cx: float, cy: float, r: float, fill: str, stroke: str) -> str:
    return (
        f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(r)}" '
        f'fill="{fill}" stroke="{stroke}" stroke-width="2"/>'
    )


def to_svg(v: Renderable, n: Optional[int] = None, style: RenderStyle = DEFAULT_STYLE) -> str:
    """SVG document for a configuration, press set, covering, or layout."""
    size = _size_of(v, n)
    beta = button_count(size)
    body: list[str] = []

    if isinstance(v, (Configuration, PressSet)):
        bits = v.state if isinstance(v, Configuration) else v.mask
        for i in range(beta):
            cx, cy = _center(size, *button_rowcol(size, i), style)
            fill = style.lit_fill if bits.get(i) else style.off_fill
            body.append(_circle(cx, cy, style.radius, fill, style.stroke))
        return _svg_document(size, style, body)

    if isinstance(v, Covering):
        check = validate_covering(v)
        if not check:
            raise ShapeError(f"cannot render invalid covering ({check.reason})")
        rho = style.radius + 6
        for part in v.parts:
            centers = [_center(size, *button_rowcol(size, i - 1), style) for i in part]
            if len(centers) == 1:
                d = _ring_path(centers[0], rho)
            else:
                d = _capsule_path(centers[0], centers[1], rho)
            body.append(
                f'<path d="{d}" fill="none" stroke="{style.part_stroke}" stroke-width="2"/>'
            )
        for i in range(beta):
            cx, cy = _center(size, *button_rowcol(size, i), style)
            body.append(_circle(cx, cy, style.radius, style.off_fill, style.stroke))
        return _svg_document(size, style, body)

    fills = {}
    for bi, block in enumerate(v.blocks):
        color = style.block_palette[bi % len(style.block_palette)]
        for c in block.cells:
            fills[c] = color
    for i in range(beta):
        cx, cy = _center(size, *button_rowcol(size, i), style)
        body.append(
            _circle(cx, cy, style.radius, fills.get(i, style.separator_fill), style.stroke)
        )
    return _svg_document(size, style, body)
