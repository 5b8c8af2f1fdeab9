"""Deterministic SVG output for perspective drawings."""

from __future__ import annotations

from dataclasses import dataclass

from .perspective import Drawing


@dataclass(frozen=True)
class Viewport:
    """Chart point ``(s, t)`` lands at ``(width/2 + scale*s, height/2 - scale*t)``."""

    width: float = 800
    height: float = 600
    scale: float = 200

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0 or self.scale <= 0:
            raise ValueError("viewport width, height and scale must be positive")

    def map(self, p):
        s, t = p
        return (self.width / 2 + self.scale * float(s), self.height / 2 - self.scale * float(t))


def _num(x: float) -> str:
    return f"{x:.9g}"


def to_svg(drawing: Drawing, viewport: Viewport = Viewport(), *, marker_radius: float = 4.0,
           annotations=()) -> str:
    """One ``<line>`` per segment, one ``<circle>`` per marker.

    ``annotations`` is a sequence of ``(s, t, text)`` chart-positioned labels.
    """
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(viewport.width)}" '
        f'height="{_num(viewport.height)}" viewBox="0 0 {_num(viewport.width)} {_num(viewport.height)}">',
        f'<rect width="{_num(viewport.width)}" height="{_num(viewport.height)}" fill="white"/>',
        '<g stroke="black" stroke-width="1" fill="none">',
    ]
    for p, q in drawing.segments:
        x1, y1 = viewport.map(p)
        x2, y2 = viewport.map(q)
        out.append(f'<line x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}"/>')
    out.append("</g>")
    if drawing.markers:
        out.append('<g fill="red" stroke="none">')
        for m in drawing.markers:
            x, y = viewport.map(m)
            out.append(f'<circle cx="{_num(x)}" cy="{_num(y)}" r="{_num(marker_radius)}"/>')
        out.append("</g>")
    if annotations:
        out.append('<g font-family="sans-serif" font-size="12" fill="blue">')
        for s, t, text in annotations:
            x, y = viewport.map((s, t))
            out.append(f'<text x="{_num(x)}" y="{_num(y)}">{_escape(text)}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
