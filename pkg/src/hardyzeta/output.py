"""SVG and CSV emitters for spiral figures, plus JSON float shaping."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .errors import DomainError
from .zetaeval import SpiralPath


@dataclass(frozen=True)
class SvgStyle:
    width: int = 720
    height: int = 720
    margin_frac: float = 0.05
    primary_color: str = "#1f4e9c"
    primary_width: float = 1.2
    secondary_color: str = "#c23b22"
    secondary_width: float = 0.9
    secondary_dash: str = "4 3"


def sig(x: float, digits: int = 12) -> float:
    """Round a float to the given number of significant digits.

    Keeps JSON output compact and makes reports byte-reproducible
    across platforms that only agree to ~13 significant digits.
    """
    if x == 0.0:
        return 0.0
    if not math.isfinite(x):
        return x
    return float(f"{x:.{digits}g}")


def format_sig(x: float, digits: int = 15) -> str:
    if x == 0.0:
        x = 0.0
    return f"{x:.{digits}g}"


def write_spiral_csv(path: SpiralPath, out: str | Path) -> None:
    """Partial sums as CSV rows `n,re,im`, 15 significant digits."""
    lines = ["n,re,im"]
    for k, z in enumerate(path.points, start=1):
        lines.append(f"{k},{format_sig(z.real)},{format_sig(z.imag)}")
    Path(out).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _polyline(points, color: str, width: float, dash: str = "") -> str:
    pts = " ".join(f"{x:.6f},{y:.6f}" for x, y in points)
    dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
    return (
        f'<polyline fill="none" stroke="{color}" stroke-width="{width}"'
        f'{dash_attr} points="{pts}" />'
    )


def emit_spiral_svg(path: SpiralPath, out: str | Path,
                    style: SvgStyle | None = None) -> None:
    """Standalone SVG of a spiral: partial sums plus the midpoint polyline.

    The viewBox is auto-scaled to the data with a 5% margin (or
    style.margin_frac); the midpoint polyline is drawn only when it has
    at least two points, matching the n-1 midpoints of an n-point path.
    Degenerate (repeated) points are legal and render as zero-length
    segments.
    """
    style = style or SvgStyle()
    pts = list(path.points)
    if len(pts) < 2:
        raise DomainError("spiral SVG needs at least two partial sums")
    mids = list(path.midpoints)
    xs = [z.real for z in pts] + [z.real for z in mids]
    ys = [z.imag for z in pts] + [z.imag for z in mids]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    span = max(xmax - xmin, ymax - ymin, 1e-12)
    pad = style.margin_frac * span

    def to_px(z: complex) -> tuple[float, float]:
        # SVG's y axis points down; flip so the upper half plane is up.
        x = (z.real - xmin + pad) / (span + 2 * pad) * style.width
        y = (ymax - z.imag + pad) / (span + 2 * pad) * style.height
        return x, y

    body = [_polyline([to_px(z) for z in pts], style.primary_color,
                      style.primary_width)]
    if len(mids) >= 2:
        body.append(_polyline([to_px(z) for z in mids], style.secondary_color,
                              style.secondary_width, style.secondary_dash))
    else:
        body.append(_polyline([], style.secondary_color,
                              style.secondary_width, style.secondary_dash))
    svg = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{style.width}" height="{style.height}" '
        f'viewBox="0 0 {style.width} {style.height}">\n'
        + "\n".join(body)
        + "\n</svg>\n"
    )
    Path(out).write_text(svg, encoding="utf-8")
