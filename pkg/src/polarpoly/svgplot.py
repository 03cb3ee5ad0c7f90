"""Static SVG scatter plots of zeros with region boundaries.

Pure emitter: one circle marker per zero, one path element per region
boundary, no interactivity.  The viewport is square and auto-scaled to
1.2 times the largest modulus in view.
"""

from __future__ import annotations

from typing import Sequence

from .regions import Region

_SIZE = 480
_COLORS = ("#1f6feb", "#cf222e", "#2da44e", "#8250df", "#bf8700")


def _extent(points: Sequence[complex], regions: Sequence[Region]) -> float:
    ext = 1.0
    for z in points:
        ext = max(ext, abs(z))
    for r in regions:
        if r.kind in ("disk", "exterior_disk"):
            ext = max(ext, abs(r.center) + r.radius)
        else:
            ext = max(ext, abs(r.center))
    return 1.2 * ext


def _circle_path(cx: float, cy: float, r: float) -> str:
    # Full circle as two arcs; r == 0 degenerates to a dot-sized path.
    r = max(r, 1e-9)
    return (
        f"M {cx + r:.3f} {cy:.3f} "
        f"A {r:.3f} {r:.3f} 0 1 1 {cx - r:.3f} {cy:.3f} "
        f"A {r:.3f} {r:.3f} 0 1 1 {cx + r:.3f} {cy:.3f} Z"
    )


def render_scene(
    series: Sequence[tuple[str, Sequence[complex]]],
    regions: Sequence[Region] = (),
) -> str:
    """SVG document with labelled zero markers and region boundaries."""
    all_points = [z for _, pts in series for z in pts]
    ext = _extent(all_points, regions)
    scale = _SIZE / (2.0 * ext)

    def sx(z: complex) -> float:
        return _SIZE / 2.0 + z.real * scale

    def sy(z: complex) -> float:
        return _SIZE / 2.0 - z.imag * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" '
        f'height="{_SIZE}" viewBox="0 0 {_SIZE} {_SIZE}">',
        f'<rect width="{_SIZE}" height="{_SIZE}" fill="white"/>',
        f'<line x1="0" y1="{_SIZE / 2}" x2="{_SIZE}" y2="{_SIZE / 2}" '
        'stroke="#dddddd"/>',
        f'<line x1="{_SIZE / 2}" y1="0" x2="{_SIZE / 2}" y2="{_SIZE}" '
        'stroke="#dddddd"/>',
    ]

    for idx, region in enumerate(regions):
        color = _COLORS[idx % len(_COLORS)]
        if region.kind in ("disk", "exterior_disk"):
            dash = ' stroke-dasharray="6 4"' if region.kind == "exterior_disk" else ""
            d = _circle_path(
                sx(region.center), sy(region.center), region.radius * scale
            )
            parts.append(
                f'<path d="{d}" fill="none" stroke="{color}"{dash}/>'
            )
        else:
            # Boundary line through the anchor point, perpendicular to
            # the outward normal, clipped generously to the viewport.
            direction = region.normal * 1j
            length = 2.0 * ext
            a = region.center - length * direction
            b = region.center + length * direction
            d = f"M {sx(a):.3f} {sy(a):.3f} L {sx(b):.3f} {sy(b):.3f}"
            parts.append(f'<path d="{d}" fill="none" stroke="{color}"/>')

    for idx, (label, pts) in enumerate(series):
        color = _COLORS[idx % len(_COLORS)]
        for z in pts:
            parts.append(
                f'<circle cx="{sx(z):.3f}" cy="{sy(z):.3f}" r="3" '
                f'fill="{color}" fill-opacity="0.8">'
                f"<title>{label}: {z.real:.6g}{z.imag:+.6g}i</title>"
                "</circle>"
            )

    parts.append("</svg>")
    return "\n".join(parts)
