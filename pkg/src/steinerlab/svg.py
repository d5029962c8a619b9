"""SVG 1.1 rendering of realized trees (one polyline group per tree)."""

from .realization import RealizedTree

_STROKES = [
    ("#1f77b4", "none"),
    ("#d62728", "6,3"),
    ("#2ca02c", "2,3"),
    ("#9467bd", "8,2,2,2"),
    ("#ff7f0e", "1,2"),
]


def render_trees(trees: list[RealizedTree], size: int = 480) -> str:
    """Render overlaid trees; distinct stroke color/dash per tree."""
    pts = [p for rt in trees for p in rt.positions.values()]
    xs = [p.real for p in pts]
    ys = [p.imag for p in pts]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-9)
    pad = 0.08 * span

    def sx(x: float) -> float:
        return (x - x0 + pad) / (span + 2 * pad) * size

    def sy(y: float) -> float:
        # flip y so the plane's up is the screen's up
        return size - (y - y0 + pad) / (span + 2 * pad) * size

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
    ]
    for k, rt in enumerate(trees):
        color, dash = _STROKES[k % len(_STROKES)]
        parts.append(
            f'<g class="tree" fill="none" stroke="{color}" stroke-width="2" '
            f'stroke-dasharray="{dash}">'
        )
        for a, b in rt.edges:
            pa, pb = rt.positions[a], rt.positions[b]
            parts.append(
                f'<polyline points="{sx(pa.real):.3f},{sy(pa.imag):.3f} '
                f'{sx(pb.real):.3f},{sy(pb.imag):.3f}"/>'
            )
        parts.append("</g>")
    if trees:
        parts.append('<g class="terminals" fill="#111">')
        rt = trees[0]
        for v in range(1, rt.type_ref.n_terminals + 1):
            p = rt.positions[v]
            parts.append(f'<circle cx="{sx(p.real):.3f}" cy="{sy(p.imag):.3f}" r="4"/>')
        parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts)
