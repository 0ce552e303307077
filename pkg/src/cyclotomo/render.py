"""Static SVG figures: patch points, a polygon boundary, black and grey vertices."""

from __future__ import annotations


def _fmt(x: float) -> str:
    return f"{x:.4f}".rstrip("0").rstrip(".")


def render_svg(patch_points, polygon=None, black=(), grey=(), size: int = 480, title: str = "") -> str:
    pts = [complex(p) for p in patch_points]
    extra = [complex(p) for p in list(polygon or []) + list(black) + list(grey)]
    allp = pts + extra
    if not allp:
        raise ValueError("nothing to draw")
    xs = [p.real for p in allp]
    ys = [p.imag for p in allp]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    pad = 0.08 * span + 0.5
    x0, y1 = min(xs) - pad, max(ys) + pad
    scale = size / (span + 2 * pad)

    def xy(z):
        # svg y axis points down
        return _fmt((z.real - x0) * scale), _fmt((y1 - z.imag) * scale)

    r = max(2.0, 0.06 * scale)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    if title:
        out.append(f"<title>{title}</title>")
    if polygon:
        coords = " ".join(",".join(xy(complex(v))) for v in polygon)
        out.append(f'<polygon points="{coords}" fill="none" stroke="black" stroke-width="1.5"/>')
    for p in pts:
        cx, cy = xy(p)
        out.append(f'<circle cx="{cx}" cy="{cy}" r="{_fmt(r * 0.45)}" fill="#999999"/>')
    for p in black:
        cx, cy = xy(complex(p))
        out.append(f'<circle class="black" cx="{cx}" cy="{cy}" r="{_fmt(r)}" fill="black"/>')
    for p in grey:
        cx, cy = xy(complex(p))
        out.append(
            f'<circle class="grey" cx="{cx}" cy="{cy}" r="{_fmt(r)}" fill="#bbbbbb" stroke="black" stroke-width="0.8"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
