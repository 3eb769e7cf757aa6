"""Standalone SVG figures: curve, tangent, and optional secant with annotations.

All geometry (tangent slope, increments, the differential) is computed
exactly first; rationals become floats only when written into the SVG.
Data-space elements live in a ``<g>`` whose transform maps data
coordinates to pixels, so the emitted coordinates of the curve, tangent,
secant, and annotation segments are plain data coordinates.  Output is a
pure function of the inputs.
"""

from __future__ import annotations

from fractions import Fraction

from .decomposition import differential, increment
from .polynomial import Polynomial
from .rational import exact
from .tangency import tangent_at

MARGIN_LEFT = 60.0
MARGIN_RIGHT = 20.0
MARGIN_TOP = 20.0
MARGIN_BOTTOM = 45.0

CURVE_COLOR = "#1f77b4"
TANGENT_COLOR = "#d62728"
SECANT_COLOR = "#2ca02c"
ANNOTATION_COLOR = "#7f7f7f"
DIFFERENTIAL_COLOR = "#ff7f0e"

NSS = 'vector-effect="non-scaling-stroke"'


def _fmt(value: float) -> str:
    return repr(float(value))


def render_figure(
    f: Polynomial,
    point,
    lo,
    hi,
    dx=None,
    width: int = 800,
    height: int = 600,
    samples: int = 257,
) -> tuple[str, dict]:
    """Build the SVG text and a dictionary of the exact geometry used.

    Draws f over [lo, hi], the tangent at `point` across the full
    range, and, when dx is given, the secant through the base point A
    and B = (point + dx, f(point + dx)) with segments for the argument
    increment, the function increment, and the differential.
    """
    p = exact(point)
    lo = exact(lo)
    hi = exact(hi)
    if lo >= hi:
        raise ValueError("plot range must satisfy lo < hi")
    if samples < 2:
        raise ValueError("need at least two samples")

    tangent = tangent_at(f, p)
    k, b = tangent.slope, tangent.intercept

    span = hi - lo
    xs = [lo + span * Fraction(i, samples - 1) for i in range(samples)]
    curve = [(float(x), float(f(x))) for x in xs]

    ax, ay = float(p), float(f(p))
    tangent_ends = [(float(lo), float(k * lo + b)), (float(hi), float(k * hi + b))]

    info: dict = {
        "point": (ax, ay),
        "slope": k,
        "intercept": b,
        "tangent_ends": tangent_ends,
        "samples": samples,
    }

    ys = [y for _, y in curve] + [y for _, y in tangent_ends] + [ay]
    annotations: list[str] = []
    label_points: list[tuple[str, float, float, str]] = []

    if dx is not None:
        dx = exact(dx)
        if not dx:
            raise ValueError("secant increment dx must be nonzero")
        dy_actual = increment(f, p, dx)
        dy_linear = differential(f, p, dx)
        bx, by = float(p + dx), float(f(p + dx))
        cy = ay  # corner of the increment triangle, (point + dx, f(point))
        dyl_y = float(f(p) + dy_linear)
        ys += [by, dyl_y]
        info["secant_ends"] = [(ax, ay), (bx, by)]
        info["delta_x"] = dx
        info["delta_y"] = dy_actual
        info["differential"] = dy_linear

    y_lo, y_hi = min(ys), max(ys)
    pad = (y_hi - y_lo) * 0.05 or 1.0
    y_lo -= pad
    y_hi += pad

    plot_w = width - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = height - MARGIN_TOP - MARGIN_BOTTOM
    sx = plot_w / (float(hi) - float(lo))
    sy = plot_h / (y_hi - y_lo)
    tx = MARGIN_LEFT - sx * float(lo)
    ty = MARGIN_TOP + sy * y_hi

    def px(x: float) -> float:
        return tx + sx * x

    def py(y: float) -> float:
        return ty - sy * y

    data: list[str] = []
    if y_lo < 0 < y_hi:
        data.append(
            f'<line id="x-axis" x1="{_fmt(float(lo))}" y1="0.0" x2="{_fmt(float(hi))}" '
            f'y2="0.0" stroke="#bbbbbb" stroke-width="1" {NSS}/>'
        )
    if float(lo) < 0 < float(hi):
        data.append(
            f'<line id="y-axis" x1="0.0" y1="{_fmt(y_lo)}" x2="0.0" '
            f'y2="{_fmt(y_hi)}" stroke="#bbbbbb" stroke-width="1" {NSS}/>'
        )

    path = "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in curve)
    data.append(
        f'<path id="curve" d="{path}" fill="none" stroke="{CURVE_COLOR}" '
        f'stroke-width="2" {NSS}/>'
    )
    (tx1, ty1), (tx2, ty2) = tangent_ends
    data.append(
        f'<line id="tangent" x1="{_fmt(tx1)}" y1="{_fmt(ty1)}" x2="{_fmt(tx2)}" '
        f'y2="{_fmt(ty2)}" stroke="{TANGENT_COLOR}" stroke-width="2" {NSS}/>'
    )

    if dx is not None:
        data.append(
            f'<line id="secant" x1="{_fmt(ax)}" y1="{_fmt(ay)}" x2="{_fmt(bx)}" '
            f'y2="{_fmt(by)}" stroke="{SECANT_COLOR}" stroke-width="2" {NSS}/>'
        )
        data.append(
            f'<line id="delta-x" x1="{_fmt(ax)}" y1="{_fmt(cy)}" x2="{_fmt(bx)}" '
            f'y2="{_fmt(cy)}" stroke="{ANNOTATION_COLOR}" stroke-width="1.5" '
            f'stroke-dasharray="6 4" {NSS}/>'
        )
        data.append(
            f'<line id="delta-y" x1="{_fmt(bx)}" y1="{_fmt(cy)}" x2="{_fmt(bx)}" '
            f'y2="{_fmt(by)}" stroke="{ANNOTATION_COLOR}" stroke-width="1.5" '
            f'stroke-dasharray="6 4" {NSS}/>'
        )
        data.append(
            f'<line id="differential" x1="{_fmt(bx)}" y1="{_fmt(cy)}" x2="{_fmt(bx)}" '
            f'y2="{_fmt(dyl_y)}" stroke="{DIFFERENTIAL_COLOR}" stroke-width="3" {NSS}/>'
        )
        label_points += [
            ("B", px(bx) + 8, py(by) - 6, SECANT_COLOR),
            ("Δx", (px(ax) + px(bx)) / 2, py(cy) + 16, ANNOTATION_COLOR),
            ("Δy", px(bx) + 8, (py(cy) + py(by)) / 2, ANNOTATION_COLOR),
            ("dy", px(bx) - 26, (py(cy) + py(dyl_y)) / 2, DIFFERENTIAL_COLOR),
        ]

    label_points.insert(0, ("A", px(ax) - 16, py(ay) - 8, TANGENT_COLOR))

    labels = [
        f'<circle cx="{_fmt(px(ax))}" cy="{_fmt(py(ay))}" r="4" fill="{TANGENT_COLOR}"/>'
    ]
    if dx is not None:
        labels.append(
            f'<circle cx="{_fmt(px(bx))}" cy="{_fmt(py(by))}" r="4" fill="{SECANT_COLOR}"/>'
        )
    labels += [
        f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" fill="{color}">{text}</text>'
        for text, lx, ly, color in label_points
    ]

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect id="background" x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<g id="data" transform="translate({_fmt(tx)} {_fmt(ty)}) scale({_fmt(sx)} {_fmt(-sy)})">',
        *data,
        "</g>",
        '<g id="labels" font-family="sans-serif" font-size="14">',
        *labels,
        "</g>",
        f'<rect id="frame" x="{_fmt(MARGIN_LEFT)}" y="{_fmt(MARGIN_TOP)}" '
        f'width="{_fmt(plot_w)}" height="{_fmt(plot_h)}" fill="none" stroke="#888888"/>',
        "</svg>",
    ]
    return "\n".join(parts) + "\n", info
