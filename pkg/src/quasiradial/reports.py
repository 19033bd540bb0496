"""Deterministic JSON, CSV and SVG writers."""

from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction
from typing import Iterable

from .classifier import AlgebraicCertificate
from .exact import QuadExt, rational_to_str

__all__ = ["dumps_json", "enumeration_csv", "enumeration_json", "diagram_svg", "CSV_HEADER"]

CSV_HEADER = ("q", "p", "N", "k", "d", "series")


def _encode(obj, indent: str, level: int) -> str:
    pad = indent * (level + 1)
    end = indent * level
    nl = "\n" if indent else ""
    sep = ": " if indent else ":"
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return "null"
        return format(obj, ".17g")
    if isinstance(obj, Fraction):
        return json.dumps(rational_to_str(obj))
    if isinstance(obj, QuadExt):
        return _encode(obj.to_json(), indent, level)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f"{pad}{json.dumps(str(key))}{sep}{_encode(obj[key], indent, level + 1)}"
            for key in sorted(obj, key=str)
        ]
        return "{" + nl + ("," + nl).join(items) + nl + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{pad}{_encode(v, indent, level + 1)}" for v in obj]
        return "[" + nl + ("," + nl).join(items) + nl + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps_json(obj, indent: int = 2) -> str:
    """JSON with sorted keys and floats written with 17 significant digits."""
    return _encode(obj, " " * indent, 0) + "\n"


Row = tuple[int, int, AlgebraicCertificate]


def enumeration_csv(rows: Iterable[Row]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for q, p, cert in rows:
        writer.writerow((q, p, cert.n, rational_to_str(cert.k), cert.d, cert.series))
    return buf.getvalue()


def enumeration_json(rows: Iterable[Row]) -> str:
    out = [{"q": q, "p": p, "gamma": f"{p}/{q}", **cert.to_dict()} for q, p, cert in rows]
    return dumps_json(out)


_STYLE = {
    "interior": ("circle", "#4c72b0"),
    "minimal": ("square", "#55a868"),
    "maximal": ("triangle", "#c44e52"),
    "maximal_even": ("diamond", "#8172b2"),
    "beyond_maximal": ("cross", "#dd8452"),
}
_PRIORITY = ("beyond_maximal", "maximal", "maximal_even", "minimal", "interior")


def _marker(kind: str, x: float, y: float, q: int, p: int, label: str) -> str:
    shape, color = _STYLE[kind]
    r = 3.2
    common = f'class="marker {kind}" data-q="{q}" data-p="{p}"'
    title = f"<title>{label}</title>"
    if shape == "circle":
        body = f'<circle {common} cx="{x:.2f}" cy="{y:.2f}" r="{r}" fill="{color}">'
        return body + title + "</circle>"
    if shape == "square":
        return (
            f'<rect {common} x="{x - r:.2f}" y="{y - r:.2f}" width="{2 * r}" height="{2 * r}" '
            f'fill="{color}">{title}</rect>'
        )
    if shape == "triangle":
        pts = f"{x:.2f},{y - r - 1:.2f} {x - r - 1:.2f},{y + r:.2f} {x + r + 1:.2f},{y + r:.2f}"
    elif shape == "diamond":
        pts = f"{x:.2f},{y - r - 1:.2f} {x + r + 1:.2f},{y:.2f} {x:.2f},{y + r + 1:.2f} {x - r - 1:.2f},{y:.2f}"
    else:
        d = r + 0.5
        return (
            f'<path {common} d="M{x - d:.2f},{y - d:.2f}L{x + d:.2f},{y + d:.2f}'
            f'M{x - d:.2f},{y + d:.2f}L{x + d:.2f},{y - d:.2f}" stroke="{color}" '
            f'stroke-width="2" fill="none">{title}</path>'
        )
    return f'<polygon {common} points="{pts}" fill="{color}">{title}</polygon>'


def diagram_svg(rows: Iterable[Row], q_max: int, width: int = 720, height: int = 540) -> str:
    """Scatter of algebraic gamma = p/q: q horizontal, p vertical."""
    points: dict[tuple[int, int], list[AlgebraicCertificate]] = {}
    for q, p, cert in rows:
        points.setdefault((q, p), []).append(cert)
    p_top = max([p for _, p in points] + [5])
    left, right, top, bottom = 60, 170, 30, 50
    pw, ph = width - left - right, height - top - bottom
    q_lo, q_hi = 3, max(q_max, 4)
    p_lo, p_hi = 0, p_top * 1.05

    def sx(q):
        return left + (q - q_lo) / (q_hi - q_lo) * pw

    def sy(p):
        return top + ph - (p - p_lo) / (p_hi - p_lo) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<text x="{left + pw / 2:.1f}" y="18" text-anchor="middle" font-size="13">'
        f"algebraic gamma = p/q, q &lt;= {q_max}</text>",
        f'<line x1="{left}" y1="{top + ph}" x2="{left + pw}" y2="{top + ph}" stroke="black"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{top + ph}" stroke="black"/>',
    ]
    q_step = max(1, round((q_hi - q_lo) / 10))
    for q in range(q_lo, q_hi + 1, q_step):
        x = sx(q)
        out.append(f'<line x1="{x:.2f}" y1="{top + ph}" x2="{x:.2f}" y2="{top + ph + 4}" stroke="black"/>')
        out.append(f'<text x="{x:.2f}" y="{top + ph + 16}" text-anchor="middle">{q}</text>')
    p_step = _nice_step(p_hi / 8)
    p = 0
    while p <= p_hi:
        y = sy(p)
        out.append(f'<line x1="{left - 4}" y1="{y:.2f}" x2="{left}" y2="{y:.2f}" stroke="black"/>')
        out.append(f'<text x="{left - 6}" y="{y + 4:.2f}" text-anchor="end">{p:g}</text>')
        p += p_step
    out.append(f'<text x="{left + pw / 2:.1f}" y="{height - 12}" text-anchor="middle">q</text>')
    out.append(
        f'<text x="16" y="{top + ph / 2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {top + ph / 2:.1f})">p</text>'
    )
    for (q, p), certs in sorted(points.items()):
        tags = {c.series for c in certs}
        kind = next(t for t in _PRIORITY if t in tags)
        label = f"{p}/{q}: N=" + ",".join(str(c.n) for c in certs)
        out.append(_marker(kind, sx(q), sy(p), q, p, label))
    ly = top + 10
    for kind in ("interior", "minimal", "maximal", "maximal_even", "beyond_maximal"):
        lx = left + pw + 20
        out.append(_marker(kind, lx, ly, 0, 0, kind).replace('class="marker ', 'class="legend '))
        out.append(f'<text x="{lx + 10}" y="{ly + 4}">{kind.replace("_", " ")}</text>')
        ly += 18
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _nice_step(raw: float) -> float:
    if raw <= 0:
        return 1.0
    mag = 10 ** math.floor(math.log10(raw))
    for m in (1, 2, 5, 10):
        if raw <= m * mag:
            return m * mag
    return 10 * mag
