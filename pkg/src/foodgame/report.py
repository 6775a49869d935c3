"""CSV tables and SVG ternary scatter plots of experiment records."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

from .core import ConditionalStrategy, FrequencyTriple
from .experiments import SampleRecord
from .preferences import TransitivityLabel

CSV_COLUMNS = (
    "model",
    "draw_index",
    "src1",
    "src2",
    "src3",
    "src4",
    "src5",
    "src6",
    "p1",
    "p2",
    "p3",
    "p4",
    "p5",
    "p6",
    "q0",
    "q1",
    "q2",
    "reject_reason",
    "class1",
    "class2",
)

_SQRT3_2 = math.sqrt(3.0) / 2.0

VIEWPORT_WIDTH = 1000
VIEWPORT_HEIGHT = 900
VIEWPORT_MARGIN = 50
_SCALE = VIEWPORT_WIDTH - 2 * VIEWPORT_MARGIN

CLASS_COLORS = {
    TransitivityLabel.INTRANSITIVE_FORWARD: "#c43131",
    TransitivityLabel.INTRANSITIVE_REVERSE: "#2457a8",
    TransitivityLabel.TRANSITIVE: "#2c8a44",
    TransitivityLabel.DEGENERATE: "#8a8a8a",
}


@dataclass(frozen=True, slots=True)
class TernaryPoint:
    """Planar coordinates of a barycentric triple in the drawn triangle."""

    u: float
    v: float


@dataclass(frozen=True)
class SvgOptions:
    point_radius: float = 2.0
    point_color: str = "black"
    color_by: str | None = None  # None, "type1" or "type2"


def ternary_xy(q: FrequencyTriple) -> TernaryPoint:
    """Triangle coordinates: q0 at the origin, q1 at (1,0), q2 at the apex."""
    return TernaryPoint(q.q1 + q.q2 / 2.0, _SQRT3_2 * q.q2)


def _format_value(value) -> str:
    if value is None:
        return ""
    return f"{value:.17g}"


def _label_string(label: TransitivityLabel | None) -> str:
    return "" if label is None else label.value


def emit_csv(records: list[SampleRecord], path) -> None:
    """Write records as CSV with 17-significant-digit decimals and LF endings."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in records:
            source = list(r.source) + [None] * (6 - len(r.source))
            freqs = r.frequencies.as_tuple() if r.frequencies else (None, None, None)
            writer.writerow(
                [
                    r.model,
                    r.draw_index,
                    *(_format_value(v) for v in source),
                    *(_format_value(v) for v in r.strategy.free_coords()),
                    *(_format_value(v) for v in freqs),
                    r.reject_reason or "",
                    _label_string(r.type1),
                    _label_string(r.type2),
                ]
            )


def read_csv_records(path) -> list[SampleRecord]:
    """Parse a file written by emit_csv back into records."""
    labels = {label.value: label for label in TransitivityLabel}
    records = []
    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader)
        if tuple(header) != CSV_COLUMNS:
            raise ValueError(f"unexpected CSV header: {header}")
        for row in reader:
            values = dict(zip(CSV_COLUMNS, row))
            source = tuple(
                float(values[f"src{i}"]) for i in range(1, 7) if values[f"src{i}"]
            )
            strategy = ConditionalStrategy(
                *(float(values[f"p{i}"]) for i in range(1, 7))
            )
            if values["q0"]:
                frequencies = FrequencyTriple(
                    float(values["q0"]), float(values["q1"]), float(values["q2"])
                )
            else:
                frequencies = None
            records.append(
                SampleRecord(
                    model=values["model"],
                    draw_index=int(values["draw_index"]),
                    source=source,
                    strategy=strategy,
                    frequencies=frequencies,
                    reject_reason=values["reject_reason"] or None,
                    type1=labels.get(values["class1"]),
                    type2=labels.get(values["class2"]),
                )
            )
    return records


def _viewport_xy(point: TernaryPoint) -> tuple[float, float]:
    return (
        VIEWPORT_MARGIN + _SCALE * point.u,
        VIEWPORT_HEIGHT - VIEWPORT_MARGIN - _SCALE * point.v,
    )


def _record_color(record: SampleRecord, options: SvgOptions) -> str:
    if options.color_by is None:
        return options.point_color
    label = record.type1 if options.color_by == "type1" else record.type2
    return CLASS_COLORS.get(label, options.point_color)


def emit_svg(
    records: list[SampleRecord], path, options: SvgOptions | None = None
) -> None:
    """Scatter the in-simplex records over the triangle outline as SVG 1.1.

    Rejected records are skipped.  With ``color_by`` set, points are colored
    by their transitivity label and a color key is drawn.
    """
    opts = options or SvgOptions()
    if opts.color_by not in (None, "type1", "type2"):
        raise ValueError(f"unknown color_by {opts.color_by!r}")

    corners = [
        _viewport_xy(TernaryPoint(0.0, 0.0)),
        _viewport_xy(TernaryPoint(1.0, 0.0)),
        _viewport_xy(TernaryPoint(0.5, _SQRT3_2)),
    ]
    outline = " ".join(f"{x:.3f},{y:.3f}" for x, y in corners)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{VIEWPORT_WIDTH}" height="{VIEWPORT_HEIGHT}" '
        f'viewBox="0 0 {VIEWPORT_WIDTH} {VIEWPORT_HEIGHT}">',
        f'<polygon points="{outline}" fill="none" stroke="black" stroke-width="1.5"/>',
    ]
    seen_labels = []
    for record in records:
        if record.frequencies is None:
            continue
        x, y = _viewport_xy(ternary_xy(record.frequencies))
        color = _record_color(record, opts)
        parts.append(
            f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{opts.point_radius:g}" '
            f'fill="{color}"/>'
        )
        if opts.color_by is not None:
            label = record.type1 if opts.color_by == "type1" else record.type2
            if label is not None and label not in seen_labels:
                seen_labels.append(label)
    for slot, label in enumerate(sorted(seen_labels, key=lambda l: l.value)):
        y = 30 + 24 * slot
        parts.append(
            f'<circle cx="20" cy="{y}" r="5" fill="{CLASS_COLORS[label]}"/>'
        )
        parts.append(
            f'<text x="32" y="{y + 5}" font-family="sans-serif" '
            f'font-size="16">{label.value}</text>'
        )
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write("\n".join(parts) + "\n")
