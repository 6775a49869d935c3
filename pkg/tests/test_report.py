"""Ternary projection, CSV schema and round trip, SVG output."""

import math

import pytest

from foodgame import (
    FrequencyTriple,
    SvgOptions,
    emit_csv,
    emit_svg,
    read_csv_records,
    run_experiment,
    ternary_xy,
)
from foodgame.report import CSV_COLUMNS

SQRT3_2 = math.sqrt(3.0) / 2.0


def as_pair(point):
    return (point.u, point.v)


class TestTernaryXY:
    def test_vertices(self):
        assert as_pair(ternary_xy(FrequencyTriple(1.0, 0.0, 0.0))) == (0.0, 0.0)
        assert as_pair(ternary_xy(FrequencyTriple(0.0, 1.0, 0.0))) == (1.0, 0.0)
        apex = ternary_xy(FrequencyTriple(0.0, 0.0, 1.0))
        assert as_pair(apex) == pytest.approx((0.5, 0.8660254037844386))

    def test_centroid(self):
        point = ternary_xy(FrequencyTriple(1 / 3, 1 / 3, 1 / 3))
        assert as_pair(point) == pytest.approx((0.5, 0.28867513459481287))

    def test_vertex_images_are_unit_distance_apart(self):
        images = [
            ternary_xy(FrequencyTriple(1.0, 0.0, 0.0)),
            ternary_xy(FrequencyTriple(0.0, 1.0, 0.0)),
            ternary_xy(FrequencyTriple(0.0, 0.0, 1.0)),
        ]
        for i in range(3):
            a, b = images[i], images[(i + 1) % 3]
            assert math.hypot(a.u - b.u, a.v - b.v) == pytest.approx(1.0, abs=1e-15)

    def test_affine_on_midpoints(self):
        q = FrequencyTriple(0.5, 0.25, 0.25)
        a = ternary_xy(FrequencyTriple(1.0, 0.0, 0.0))
        b = ternary_xy(FrequencyTriple(0.0, 1.0, 0.0))
        c = ternary_xy(FrequencyTriple(0.0, 0.0, 1.0))
        point = ternary_xy(q)
        assert point.u == pytest.approx(0.5 * a.u + 0.25 * b.u + 0.25 * c.u)
        assert point.v == pytest.approx(0.5 * a.v + 0.25 * b.v + 0.25 * c.v)


class TestEmitCsv:
    def test_empty_records_write_header_only(self, tmp_path):
        path = tmp_path / "empty.csv"
        emit_csv([], path)
        assert path.read_text(encoding="utf-8") == ",".join(CSV_COLUMNS) + "\n"

    def test_rejected_record_has_empty_frequencies(self, tmp_path):
        records = run_experiment("classical", 2_000, 31)
        rejected = [r for r in records if r.reject_reason]
        assert rejected
        path = tmp_path / "rejected.csv"
        emit_csv(rejected[:1], path)
        header, row = path.read_text(encoding="utf-8").splitlines()
        values = dict(zip(header.split(","), row.split(",")))
        assert values["q0"] == values["q1"] == values["q2"] == ""
        assert values["reject_reason"] in ("singular", "outside_simplex")
        assert values["class1"] == values["class2"] == ""

    def test_quantum_rows_leave_src5_src6_empty(self, tmp_path):
        records = run_experiment("quantum", 5, 3)
        path = tmp_path / "quantum.csv"
        emit_csv(records, path)
        lines = path.read_text(encoding="utf-8").splitlines()
        for row in lines[1:]:
            values = dict(zip(CSV_COLUMNS, row.split(",")))
            assert values["src5"] == values["src6"] == ""
            assert values["src4"] != ""

    def test_line_endings_are_lf(self, tmp_path):
        path = tmp_path / "lf.csv"
        emit_csv(run_experiment("classical", 5, 3), path)
        data = path.read_bytes()
        assert b"\r" not in data
        assert data.endswith(b"\n")

    def test_identical_runs_are_byte_identical(self, tmp_path):
        first = tmp_path / "a.csv"
        second = tmp_path / "b.csv"
        emit_csv(run_experiment("quantum", 500, 11, partitions=2), first)
        emit_csv(run_experiment("quantum", 500, 11, partitions=2), second)
        assert first.read_bytes() == second.read_bytes()

    def test_round_trip_reproduces_records(self, tmp_path):
        for model in ("classical", "quantum"):
            records = run_experiment(model, 300, 13)
            path = tmp_path / f"{model}.csv"
            emit_csv(records, path)
            assert read_csv_records(path) == records


class TestEmitSvg:
    def test_empty_records_draw_outline_only(self, tmp_path):
        path = tmp_path / "empty.svg"
        emit_svg([], path)
        text = path.read_text(encoding="utf-8")
        assert "<polygon" in text
        assert "<circle" not in text
        assert 'viewBox="0 0 1000 900"' in text

    def test_centroid_lands_at_fixed_viewport_point(self, tmp_path):
        from foodgame import ConditionalStrategy, SampleRecord
        from foodgame.preferences import TransitivityLabel

        strategy = ConditionalStrategy(0.5, 0.5, 0.5, 0.5, 0.5, 0.5)
        records = [
            SampleRecord(
                model="classical",
                draw_index=0,
                source=strategy.free_coords(),
                strategy=strategy,
                frequencies=FrequencyTriple(1 / 3, 1 / 3, 1 / 3),
                reject_reason=None,
                type1=TransitivityLabel.DEGENERATE,
                type2=TransitivityLabel.DEGENERATE,
            )
        ]
        path = tmp_path / "centroid.svg"
        emit_svg(records, path)
        text = path.read_text(encoding="utf-8")
        # u=0.5 -> 50 + 900*0.5; v=sqrt(3)/6 -> 850 - 900*v
        assert '<circle cx="500.000" cy="590.192"' in text

    def test_rejected_records_are_skipped(self, tmp_path):
        records = run_experiment("classical", 300, 31)
        path = tmp_path / "all.svg"
        emit_svg(records, path)
        in_simplex = sum(1 for r in records if r.frequencies is not None)
        assert path.read_text(encoding="utf-8").count("<circle") == in_simplex

    def test_class_coloring_adds_key(self, tmp_path):
        records = run_experiment("quantum", 2_000, 7)
        path = tmp_path / "colored.svg"
        emit_svg(records, path, SvgOptions(color_by="type2"))
        text = path.read_text(encoding="utf-8")
        assert "transitive" in text
        assert text.count("<text") >= 2

    def test_unknown_color_mode_rejected(self, tmp_path):
        with pytest.raises(ValueError):
            emit_svg([], tmp_path / "bad.svg", SvgOptions(color_by="type3"))
