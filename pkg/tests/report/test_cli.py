# Copyright 2026 coolgap contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import json
import os

import pytest
from click.testing import CliRunner

from coolgap.report.cli import cli

from ..helpers import feature_collection, point_feature

ENDPOINT = "https://overpass.test/api/interpreter"
DEMOGRAPHICS = (
    "tract_id,pm_temp_f,canopy_pct,pop_under5,pop_over65\n"
    "48453000100,99,10,300,500\n"
    "48453000200,95,30,200,300\n"
    "48453000300,91,50,100,100\n"
    "48453000400,93,20,220,150\n"
    "48453000500,97,60,50,400\n"
    "48453000600,90,40,150,250\n"
    "48453000700,,40,150,250\n"
)


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path, monkeypatch):
    """No COOLGAP_* variables, .env or coolgap.json leak in from the host."""
    for name in list(os.environ):
        if name.startswith("COOLGAP_"):
            monkeypatch.delenv(name)
    monkeypatch.chdir(tmp_path)


@pytest.fixture
def three_landmarks(tmp_path) -> str:
    """Three landmarks on a line, a witness between each neighbouring pair."""
    regions = tmp_path / "line.geojson"
    regions.write_text(
        feature_collection(
            point_feature("a", 0.0, 0.0),
            point_feature("b", 0.01, 0.0),
            point_feature("c", 0.02, 0.0),
        )
    )
    return str(regions)


@pytest.fixture
def line_witnesses(tmp_path) -> str:
    witnesses = tmp_path / "witnesses.csv"
    witnesses.write_text("id,lat,lon\nnode/1,0,0.005\nnode/2,0,0.015\n")
    return str(witnesses)


def _invoke(*args: str):
    return CliRunner().invoke(cli, list(args))


class TestAnalyzeCommand:
    def test_three_landmarks(self, tmp_path, three_landmarks, line_witnesses):
        out = tmp_path / "out"

        result = _invoke(
            "analyze", three_landmarks, "--witnesses", line_witnesses, "--out", str(out)
        )

        assert result.exit_code == 0, result.output
        rows = (out / "pairs.csv").read_text().splitlines()[1:]
        assert len(rows) == 3
        assert all(row.startswith("0,") for row in rows)
        assert sum(1 for row in rows if row.split(",")[2] == "inf") == 1
        summary = json.loads((out / "summary.json").read_text())
        assert summary["city"] == "line"

    def test_rerun_is_byte_identical(self, tmp_path, three_landmarks, line_witnesses):
        for name in ("first", "second"):
            result = _invoke(
                "analyze",
                three_landmarks,
                "--witnesses",
                line_witnesses,
                "--out",
                str(tmp_path / name),
            )
            assert result.exit_code == 0, result.output

        first = sorted((tmp_path / "first").iterdir())
        assert [p.name for p in first] == sorted(p.name for p in (tmp_path / "second").iterdir())
        for path in first:
            assert path.read_bytes() == (tmp_path / "second" / path.name).read_bytes()

    def test_missing_regions_file(self, tmp_path, line_witnesses):
        out = tmp_path / "out"

        result = _invoke(
            "analyze",
            str(tmp_path / "missing.geojson"),
            "--witnesses",
            line_witnesses,
            "--out",
            str(out),
        )

        assert result.exit_code == 1
        assert "Error:" in result.output
        assert not out.exists()

    def test_needs_a_witness_source(self, tmp_path, three_landmarks):
        result = _invoke("analyze", three_landmarks, "--out", str(tmp_path / "out"))

        assert result.exit_code == 1

    def test_fetch_failure_exits_two(self, tmp_path, three_landmarks, requests_mock):
        requests_mock.post(ENDPOINT, status_code=500, text="busy")
        out = tmp_path / "out"

        result = _invoke(
            "--endpoint",
            ENDPOINT,
            "--cache-dir",
            str(tmp_path / "cache"),
            "analyze",
            three_landmarks,
            "--fetch",
            "--out",
            str(out),
        )

        assert result.exit_code == 2
        assert not out.exists()

    def test_with_demographics(self, tmp_path, three_landmarks, line_witnesses):
        demographics = tmp_path / "tracts.csv"
        demographics.write_text(DEMOGRAPHICS)
        out = tmp_path / "out"

        result = _invoke(
            "--top-k",
            "2",
            "analyze",
            three_landmarks,
            "--witnesses",
            line_witnesses,
            "--demographics",
            str(demographics),
            "--city",
            "Austin",
            "--out",
            str(out),
        )

        assert result.exit_code == 0, result.output
        top = (out / "top_k_hvi.csv").read_text().splitlines()
        assert top[0] == "rank,tract_id,score"
        assert [line.split(",")[1] for line in top[1:]] == ["48453000100", "48453000200"]
        summary = json.loads((out / "summary.json").read_text())
        assert summary["city"] == "Austin"
        assert summary["top_k"] == 2


class TestOtherCommands:
    def test_hvi(self, tmp_path):
        demographics = tmp_path / "tracts.csv"
        demographics.write_text(DEMOGRAPHICS)
        out = tmp_path / "out"

        result = _invoke("hvi", str(demographics), "--out", str(out))

        assert result.exit_code == 0, result.output
        rows = (out / "hvi.csv").read_text().splitlines()
        assert rows[0] == (
            "tract_id,z_pm_temp,z_canopy_gap_pct,z_pop_under5,z_pop_over65,score,missing"
        )
        assert rows[-1] == "48453000700,,,,,,true"
        vif_rows = (out / "vif.csv").read_text().splitlines()
        assert vif_rows[0] == "variable,vif,r_squared,singular"
        assert len(vif_rows) == 5

    def test_hvi_without_enough_tracts_for_vif(self, tmp_path):
        demographics = tmp_path / "tracts.csv"
        demographics.write_text("\n".join(DEMOGRAPHICS.splitlines()[:4]) + "\n")
        out = tmp_path / "out"

        result = _invoke("hvi", str(demographics), "--out", str(out))

        assert result.exit_code == 0, result.output
        assert not (out / "vif.csv").exists()

    def test_summary_compares_cities(self, tmp_path, three_landmarks, line_witnesses):
        for city in ("austin", "miami"):
            _invoke(
                "analyze",
                three_landmarks,
                "--witnesses",
                line_witnesses,
                "--city",
                city,
                "--out",
                str(tmp_path / city),
            )

        result = _invoke("summary", str(tmp_path / "austin"), str(tmp_path / "miami"))

        assert result.exit_code == 0, result.output
        lines = result.output.splitlines()
        assert lines[0] == "city,dim,count,infinite_count,min,q1,median,q3,max,outliers"
        assert [line.split(",")[0] for line in lines[1:]] == [
            "austin",
            "austin",
            "miami",
            "miami",
        ]

    def test_snapshot(self, tmp_path, three_landmarks, line_witnesses):
        out = tmp_path / "snapshot.geojson"

        result = _invoke(
            "snapshot",
            three_landmarks,
            "--witnesses",
            line_witnesses,
            "--alpha",
            "1.0",
            "--out",
            str(out),
        )

        assert result.exit_code == 0, result.output
        document = json.loads(out.read_text())
        assert document["alpha_km"] == 1.0
        assert sorted(f["properties"]["landmark_ids"] for f in document["features"]) == [
            ["a", "b"],
            ["b", "c"],
        ]

    def test_snapshot_rejects_negative_alpha(self, tmp_path, three_landmarks, line_witnesses):
        result = _invoke(
            "snapshot",
            three_landmarks,
            "--witnesses",
            line_witnesses,
            "--alpha",
            "-1",
            "--out",
            str(tmp_path / "s.geojson"),
        )

        assert result.exit_code == 1

    def test_synthesize_is_seeded(self, tmp_path, three_landmarks):
        paths = [tmp_path / "w1.csv", tmp_path / "w2.csv"]
        for path in paths:
            result = _invoke(
                "--seed", "7", "synthesize", three_landmarks, "--count", "5", "--out", str(path)
            )
            assert result.exit_code == 0, result.output

        lines = paths[0].read_text().splitlines()
        assert len(lines) == 6
        assert lines[1].startswith("random/0,")
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_fetch_witnesses(self, tmp_path, requests_mock):
        requests_mock.post(
            ENDPOINT,
            json={"elements": [{"type": "node", "id": 5, "lat": 30.2, "lon": -97.7}]},
        )
        out = tmp_path / "witnesses.csv"

        result = _invoke(
            "--endpoint",
            ENDPOINT,
            "--cache-dir",
            str(tmp_path / "cache"),
            "fetch-witnesses",
            "--bbox",
            "-97.9,30.1,-97.6,30.5",
            "--tag",
            "library",
            "--out",
            str(out),
        )

        assert result.exit_code == 0, result.output
        assert out.read_text() == "id,lat,lon\nnode/5,30.2,-97.7\n"

    def test_bad_bbox(self, tmp_path):
        result = _invoke(
            "fetch-witnesses", "--bbox", "1,2,3", "--out", str(tmp_path / "w.csv")
        )

        assert result.exit_code == 2
