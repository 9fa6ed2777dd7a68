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
import pytest

from coolgap.geo import GeoPoint
from coolgap.ingest import (
    CoordinateRangeError,
    ParseError,
    ValueRangeError,
    load_demographics,
    load_witnesses,
    parse_demographics,
    parse_witness_csv,
    parse_witness_geojson,
    save_witnesses,
    witness_csv,
)
from coolgap.witness import WitnessSet

from ..helpers import feature_collection, point_feature, polygon_feature

DEMOGRAPHICS_HEADER = "tract_id,pm_temp_f,canopy_pct,pop_under5,pop_over65\n"


class TestWitnessCsv:
    def test_two_rows(self):
        witnesses = parse_witness_csv("id,lat,lon\nnode/1,30.1,-97.7\nway/2,30.2,-97.8\n")

        assert witnesses.ids == ("node/1", "way/2")
        assert witnesses.points[1] == GeoPoint(lat=30.2, lon=-97.8)

    def test_header_only(self):
        assert len(parse_witness_csv("id,lat,lon\n")) == 0

    def test_latitude_out_of_range(self):
        with pytest.raises(CoordinateRangeError) as exc_info:
            parse_witness_csv("id,lat,lon\na,95,0\n", "w.csv")
        assert exc_info.value.where == "line 2"

    @pytest.mark.parametrize(
        "text",
        ["", "id,lat\na,1\n", "id,lat,lon\na,north,0\n", "id,lat,lon\n,1,1\n"],
    )
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_witness_csv(text)

    def test_duplicate_ids(self):
        with pytest.raises(ParseError):
            parse_witness_csv("id,lat,lon\na,1,1\na,2,2\n")

    def test_save_and_load(self, tmp_path):
        witnesses = WitnessSet(
            points=(GeoPoint(lat=30.123456789012345, lon=-97.1), GeoPoint(lat=0.0, lon=0.0)),
            ids=("node/7", "random/0"),
        )
        path = str(tmp_path / "witnesses.csv")

        save_witnesses(witnesses, path)

        assert load_witnesses(path) == witnesses
        assert witness_csv(witnesses).startswith("id,lat,lon\nnode/7,")

    def test_geojson_points(self, tmp_path):
        path = tmp_path / "witnesses.geojson"
        path.write_text(feature_collection(point_feature("node/1", -97.7, 30.1)))

        witnesses = load_witnesses(str(path))

        assert witnesses.ids == ("node/1",)
        assert witnesses.points == (GeoPoint(lat=30.1, lon=-97.7),)

    def test_geojson_polygon_rejected(self):
        text = feature_collection(
            point_feature("node/1", -97.7, 30.1),
            polygon_feature("way/2", [[0, 0], [1, 0], [1, 1], [0, 1], [0, 0]]),
        )

        with pytest.raises(ParseError, match="way/2"):
            parse_witness_geojson(text)


class TestDemographics:
    def test_canopy_becomes_gap(self):
        (tract,) = parse_demographics(DEMOGRAPHICS_HEADER + "48453000101,95.5,40,120,300\n")

        assert tract.tract_id == "48453000101"
        assert tract.canopy_gap_pct == 60.0
        assert tract.pm_temp == 95.5
        assert tract.is_complete

    def test_empty_cell_is_missing(self):
        (tract,) = parse_demographics(DEMOGRAPHICS_HEADER + "48453000101,,40,120,300\n")

        assert tract.pm_temp is None
        assert tract.missing_fields == ("pm_temp",)

    def test_leading_zeros_survive(self):
        (tract,) = parse_demographics(DEMOGRAPHICS_HEADER + "01001020100,90,10,1,2\n")
        assert tract.tract_id == "01001020100"

    def test_canopy_above_one_hundred(self):
        with pytest.raises(ValueRangeError) as exc_info:
            parse_demographics(DEMOGRAPHICS_HEADER + "48453000101,95,120,1,2\n")
        assert exc_info.value.field == "canopy_pct"

    def test_negative_count(self):
        with pytest.raises(ValueRangeError) as exc_info:
            parse_demographics(DEMOGRAPHICS_HEADER + "48453000101,95,20,-1,2\n")
        assert exc_info.value.field == "pop_under5"

    def test_non_numeric_cell(self):
        with pytest.raises(ParseError):
            parse_demographics(DEMOGRAPHICS_HEADER + "48453000101,hot,20,1,2\n")

    def test_missing_column(self):
        with pytest.raises(ParseError):
            parse_demographics("tract_id,pm_temp_f\n1,2\n")

    def test_load_from_file(self, tmp_path):
        path = tmp_path / "demographics.csv"
        path.write_text(
            DEMOGRAPHICS_HEADER
            + "48453000101,95,20,1,2\n48453000102,96,30,3,4\n48453000103,,30,3,4\n"
        )

        tracts = load_demographics(str(path))

        assert [t.tract_id for t in tracts] == [
            "48453000101",
            "48453000102",
            "48453000103",
        ]
        assert [t.is_complete for t in tracts] == [True, True, False]
