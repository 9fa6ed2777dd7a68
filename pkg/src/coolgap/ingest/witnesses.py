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
import io
import logging

import pandas as pd
from fsspec import AbstractFileSystem

from ..geo import GeoPoint
from ..storage import read_text, write_text
from ..witness import WitnessSet
from .exceptions import ParseError
from .regions import parse_region_document
from .types import make_point

logger = logging.getLogger(__name__)

WITNESS_COLUMNS = ("id", "lat", "lon")


def _is_geojson(path: str, text: str) -> bool:
    return path.lower().endswith((".geojson", ".json")) or text.lstrip().startswith(
        "{"
    )


def parse_witness_csv(text: str, source: str = "<csv>") -> WitnessSet:
    try:
        frame = pd.read_csv(
            io.StringIO(text), dtype=str, keep_default_na=False, skipinitialspace=True
        )
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise ParseError(source, str(e)) from e
    missing = [c for c in WITNESS_COLUMNS if c not in frame.columns]
    if missing:
        raise ParseError(source, f"missing columns {', '.join(missing)}")

    points: list[GeoPoint] = []
    for row, (identifier, lat, lon) in enumerate(
        frame[list(WITNESS_COLUMNS)].itertuples(index=False, name=None), start=2
    ):
        if not identifier:
            raise ParseError(source, f"line {row}: empty id")
        try:
            lat_value, lon_value = float(lat), float(lon)
        except ValueError as e:
            raise ParseError(source, f"line {row}: {e}") from e
        points.append(make_point(lat_value, lon_value, source, f"line {row}"))
    try:
        return WitnessSet(points=tuple(points), ids=tuple(frame["id"]))
    except ValueError as e:
        raise ParseError(source, str(e)) from e


def parse_witness_geojson(text: str, source: str = "<document>") -> WitnessSet:
    regions = parse_region_document(text, source)
    points: list[GeoPoint] = []
    for feature in regions.features:
        if feature.point is None:
            raise ParseError(source, f"witness {feature.id!r} is not a Point")
        points.append(feature.point)
    return WitnessSet(points=tuple(points), ids=tuple(f.id for f in regions.features))


def load_witnesses(
    path: str, file_system: AbstractFileSystem | None = None
) -> WitnessSet:
    """
    Witnesses in file order from a CSV (header id,lat,lon) or a GeoJSON Point
    FeatureCollection.

    Raises:
        ParseError: If the file is malformed.
        CoordinateRangeError: If a coordinate is out of range.
    """
    text = read_text(path, file_system)
    if _is_geojson(path, text):
        witnesses = parse_witness_geojson(text, path)
    else:
        witnesses = parse_witness_csv(text, path)
    logger.info("Loaded witnesses", extra={"path": path, "witnesses": len(witnesses)})
    return witnesses


def witness_csv(witnesses: WitnessSet) -> str:
    frame = pd.DataFrame(
        {
            "id": list(witnesses.ids),
            "lat": [repr(p.lat) for p in witnesses.points],
            "lon": [repr(p.lon) for p in witnesses.points],
        },
        columns=list(WITNESS_COLUMNS),
    )
    return frame.to_csv(index=False, lineterminator="\n")


def save_witnesses(
    witnesses: WitnessSet,
    path: str,
    file_system: AbstractFileSystem | None = None,
) -> None:
    """Write the witness CSV (UTF-8, LF line endings)."""
    write_text(path, witness_csv(witnesses), file_system)

