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
"""
Region documents: GeoJSON FeatureCollections of Polygon, MultiPolygon or Point
features in WGS84 lon-lat order, one landmark per feature.
"""

import json
import logging
from typing import Any, Sequence

from fsspec import AbstractFileSystem
from pydantic import ValidationError

from ..geo import DegeneratePolygon, GeoPoint, PolygonRing
from ..storage import read_text, write_text
from ..witness import LandmarkSet
from .exceptions import DuplicateId, MissingId, ParseError
from .types import RegionFeature, RegionFile, make_point

logger = logging.getLogger(__name__)


def _ring(coords: Any, source: str, where: str) -> tuple[GeoPoint, ...]:
    if not isinstance(coords, list):
        raise ParseError(source, f"{where}: a ring must be a list of positions")
    return tuple(_position(c, source, where) for c in coords)


def _position(coord: Any, source: str, where: str) -> GeoPoint:
    if (
        not isinstance(coord, list)
        or len(coord) < 2
        or not all(isinstance(c, (int, float)) for c in coord[:2])
    ):
        raise ParseError(source, f"{where}: malformed position {coord!r}")
    return make_point(float(coord[1]), float(coord[0]), source, where)


def _polygon(coords: Any, source: str, where: str) -> PolygonRing:
    if not isinstance(coords, list) or not coords:
        raise ParseError(source, f"{where}: a polygon needs an outer ring")
    outer, *holes = (_ring(r, source, where) for r in coords)
    try:
        return PolygonRing(vertices=outer, holes=tuple(holes))
    except ValidationError as e:
        raise ParseError(source, f"{where}: {e.errors()[0]['msg']}") from e


def _feature_id(feature: dict[str, Any], id_property: str) -> str | None:
    value = feature.get("id")
    if value is None:
        properties = feature.get("properties") or {}
        value = properties.get(id_property)
    if value is None or value == "":
        return None
    return str(value)


def _parse_feature(
    feature: Any, index: int, source: str, id_property: str
) -> RegionFeature:
    if not isinstance(feature, dict):
        raise ParseError(source, f"feature {index} is not an object")
    feature_id = _feature_id(feature, id_property)
    if feature_id is None:
        raise MissingId(source, index)

    geometry = feature.get("geometry")
    if not isinstance(geometry, dict):
        raise ParseError(source, f"feature {feature_id!r} has no geometry")
    kind = geometry.get("type")
    coords = geometry.get("coordinates")
    where = f"feature {feature_id!r}"
    if kind == "Point":
        return RegionFeature(id=feature_id, point=_position(coords, source, where))
    if kind == "Polygon":
        return RegionFeature(id=feature_id, polygons=(_polygon(coords, source, where),))
    if kind == "MultiPolygon":
        if not isinstance(coords, list) or not coords:
            raise ParseError(source, f"{where}: empty MultiPolygon")
        return RegionFeature(
            id=feature_id, polygons=tuple(_polygon(p, source, where) for p in coords)
        )
    raise ParseError(source, f"{where}: unsupported geometry type {kind!r}")


def parse_region_document(
    text: str, source: str = "<document>", id_property: str = "id"
) -> RegionFile:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(source, f"invalid JSON: {e}") from e
    if not isinstance(document, dict) or document.get("type") != "FeatureCollection":
        raise ParseError(source, "expected a GeoJSON FeatureCollection")
    features = document.get("features")
    if not isinstance(features, list):
        raise ParseError(source, "FeatureCollection has no features list")

    parsed: list[RegionFeature] = []
    seen: set[str] = set()
    for index, feature in enumerate(features):
        region = _parse_feature(feature, index, source, id_property)
        if region.id in seen:
            raise DuplicateId(source, index, region.id)
        seen.add(region.id)
        parsed.append(region)
    return RegionFile(features=tuple(parsed))


def read_region_file(
    path: str,
    id_property: str = "id",
    file_system: AbstractFileSystem | None = None,
) -> RegionFile:
    """
    Parse a region document.

    Raises:
        FileNotFoundError: If the file does not exist.
        ParseError: If the document is malformed.
        MissingId: If a feature has no id; DuplicateId if two share one.
        CoordinateRangeError: If a position is outside the lat/lon ranges.
    """
    return parse_region_document(read_text(path, file_system), path, id_property)


def load_regions(
    path: str,
    id_property: str = "id",
    file_system: AbstractFileSystem | None = None,
) -> LandmarkSet:
    """
    One landmark per region feature: the planar area-weighted centroid of its
    polygons, or its point geometry unchanged.

    Raises:
        DegeneratePolygon: With the offending feature id attached.
    """
    regions = read_region_file(path, id_property, file_system)
    if not regions.features:
        raise ParseError(path, "the document has no features")
    points: list[GeoPoint] = []
    for feature in regions.features:
        try:
            points.append(feature.centroid())
        except DegeneratePolygon as e:
            raise e.with_feature_id(feature.id) from e
    landmarks = LandmarkSet(
        points=tuple(points), ids=tuple(f.id for f in regions.features)
    )
    logger.info("Loaded regions", extra={"path": path, "landmarks": len(landmarks)})
    return landmarks


def points_feature_collection(
    ids: Sequence[str], points: Sequence[GeoPoint]
) -> dict[str, Any]:
    return {
        "type": "FeatureCollection",
        "features": [
            {
                "type": "Feature",
                "id": identifier,
                "properties": {"id": identifier},
                "geometry": {"type": "Point", "coordinates": [p.lon, p.lat]},
            }
            for identifier, p in zip(ids, points)
        ],
    }


def save_regions(
    landmarks: LandmarkSet,
    path: str,
    file_system: AbstractFileSystem | None = None,
) -> None:
    """Write landmarks as a Point FeatureCollection that load_regions reads back."""
    document = points_feature_collection(landmarks.ids, landmarks.points)
    write_text(path, json.dumps(document, indent=2) + "\n", file_system)
