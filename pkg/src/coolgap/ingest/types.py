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
import math
from datetime import datetime
from typing import Any, Final

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..geo import BoundingBox, GeoPoint, PolygonRing, multipolygon_centroid
from ..witness import WitnessSet
from .exceptions import CoordinateRangeError

DEFAULT_TAGS: Final = ("library", "community center", "senior", "recreation center")


def make_point(lat: float, lon: float, source: str, where: str = "") -> GeoPoint:
    """A GeoPoint, or CoordinateRangeError naming the offending input."""
    if not (math.isfinite(lat) and -90.0 <= lat <= 90.0):
        raise CoordinateRangeError(source, "lat", lat, where)
    if not (math.isfinite(lon) and -180.0 <= lon <= 180.0):
        raise CoordinateRangeError(source, "lon", lon, where)
    return GeoPoint(lat=lat, lon=lon)


class RegionFeature(BaseModel):
    """One region: polygon parts, or a point that stands in for the centroid."""

    model_config = ConfigDict(frozen=True)

    id: str
    polygons: tuple[PolygonRing, ...] = ()
    point: GeoPoint | None = None

    def centroid(self) -> GeoPoint:
        if self.point is not None:
            return self.point
        return multipolygon_centroid(self.polygons)


class RegionFile(BaseModel):
    model_config = ConfigDict(frozen=True)

    features: tuple[RegionFeature, ...]


class WitnessQuery(BaseModel):
    """A bounding box and the tag groups to search inside it."""

    model_config = ConfigDict(frozen=True)

    bbox: BoundingBox
    tags: tuple[str, ...] = DEFAULT_TAGS

    @field_validator("tags")
    @classmethod
    def _check_tags(cls, value: tuple[str, ...]) -> tuple[str, ...]:
        if not value:
            raise ValueError("a witness query needs at least one tag group")
        return value


class CacheEntry(BaseModel):
    """A cached query result: raw responses per tag group and the parsed witnesses."""

    key: str
    fetched_at: datetime
    endpoint: str
    queries: list[str] = Field(default_factory=list)
    responses: list[dict[str, Any]] = Field(default_factory=list)
    witnesses: WitnessSet
