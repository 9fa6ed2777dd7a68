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
from typing import Sequence

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .exceptions import AntimeridianUnsupported


class GeoPoint(BaseModel):
    """A WGS84 latitude/longitude position in degrees."""

    model_config = ConfigDict(frozen=True)

    lat: float = Field(ge=-90.0, le=90.0, allow_inf_nan=False)
    lon: float = Field(ge=-180.0, le=180.0, allow_inf_nan=False)


Ring = tuple[GeoPoint, ...]


def _open_ring(vertices: Ring) -> Ring:
    # GeoJSON rings repeat the first vertex at the end; closure is implicit here
    if len(vertices) > 1 and vertices[0] == vertices[-1]:
        vertices = vertices[:-1]
    if len(vertices) < 3:
        raise ValueError(
            f"a ring needs at least 3 distinct vertices, got {len(vertices)}"
        )
    return vertices


class PolygonRing(BaseModel):
    """An outer ring with optional interior rings (holes)."""

    model_config = ConfigDict(frozen=True)

    vertices: Ring
    holes: tuple[Ring, ...] = ()

    @field_validator("vertices")
    @classmethod
    def _check_vertices(cls, value: Ring) -> Ring:
        return _open_ring(value)

    @field_validator("holes")
    @classmethod
    def _check_holes(cls, value: tuple[Ring, ...]) -> tuple[Ring, ...]:
        return tuple(_open_ring(hole) for hole in value)

    @classmethod
    def from_lonlat(
        cls,
        outer: Sequence[Sequence[float]],
        holes: Sequence[Sequence[Sequence[float]]] = (),
    ) -> "PolygonRing":
        """Build from GeoJSON-ordered [lon, lat] coordinate lists."""

        def ring(coords: Sequence[Sequence[float]]) -> Ring:
            return tuple(GeoPoint(lat=c[1], lon=c[0]) for c in coords)

        return cls(vertices=ring(outer), holes=tuple(ring(h) for h in holes))


class BoundingBox(BaseModel):
    """Axis-aligned lat/lon box; boxes crossing the antimeridian are rejected."""

    model_config = ConfigDict(frozen=True)

    southwest: GeoPoint
    northeast: GeoPoint

    @model_validator(mode="after")
    def _check_corners(self) -> "BoundingBox":
        if self.southwest.lat > self.northeast.lat:
            raise ValueError("southwest latitude exceeds northeast latitude")
        if self.southwest.lon > self.northeast.lon:
            raise AntimeridianUnsupported(self.southwest.lon, self.northeast.lon)
        return self

    @classmethod
    def from_corners(
        cls, sw_lon: float, sw_lat: float, ne_lon: float, ne_lat: float
    ) -> "BoundingBox":
        """Build from (lon, lat) corner pairs, the order used in published tables."""
        return cls(
            southwest=GeoPoint(lat=sw_lat, lon=sw_lon),
            northeast=GeoPoint(lat=ne_lat, lon=ne_lon),
        )

    def contains(self, point: GeoPoint, strict: bool = False) -> bool:
        if strict:
            return (
                self.southwest.lat < point.lat < self.northeast.lat
                and self.southwest.lon < point.lon < self.northeast.lon
            )
        return (
            self.southwest.lat <= point.lat <= self.northeast.lat
            and self.southwest.lon <= point.lon <= self.northeast.lon
        )

    def as_overpass(self) -> str:
        """The (south,west,north,east) filter string Overpass QL expects."""
        return (
            f"{self.southwest.lat!r},{self.southwest.lon!r},"
            f"{self.northeast.lat!r},{self.northeast.lon!r}"
        )
