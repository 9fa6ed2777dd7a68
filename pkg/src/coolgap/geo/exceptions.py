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
"""Exceptions for geometry and distance computations."""

from ..exceptions import CoolgapError


class GeoError(CoolgapError):
    """Base class for all exceptions raised by the geo package."""

    pass


class DegeneratePolygon(GeoError):
    """Raised when a polygon's planar area is too small for a centroid."""

    def __init__(self, area: float, feature_id: str | None = None):
        where = f" (feature {feature_id!r})" if feature_id is not None else ""
        super().__init__(f"Degenerate polygon{where}: area {area:.3e} square degrees")
        self.area = area
        self.feature_id = feature_id

    def with_feature_id(self, feature_id: str) -> "DegeneratePolygon":
        return DegeneratePolygon(self.area, feature_id=feature_id)


class TooFewLandmarks(GeoError):
    """Raised when an operation needs more landmarks than were given."""

    def __init__(self, count: int, required: int):
        super().__init__(f"Need at least {required} landmarks, got {count}")
        self.count = count
        self.required = required


class AntimeridianUnsupported(GeoError):
    """Raised when a bounding box would cross the antimeridian."""

    def __init__(self, west: float, east: float):
        super().__init__(
            f"Bounding box longitudes [{west}, {east}] cross the antimeridian"
        )
        self.west = west
        self.east = east
