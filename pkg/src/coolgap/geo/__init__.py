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
Great-circle distance, planar polygon centroids and buffered bounding boxes.
"""

from .bbox import buffer_radius_km, buffered_bbox
from .exceptions import (
    AntimeridianUnsupported,
    DegeneratePolygon,
    GeoError,
    TooFewLandmarks,
)
from .geodesic import (
    EARTH_RADIUS_KM,
    KM_PER_DEGREE,
    geodesic_distance_km,
    max_pairwise_distance_km,
    pairwise_distances_km,
)
from .polygon import multipolygon_centroid, polygon_centroid
from .types import BoundingBox, GeoPoint, PolygonRing

__all__ = [
    "EARTH_RADIUS_KM",
    "KM_PER_DEGREE",
    "AntimeridianUnsupported",
    "BoundingBox",
    "DegeneratePolygon",
    "GeoError",
    "GeoPoint",
    "PolygonRing",
    "TooFewLandmarks",
    "buffer_radius_km",
    "buffered_bbox",
    "geodesic_distance_km",
    "max_pairwise_distance_km",
    "multipolygon_centroid",
    "pairwise_distances_km",
    "polygon_centroid",
]
