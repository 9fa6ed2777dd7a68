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
from typing import Any

import numpy as np

from coolgap.geo import GeoPoint
from coolgap.witness import LandmarkSet, WitnessSet

# block GEOIDs: the first 11 characters name the tract
SQUARE_IDS = (
    "484530001001001",
    "484530001001002",
    "484530002002001",
    "484530002002002",
)


def random_point_sets(
    rng: np.random.Generator,
    max_landmarks: int = 8,
    max_witnesses: int = 5,
    min_landmarks: int = 1,
    min_witnesses: int = 1,
    side: float = 0.1,
    origin: tuple[float, float] = (30.2, -97.8),
) -> tuple[LandmarkSet, WitnessSet]:
    """Uniform landmarks and witnesses in a `side`-degree square."""
    n = int(rng.integers(min_landmarks, max_landmarks + 1))
    m = int(rng.integers(min_witnesses, max_witnesses + 1))

    def points(count: int) -> tuple[GeoPoint, ...]:
        lats = origin[0] + side * rng.random(count)
        lons = origin[1] + side * rng.random(count)
        return tuple(GeoPoint(lat=float(a), lon=float(b)) for a, b in zip(lats, lons))

    return (
        LandmarkSet(points=points(n), ids=tuple(f"L{i}" for i in range(n))),
        WitnessSet(points=points(m), ids=tuple(f"W{i}" for i in range(m))),
    )


def feature_collection(*features: dict[str, Any]) -> str:
    return json.dumps({"type": "FeatureCollection", "features": list(features)})


def polygon_feature(feature_id: str, ring: list[list[float]]) -> dict[str, Any]:
    return {
        "type": "Feature",
        "id": feature_id,
        "properties": {},
        "geometry": {"type": "Polygon", "coordinates": [ring]},
    }


def point_feature(feature_id: str, lon: float, lat: float) -> dict[str, Any]:
    return {
        "type": "Feature",
        "properties": {"id": feature_id},
        "geometry": {"type": "Point", "coordinates": [lon, lat]},
    }
