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
Great-circle distances on a spherical Earth (haversine, mean radius).
"""

import math

import numpy as np
import numpy.typing as npt

from .types import GeoPoint

# IUGG mean Earth radius
EARTH_RADIUS_KM = 6371.0088
KM_PER_DEGREE = 2.0 * math.pi * EARTH_RADIUS_KM / 360.0

FloatArray = npt.NDArray[np.float64]


def geodesic_distance_km(a: GeoPoint, b: GeoPoint) -> float:
    """Shortest arc length between two points, in kilometers."""
    # canonical argument order keeps the result bit-for-bit symmetric
    if (a.lat, a.lon) > (b.lat, b.lon):
        a, b = b, a
    lat1, lon1 = math.radians(a.lat), math.radians(a.lon)
    lat2, lon2 = math.radians(b.lat), math.radians(b.lon)
    h = (
        math.sin((lat2 - lat1) / 2.0) ** 2
        + math.cos(lat1) * math.cos(lat2) * math.sin((lon2 - lon1) / 2.0) ** 2
    )
    return 2.0 * EARTH_RADIUS_KM * math.asin(math.sqrt(min(1.0, h)))


def pairwise_distances_km(
    lats_a: npt.ArrayLike,
    lons_a: npt.ArrayLike,
    lats_b: npt.ArrayLike,
    lons_b: npt.ArrayLike,
) -> FloatArray:
    """
    Haversine distances between every point of set A (rows) and set B (columns).

    Returns:
        A len(A) x len(B) array of kilometers.
    """
    lat1 = np.radians(np.asarray(lats_a, dtype=np.float64))[:, None]
    lon1 = np.radians(np.asarray(lons_a, dtype=np.float64))[:, None]
    lat2 = np.radians(np.asarray(lats_b, dtype=np.float64))[None, :]
    lon2 = np.radians(np.asarray(lons_b, dtype=np.float64))[None, :]
    h = (
        np.sin((lat2 - lat1) / 2.0) ** 2
        + np.cos(lat1) * np.cos(lat2) * np.sin((lon2 - lon1) / 2.0) ** 2
    )
    distances: FloatArray = (
        2.0 * EARTH_RADIUS_KM * np.arcsin(np.sqrt(np.minimum(1.0, h)))
    )
    return distances


def max_pairwise_distance_km(
    lats: npt.ArrayLike, lons: npt.ArrayLike, block_size: int = 1024
) -> float:
    """Largest distance between any two points, computed in row blocks."""
    lat_arr = np.asarray(lats, dtype=np.float64)
    lon_arr = np.asarray(lons, dtype=np.float64)
    best = 0.0
    for start in range(0, len(lat_arr), block_size):
        stop = start + block_size
        block = pairwise_distances_km(
            lat_arr[start:stop], lon_arr[start:stop], lat_arr, lon_arr
        )
        if block.size:
            best = max(best, float(block.max()))
    return best
