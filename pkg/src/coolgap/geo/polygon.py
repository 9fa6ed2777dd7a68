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
Planar (lon/lat space) area-weighted centroids via the shoelace formula.
"""

from typing import Sequence

import numpy as np

from .exceptions import DegeneratePolygon
from .types import GeoPoint, PolygonRing, Ring

MIN_AREA_SQ_DEG = 1e-12


def _ring_moments(ring: Ring) -> tuple[float, float, float]:
    """Absolute area and area-weighted centroid (x = lon, y = lat) of one ring."""
    x = np.fromiter((p.lon for p in ring), dtype=np.float64, count=len(ring))
    y = np.fromiter((p.lat for p in ring), dtype=np.float64, count=len(ring))
    # shift to the vertex mean for conditioning; the mean does not depend on
    # vertex order, so the result is stable under rotation and reversal
    x0, y0 = float(x.mean()), float(y.mean())
    x, y = x - x0, y - y0
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    cross = x * yn - xn * y
    signed_area = 0.5 * float(cross.sum())
    if signed_area == 0.0:
        return 0.0, x0, y0
    cx = float(((x + xn) * cross).sum()) / (6.0 * signed_area)
    cy = float(((y + yn) * cross).sum()) / (6.0 * signed_area)
    return abs(signed_area), cx + x0, cy + y0


def _polygon_moments(poly: PolygonRing) -> tuple[float, float, float]:
    area, cx, cy = _ring_moments(poly.vertices)
    mx, my = area * cx, area * cy
    for hole in poly.holes:
        hole_area, hx, hy = _ring_moments(hole)
        area -= hole_area
        mx -= hole_area * hx
        my -= hole_area * hy
    return area, mx, my


def polygon_centroid(poly: PolygonRing) -> GeoPoint:
    """
    Area-weighted centroid of a polygon; interior rings subtract.

    Raises:
        DegeneratePolygon: If the net area is below 1e-12 square degrees.
    """
    return multipolygon_centroid([poly])


def multipolygon_centroid(polygons: Sequence[PolygonRing]) -> GeoPoint:
    """Area-weighted centroid over every part of a multi-part geometry."""
    total_area = total_mx = total_my = 0.0
    for poly in polygons:
        area, mx, my = _polygon_moments(poly)
        total_area += area
        total_mx += mx
        total_my += my
    if total_area < MIN_AREA_SQ_DEG:
        raise DegeneratePolygon(total_area)
    return GeoPoint(lat=total_my / total_area, lon=total_mx / total_area)
