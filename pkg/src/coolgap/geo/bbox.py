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
import logging
import math
from typing import Sequence

import numpy as np

from .exceptions import AntimeridianUnsupported, TooFewLandmarks
from .geodesic import KM_PER_DEGREE, max_pairwise_distance_km
from .types import BoundingBox, GeoPoint

logger = logging.getLogger(__name__)


def buffer_radius_km(landmarks: Sequence[GeoPoint]) -> float:
    """Half the longest distance between any two landmarks."""
    if len(landmarks) < 2:
        raise TooFewLandmarks(len(landmarks), 2)
    lats = np.fromiter((p.lat for p in landmarks), dtype=np.float64)
    lons = np.fromiter((p.lon for p in landmarks), dtype=np.float64)
    return max_pairwise_distance_km(lats, lons) / 2.0


def buffered_bbox(landmarks: Sequence[GeoPoint]) -> BoundingBox:
    """
    Bounding box of the landmarks grown on every side by the buffer radius.

    The radius is converted to degrees with r / KM_PER_DEGREE for latitude
    and r / (KM_PER_DEGREE * cos(mean latitude)) for longitude.

    Raises:
        TooFewLandmarks: With fewer than two landmarks.
        AntimeridianUnsupported: If the grown box leaves [-180, 180].
    """
    radius = buffer_radius_km(landmarks)
    lats = [p.lat for p in landmarks]
    lons = [p.lon for p in landmarks]
    mean_lat = math.radians(sum(lats) / len(lats))

    dlat = radius / KM_PER_DEGREE
    dlon = radius / (KM_PER_DEGREE * math.cos(mean_lat)) if radius > 0 else 0.0

    west, east = min(lons) - dlon, max(lons) + dlon
    if west < -180.0 or east > 180.0:
        raise AntimeridianUnsupported(west, east)
    south = max(-90.0, min(lats) - dlat)
    north = min(90.0, max(lats) + dlat)

    logger.debug(
        "Buffered bounding box",
        extra={"radius_km": radius, "dlat": dlat, "dlon": dlon},
    )
    return BoundingBox(
        southwest=GeoPoint(lat=south, lon=west),
        northeast=GeoPoint(lat=north, lon=east),
    )
