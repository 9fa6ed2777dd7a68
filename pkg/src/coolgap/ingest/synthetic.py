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
import numpy as np

from ..geo import BoundingBox, GeoPoint
from ..witness import WitnessSet


def random_witnesses(bbox: BoundingBox, count: int, seed: int) -> WitnessSet:
    """
    `count` witnesses drawn uniformly in latitude and longitude inside the box,
    reproducible for a given seed. Ids are "random/0", "random/1", ...
    """
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    rng = np.random.default_rng(seed)
    lats = rng.uniform(bbox.southwest.lat, bbox.northeast.lat, size=count)
    lons = rng.uniform(bbox.southwest.lon, bbox.northeast.lon, size=count)
    return WitnessSet(
        points=tuple(
            GeoPoint(lat=float(lat), lon=float(lon)) for lat, lon in zip(lats, lons)
        ),
        ids=tuple(f"random/{i}" for i in range(count)),
    )
