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
import pytest

from coolgap.geo import GeoPoint
from coolgap.witness import ExplicitComplex, LandmarkSet, WitnessSet

from .helpers import SQUARE_IDS


@pytest.fixture
def hollow_triangle() -> ExplicitComplex:
    """Three vertices, edges at 1, 2 and 3, no 2-simplex."""
    return ExplicitComplex(
        [
            ((0,), 0.0),
            ((1,), 0.0),
            ((2,), 0.0),
            ((0, 1), 1.0),
            ((1, 2), 2.0),
            ((0, 2), 3.0),
        ]
    )


@pytest.fixture
def square_landmarks() -> LandmarkSet:
    """Corners of a 0.01-degree square at the equator, counterclockwise."""
    return LandmarkSet(
        points=(
            GeoPoint(lat=0.0, lon=0.0),
            GeoPoint(lat=0.0, lon=0.01),
            GeoPoint(lat=0.01, lon=0.01),
            GeoPoint(lat=0.01, lon=0.0),
        ),
        ids=SQUARE_IDS,
    )


@pytest.fixture
def square_witnesses() -> WitnessSet:
    """Midpoints of the square's sides; nothing near the diagonals."""
    return WitnessSet(
        points=(
            GeoPoint(lat=0.0, lon=0.005),
            GeoPoint(lat=0.005, lon=0.01),
            GeoPoint(lat=0.01, lon=0.005),
            GeoPoint(lat=0.005, lon=0.0),
        ),
        ids=("node/1", "node/2", "node/3", "node/4"),
    )
