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
Filtered witness complex: landmarks are vertices, and a set of landmarks spans
a simplex at alpha when every pair of them lies within alpha of a common
witness.
"""

from .complex import ExplicitComplex, FilteredComplex, FlagComplex
from .construction import (
    DEFAULT_MAX_DIM,
    DEFAULT_MAX_WORKERS,
    build_filtered_complex,
    distance_matrix,
    edge_filtration_matrix,
    edge_filtration_value,
)
from .exceptions import DimensionTooLarge, InvalidFiltration, WitnessError
from .types import (
    DistanceMatrix,
    FilteredSimplex,
    LandmarkSet,
    Simplex,
    WitnessSet,
)

__all__ = [
    "DEFAULT_MAX_DIM",
    "DEFAULT_MAX_WORKERS",
    "DimensionTooLarge",
    "DistanceMatrix",
    "ExplicitComplex",
    "FilteredComplex",
    "FilteredSimplex",
    "FlagComplex",
    "InvalidFiltration",
    "LandmarkSet",
    "Simplex",
    "WitnessError",
    "WitnessSet",
    "build_filtered_complex",
    "distance_matrix",
    "edge_filtration_matrix",
    "edge_filtration_value",
]
