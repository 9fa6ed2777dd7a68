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
Heat vulnerability index per census tract and the variance inflation factor
check of its four inputs.
"""

from .exceptions import HviError, InsufficientData, SingularDesign, ZeroVariance
from .index import city_stats, complete_case_matrix, hvi_score, rank_tracts, score_city
from .types import HVI_VARIABLES, CityStats, HviResult, TractDemographics, VifEntry
from .vif import vif

__all__ = [
    "HVI_VARIABLES",
    "CityStats",
    "HviError",
    "HviResult",
    "InsufficientData",
    "SingularDesign",
    "TractDemographics",
    "VifEntry",
    "ZeroVariance",
    "city_stats",
    "complete_case_matrix",
    "hvi_score",
    "rank_tracts",
    "score_city",
    "vif",
]
