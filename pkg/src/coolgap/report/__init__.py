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
Analysis orchestration and serialization: persistence pairs, death-value map
layers, top-k rankings, box-plot summaries and the `coolgap` CLI.
"""

from .analysis import (
    DEFAULT_TOP_K,
    TRACT_GEOID_LENGTH,
    analyze,
    cycle_deaths,
    fingerprint,
    landmark_deaths,
    ranking_overlap,
)
from .summary import compare_cities, summarize_deaths
from .types import (
    AnalysisReport,
    CycleDeath,
    Fingerprints,
    LandmarkDeath,
    RankingOverlap,
    SummaryStats,
)
from .writers import (
    format_float,
    read_summary_stats,
    render_analysis,
    render_pairs_csv,
    render_snapshot,
    write_analysis,
    write_outputs,
)

__all__ = [
    "DEFAULT_TOP_K",
    "TRACT_GEOID_LENGTH",
    "AnalysisReport",
    "CycleDeath",
    "Fingerprints",
    "LandmarkDeath",
    "RankingOverlap",
    "SummaryStats",
    "analyze",
    "compare_cities",
    "cycle_deaths",
    "fingerprint",
    "format_float",
    "landmark_deaths",
    "ranking_overlap",
    "read_summary_stats",
    "render_analysis",
    "render_pairs_csv",
    "render_snapshot",
    "summarize_deaths",
    "write_analysis",
    "write_outputs",
]
