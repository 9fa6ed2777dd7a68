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
Heat vulnerability index: the sum of four city-standardized variables
(temperature, canopy gap, residents under 5 and residents over 65).
"""

import logging
import math
from typing import Sequence

import numpy as np
import numpy.typing as npt

from ..telemetry import log_stage
from .exceptions import InsufficientData, ZeroVariance
from .types import HVI_VARIABLES, CityStats, HviResult, TractDemographics

logger = logging.getLogger(__name__)

MIN_TRACTS_FOR_STATS = 2


def complete_case_matrix(
    tracts: Sequence[TractDemographics],
) -> tuple[list[TractDemographics], npt.NDArray[np.float64]]:
    """Complete tracts and their variables as an (n, 4) array."""
    complete = [t for t in tracts if t.is_complete]
    matrix = np.array(
        [t.as_vector() for t in complete], dtype=np.float64
    ).reshape(len(complete), len(HVI_VARIABLES))
    return complete, matrix


def city_stats(tracts: Sequence[TractDemographics]) -> CityStats:
    """
    Population mean and standard deviation (divide by N) of each variable over
    the tracts with no missing values.

    Raises:
        InsufficientData: If fewer than 2 complete tracts remain.
        ZeroVariance: If any variable is constant over those tracts.
    """
    complete, matrix = complete_case_matrix(tracts)
    if len(complete) < MIN_TRACTS_FOR_STATS:
        raise InsufficientData(len(complete), MIN_TRACTS_FOR_STATS)

    mean = matrix.mean(axis=0)
    std = matrix.std(axis=0, ddof=0)
    constant = [name for name, s in zip(HVI_VARIABLES, std) if s == 0.0]
    if constant:
        raise ZeroVariance(constant)

    if len(complete) < len(tracts):
        logger.info(
            "Excluded tracts with missing values",
            extra={"excluded": len(tracts) - len(complete), "kept": len(complete)},
        )
    return CityStats(
        mean={name: float(m) for name, m in zip(HVI_VARIABLES, mean)},
        std={name: float(s) for name, s in zip(HVI_VARIABLES, std)},
        count=len(complete),
    )


def hvi_score(tract: TractDemographics, stats: CityStats) -> HviResult:
    """Score one tract; a tract with any missing value is flagged, not scored."""
    missing = tract.missing_fields
    if missing:
        return HviResult(tract_id=tract.tract_id, missing_fields=missing)
    z_scores = {
        name: (value - stats.mean[name]) / stats.std[name]
        for name, value in zip(HVI_VARIABLES, tract.as_vector())
    }
    return HviResult(
        tract_id=tract.tract_id,
        score=math.fsum(z_scores.values()),
        z_scores=z_scores,
    )


@log_stage
def score_city(tracts: Sequence[TractDemographics]) -> list[HviResult]:
    """City statistics followed by a score for every tract, in input order."""
    stats = city_stats(tracts)
    return [hvi_score(t, stats) for t in tracts]


def rank_tracts(results: Sequence[HviResult], k: int) -> list[HviResult]:
    """Top k scored tracts by score descending, ties by tract id."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    scored = [r for r in results if r.score is not None]
    scored.sort(key=lambda r: (-(r.score or 0.0), r.tract_id))
    return scored[:k]
