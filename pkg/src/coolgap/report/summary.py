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
import math
from typing import Iterable, Mapping

import numpy as np
import pandas as pd

from ..persistence import PersistencePair
from .types import SummaryStats

OUTLIER_IQR_FACTOR = 1.5

COMPARISON_COLUMNS = [
    "city",
    "dim",
    "count",
    "infinite_count",
    "min",
    "q1",
    "median",
    "q3",
    "max",
    "outliers",
]


def summarize_deaths(pairs: Iterable[PersistencePair], dim: int) -> SummaryStats:
    """
    Box-plot statistics of the death values of one dimension.

    Infinite deaths are left out of the statistics and counted separately.
    """
    deaths = [p.death for p in pairs if p.dim == dim]
    finite = np.array(sorted(d for d in deaths if math.isfinite(d)), dtype=np.float64)
    infinite_count = len(deaths) - len(finite)
    if len(finite) == 0:
        return SummaryStats(dim=dim, count=0, infinite_count=infinite_count)

    q1, median, q3 = (
        float(q) for q in np.percentile(finite, [25, 50, 75], method="linear")
    )
    spread = q3 - q1
    lower = q1 - OUTLIER_IQR_FACTOR * spread
    upper = q3 + OUTLIER_IQR_FACTOR * spread
    outliers = tuple(float(d) for d in finite if d < lower or d > upper)
    return SummaryStats(
        dim=dim,
        count=len(finite),
        infinite_count=infinite_count,
        min=float(finite[0]),
        q1=q1,
        median=median,
        q3=q3,
        max=float(finite[-1]),
        lower_fence=lower,
        upper_fence=upper,
        outliers=outliers,
    )


def compare_cities(
    summaries: Mapping[str, Mapping[int, SummaryStats]],
) -> pd.DataFrame:
    """One row per (city, dimension) of box-plot statistics, cities in name order."""
    rows = [
        {
            "city": city,
            "dim": dim,
            "count": stats.count,
            "infinite_count": stats.infinite_count,
            "min": stats.min,
            "q1": stats.q1,
            "median": stats.median,
            "q3": stats.q3,
            "max": stats.max,
            "outliers": len(stats.outliers),
        }
        for city in sorted(summaries)
        for dim, stats in sorted(summaries[city].items())
    ]
    return pd.DataFrame(rows, columns=COMPARISON_COLUMNS)
