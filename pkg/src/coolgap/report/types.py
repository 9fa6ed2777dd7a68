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
from dataclasses import dataclass, field

from pydantic import BaseModel, ConfigDict

from ..geo import GeoPoint
from ..hvi import HviResult
from ..persistence import PersistenceDiagram, RankedPair
from ..witness import LandmarkSet


class SummaryStats(BaseModel):
    """
    Box-plot statistics of the finite death values of one dimension.

    Quartiles use inclusive linear interpolation; outliers lie beyond
    Q1 - 1.5 IQR or Q3 + 1.5 IQR. With no finite deaths every statistic is None.
    """

    model_config = ConfigDict(frozen=True)

    dim: int
    count: int
    infinite_count: int = 0
    min: float | None = None
    q1: float | None = None
    median: float | None = None
    q3: float | None = None
    max: float | None = None
    lower_fence: float | None = None
    upper_fence: float | None = None
    outliers: tuple[float, ...] = ()

    @property
    def is_empty(self) -> bool:
        return self.count == 0


class RankingOverlap(BaseModel):
    """Tracts named by both the topological and the HVI top-k rankings."""

    model_config = ConfigDict(frozen=True)

    prefix_length: int
    topological_tracts: tuple[str, ...]
    hvi_tracts: tuple[str, ...]
    shared: tuple[str, ...]

    @property
    def jaccard(self) -> float:
        union = set(self.topological_tracts) | set(self.hvi_tracts)
        return len(self.shared) / len(union) if union else 0.0


@dataclass(frozen=True)
class LandmarkDeath:
    """The death value of the dimension-0 class a landmark gives birth to."""

    landmark_id: str
    point: GeoPoint
    death: float
    pair_rank: int | None


@dataclass(frozen=True)
class CycleDeath:
    """A dimension-1 class located at the triangle that fills it."""

    landmark_ids: tuple[str, ...]
    centroid: GeoPoint
    birth: float
    death: float
    pair_rank: int


@dataclass(frozen=True)
class Fingerprints:
    landmarks: int
    witnesses: int
    landmarks_sha256: str
    witnesses_sha256: str


@dataclass(frozen=True)
class AnalysisReport:
    city: str
    landmarks: LandmarkSet
    diagram: PersistenceDiagram
    max_dim: int
    k: int
    landmark_deaths: tuple[LandmarkDeath, ...]
    cycle_deaths: tuple[CycleDeath, ...]
    top_k: dict[int, list[RankedPair]]
    summaries: dict[int, SummaryStats]
    fingerprints: Fingerprints
    hvi_results: tuple[HviResult, ...] = ()
    hvi_top_k: tuple[HviResult, ...] = ()
    overlap: RankingOverlap | None = None
    reported_dims: tuple[int, ...] = field(default=(0, 1))
