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
The analysis pipeline: witness complex, persistence, death-value annotations
and rankings, with an optional heat vulnerability comparison.
"""

import hashlib
import logging
from typing import Sequence

from ..geo import GeoPoint
from ..hvi import HviResult, TractDemographics, rank_tracts, score_city
from ..persistence import (
    PersistenceDiagram,
    RankedPair,
    compute_persistence,
    top_k_deaths,
)
from ..telemetry import log_stage
from ..witness import (
    DEFAULT_MAX_DIM,
    DEFAULT_MAX_WORKERS,
    LandmarkSet,
    WitnessSet,
    build_filtered_complex,
)
from .summary import summarize_deaths
from .types import (
    AnalysisReport,
    CycleDeath,
    Fingerprints,
    LandmarkDeath,
    RankingOverlap,
)

logger = logging.getLogger(__name__)

DEFAULT_TOP_K = 5
# census block GEOIDs start with the 11-character GEOID of their tract
TRACT_GEOID_LENGTH = 11


def fingerprint(points: LandmarkSet | WitnessSet) -> str:
    digest = hashlib.sha256()
    for identifier, point in points.items():
        digest.update(f"{identifier},{point.lat!r},{point.lon!r}\n".encode("utf-8"))
    return digest.hexdigest()


def _ranks(diagram: PersistenceDiagram, dim: int) -> dict[tuple[int, ...], int]:
    pairs = diagram.in_dimension(dim)
    if not pairs:
        return {}
    ranked = top_k_deaths(diagram, dim, len(pairs), finite_only=False)
    return {r.pair.birth_simplex.vertices: r.rank for r in ranked}


def _centroid(points: Sequence[GeoPoint]) -> GeoPoint:
    return GeoPoint(
        lat=sum(p.lat for p in points) / len(points),
        lon=sum(p.lon for p in points) / len(points),
    )


def landmark_deaths(
    diagram: PersistenceDiagram, landmarks: LandmarkSet
) -> tuple[LandmarkDeath, ...]:
    """
    Each landmark keyed by the death of the dimension-0 class born at it.
    Landmarks whose class died the moment it was born get death 0.
    """
    ranks = _ranks(diagram, 0)
    deaths = {p.birth_simplex.vertices[0]: p.death for p in diagram.in_dimension(0)}
    return tuple(
        LandmarkDeath(
            landmark_id=identifier,
            point=point,
            death=deaths.get(i, 0.0),
            pair_rank=ranks.get((i,)),
        )
        for i, (identifier, point) in enumerate(landmarks.items())
    )


def cycle_deaths(
    diagram: PersistenceDiagram, landmarks: LandmarkSet
) -> tuple[CycleDeath, ...]:
    """Finite dimension-1 classes located at their death triangles, by rank."""
    ranks = _ranks(diagram, 1)
    located: list[CycleDeath] = []
    for pair in diagram.finite(1):
        if pair.death_simplex is None:
            continue
        vertices = pair.death_simplex.vertices
        located.append(
            CycleDeath(
                landmark_ids=tuple(landmarks.ids[v] for v in vertices),
                centroid=_centroid([landmarks.points[v] for v in vertices]),
                birth=pair.birth,
                death=pair.death,
                pair_rank=ranks[pair.birth_simplex.vertices],
            )
        )
    located.sort(key=lambda c: c.pair_rank)
    return tuple(located)


def ranking_overlap(
    top_landmarks: Sequence[RankedPair],
    hvi_tract_ids: Sequence[str],
    prefix_length: int = TRACT_GEOID_LENGTH,
) -> RankingOverlap:
    """Map top-ranked landmarks to tracts by id prefix and intersect with the HVI ranking."""
    topological: list[str] = []
    for ranked in top_landmarks:
        for identifier in ranked.landmark_ids:
            tract = identifier[:prefix_length]
            if tract not in topological:
                topological.append(tract)
    shared = sorted(set(topological) & set(hvi_tract_ids))
    return RankingOverlap(
        prefix_length=prefix_length,
        topological_tracts=tuple(topological),
        hvi_tracts=tuple(hvi_tract_ids),
        shared=tuple(shared),
    )


@log_stage
def analyze(
    landmarks: LandmarkSet,
    witnesses: WitnessSet,
    max_dim: int = DEFAULT_MAX_DIM,
    k: int = DEFAULT_TOP_K,
    tracts: Sequence[TractDemographics] | None = None,
    city: str = "",
    max_workers: int = DEFAULT_MAX_WORKERS,
    tract_prefix_length: int = TRACT_GEOID_LENGTH,
) -> AnalysisReport:
    """
    Run the coverage-gap analysis for one city.

    Args:
        landmarks: Region centroids.
        witnesses: Cooling-center locations.
        max_dim: Largest simplex dimension in the complex.
        k: Length of the top-k rankings.
        tracts: Optional tract demographics; adds the HVI ranking and its
            overlap with the dimension-0 ranking.
        city: Label carried into the outputs.
        max_workers: Threads for the edge filtration.
        tract_prefix_length: Landmark id prefix that names its tract.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    complex_ = build_filtered_complex(landmarks, witnesses, max_dim, max_workers)
    diagram = compute_persistence(complex_)
    reported = tuple(range(complex_.max_dim))

    top_k = {
        dim: top_k_deaths(diagram, dim, k, finite_only=True, landmark_ids=landmarks.ids)
        for dim in reported
    }
    summaries = {dim: summarize_deaths(diagram.pairs, dim) for dim in reported}

    hvi_results: tuple[HviResult, ...] = ()
    hvi_top: tuple[HviResult, ...] = ()
    overlap: RankingOverlap | None = None
    if tracts is not None:
        hvi_results = tuple(score_city(tracts))
        hvi_top = tuple(rank_tracts(hvi_results, k))
        overlap = ranking_overlap(
            top_k.get(0, []), [r.tract_id for r in hvi_top], tract_prefix_length
        )
        logger.info(
            "Compared rankings",
            extra={"shared_tracts": len(overlap.shared), "k": k},
        )

    return AnalysisReport(
        city=city,
        landmarks=landmarks,
        diagram=diagram,
        max_dim=complex_.max_dim,
        k=k,
        landmark_deaths=landmark_deaths(diagram, landmarks),
        cycle_deaths=cycle_deaths(diagram, landmarks) if 1 in reported else (),
        top_k=top_k,
        summaries=summaries,
        fingerprints=Fingerprints(
            landmarks=len(landmarks),
            witnesses=len(witnesses),
            landmarks_sha256=fingerprint(landmarks),
            witnesses_sha256=fingerprint(witnesses),
        ),
        hvi_results=hvi_results,
        hvi_top_k=hvi_top,
        overlap=overlap,
        reported_dims=reported,
    )
