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
Serialization of analysis results: CSV tables and GeoJSON map layers.

Floats in CSV use 17 significant digits, and JSON floats use the shortest
representation that round-trips. Infinite values are written as "inf".
Everything is rendered before anything is written, so a failure leaves no
partial output.
"""

import json
import logging
import math
from typing import Any, Iterable, Mapping, Sequence

import pandas as pd
from fsspec import AbstractFileSystem

from ..geo import GeoPoint
from ..hvi import HVI_VARIABLES, HviResult
from ..persistence import PersistencePair, RankedPair
from ..storage import write_text
from ..witness import FilteredComplex, LandmarkSet
from .types import AnalysisReport, SummaryStats

logger = logging.getLogger(__name__)

PAIRS_FILE = "pairs.csv"
DEATHS_DIM0_FILE = "deaths_dim0.geojson"
DEATHS_DIM1_FILE = "deaths_dim1.geojson"
TOP_K_FILE = "top_k.geojson"
SUMMARY_FILE = "summary.json"
HVI_FILE = "hvi.csv"
TOP_K_HVI_FILE = "top_k_hvi.csv"

PAIRS_COLUMNS = ["dim", "birth_km", "death_km", "birth_simplex", "death_simplex"]
HVI_COLUMNS = ["tract_id", *(f"z_{name}" for name in HVI_VARIABLES), "score", "missing"]


def format_float(value: float) -> str:
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return "%.17g" % value


def json_float(value: float) -> float | str:
    return format_float(value) if math.isinf(value) else value


def _csv(rows: Sequence[Mapping[str, str]], columns: Sequence[str]) -> str:
    frame = pd.DataFrame(list(rows), columns=list(columns), dtype=str)
    return frame.to_csv(index=False, lineterminator="\n")


def _json(document: Any) -> str:
    return json.dumps(document, indent=2, sort_keys=True, allow_nan=False) + "\n"


def _point(point: GeoPoint) -> dict[str, Any]:
    return {"type": "Point", "coordinates": [point.lon, point.lat]}


def _feature_collection(features: Iterable[dict[str, Any]]) -> dict[str, Any]:
    return {"type": "FeatureCollection", "features": list(features)}


def simplex_label(vertices: Sequence[int], ids: Sequence[str]) -> str:
    return "-".join(ids[v] for v in vertices)


def render_pairs_csv(pairs: Sequence[PersistencePair], landmarks: LandmarkSet) -> str:
    rows = [
        {
            "dim": str(p.dim),
            "birth_km": format_float(p.birth),
            "death_km": format_float(p.death),
            "birth_simplex": simplex_label(p.birth_simplex.vertices, landmarks.ids),
            "death_simplex": (
                simplex_label(p.death_simplex.vertices, landmarks.ids)
                if p.death_simplex is not None
                else ""
            ),
        }
        for p in pairs
    ]
    return _csv(rows, PAIRS_COLUMNS)


def render_deaths_dim0(report: AnalysisReport) -> str:
    return _json(
        _feature_collection(
            {
                "type": "Feature",
                "id": death.landmark_id,
                "geometry": _point(death.point),
                "properties": {
                    "landmark_id": death.landmark_id,
                    "death_km": json_float(death.death),
                    "pair_rank": death.pair_rank,
                },
            }
            for death in report.landmark_deaths
        )
    )


def render_deaths_dim1(report: AnalysisReport) -> str:
    return _json(
        _feature_collection(
            {
                "type": "Feature",
                "geometry": _point(cycle.centroid),
                "properties": {
                    "landmark_ids": list(cycle.landmark_ids),
                    "birth_km": json_float(cycle.birth),
                    "death_km": json_float(cycle.death),
                    "pair_rank": cycle.pair_rank,
                },
            }
            for cycle in report.cycle_deaths
        )
    )


def _ranked_location(ranked: RankedPair, landmarks: LandmarkSet) -> GeoPoint:
    points = [landmarks.points[i] for i in ranked.landmark_indices]
    return GeoPoint(
        lat=sum(p.lat for p in points) / len(points),
        lon=sum(p.lon for p in points) / len(points),
    )


def render_top_k(report: AnalysisReport) -> str:
    features = [
        {
            "type": "Feature",
            "geometry": _point(_ranked_location(ranked, report.landmarks)),
            "properties": {
                "dim": dim,
                "rank": ranked.rank,
                "death_km": json_float(ranked.pair.death),
                "landmark_ids": list(ranked.landmark_ids),
            },
        }
        for dim in sorted(report.top_k)
        for ranked in report.top_k[dim]
    ]
    return _json(_feature_collection(features))


def _stats_document(stats: SummaryStats) -> dict[str, Any]:
    return stats.model_dump(mode="python")


def render_summary(report: AnalysisReport) -> str:
    document: dict[str, Any] = {
        "city": report.city,
        "max_dim": report.max_dim,
        "top_k": report.k,
        "dims": {str(d): _stats_document(s) for d, s in report.summaries.items()},
        "rankings": {
            str(dim): [
                {
                    "rank": r.rank,
                    "death_km": json_float(r.pair.death),
                    "landmark_ids": list(r.landmark_ids),
                }
                for r in ranked
            ]
            for dim, ranked in report.top_k.items()
        },
        "fingerprints": {
            "landmarks": report.fingerprints.landmarks,
            "witnesses": report.fingerprints.witnesses,
            "landmarks_sha256": report.fingerprints.landmarks_sha256,
            "witnesses_sha256": report.fingerprints.witnesses_sha256,
        },
    }
    if report.overlap is not None:
        document["hvi"] = {
            "top_k": [
                {"rank": rank, "tract_id": r.tract_id, "score": r.score}
                for rank, r in enumerate(report.hvi_top_k, start=1)
            ],
            "overlap": {
                **report.overlap.model_dump(mode="python"),
                "jaccard": report.overlap.jaccard,
            },
        }
    return _json(document)


def render_hvi_csv(results: Sequence[HviResult]) -> str:
    rows: list[dict[str, str]] = []
    for r in results:
        row = {"tract_id": r.tract_id, "missing": "true" if r.missing else "false"}
        for name in HVI_VARIABLES:
            row[f"z_{name}"] = (
                format_float(r.z_scores[name]) if r.z_scores is not None else ""
            )
        row["score"] = format_float(r.score) if r.score is not None else ""
        rows.append(row)
    return _csv(rows, HVI_COLUMNS)


def render_top_k_hvi_csv(ranked: Sequence[HviResult]) -> str:
    rows = [
        {
            "rank": str(rank),
            "tract_id": r.tract_id,
            "score": format_float(r.score) if r.score is not None else "",
        }
        for rank, r in enumerate(ranked, start=1)
    ]
    return _csv(rows, ["rank", "tract_id", "score"])


def render_snapshot(
    complex_: FilteredComplex, landmarks: LandmarkSet, alpha: float
) -> str:
    """LineString layer of the edges present at filtration value alpha."""
    features: list[dict[str, Any]] = []
    for edge in complex_.sublevel_edges(alpha):
        u, v = edge.vertices
        features.append(
            {
                "type": "Feature",
                "geometry": {
                    "type": "LineString",
                    "coordinates": [
                        [landmarks.points[u].lon, landmarks.points[u].lat],
                        [landmarks.points[v].lon, landmarks.points[v].lat],
                    ],
                },
                "properties": {
                    "edge_km": edge.value,
                    "landmark_ids": [landmarks.ids[u], landmarks.ids[v]],
                },
            }
        )
    document = _feature_collection(features)
    document["alpha_km"] = json_float(alpha)
    return _json(document)


def write_outputs(
    outputs: Mapping[str, str],
    out_dir: str,
    file_system: AbstractFileSystem | None = None,
) -> list[str]:
    """Write rendered files into out_dir, in name order."""
    written: list[str] = []
    for name in sorted(outputs):
        path = f"{out_dir.rstrip('/')}/{name}"
        write_text(path, outputs[name], file_system)
        written.append(path)
    logger.info("Wrote outputs", extra={"out_dir": out_dir, "files": len(written)})
    return written


def render_analysis(report: AnalysisReport) -> dict[str, str]:
    outputs = {
        PAIRS_FILE: render_pairs_csv(report.diagram.pairs, report.landmarks),
        DEATHS_DIM0_FILE: render_deaths_dim0(report),
        DEATHS_DIM1_FILE: render_deaths_dim1(report),
        TOP_K_FILE: render_top_k(report),
        SUMMARY_FILE: render_summary(report),
    }
    if report.overlap is not None:
        outputs[HVI_FILE] = render_hvi_csv(report.hvi_results)
        outputs[TOP_K_HVI_FILE] = render_top_k_hvi_csv(report.hvi_top_k)
    return outputs


def write_analysis(
    report: AnalysisReport,
    out_dir: str,
    file_system: AbstractFileSystem | None = None,
) -> list[str]:
    return write_outputs(render_analysis(report), out_dir, file_system)


def read_summary_stats(text: str) -> dict[int, SummaryStats]:
    """Per-dimension statistics back from a rendered summary.json."""
    document = json.loads(text)
    return {
        int(dim): SummaryStats.model_validate(stats)
        for dim, stats in document.get("dims", {}).items()
    }
