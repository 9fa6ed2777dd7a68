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
import logging
import warnings
from concurrent.futures import ThreadPoolExecutor, as_completed

import numpy as np
import numpy.typing as npt

from ..geo import pairwise_distances_km
from ..telemetry import log_stage
from .complex import FlagComplex
from .exceptions import DimensionTooLarge
from .types import DistanceMatrix, LandmarkSet, WitnessSet

logger = logging.getLogger(__name__)

DEFAULT_MAX_DIM = 2
DEFAULT_MAX_WORKERS = 8
DEFAULT_ROW_BLOCK = 64


def distance_matrix(landmarks: LandmarkSet, witnesses: WitnessSet) -> DistanceMatrix:
    """Geodesic distance (km) from every landmark (row) to every witness (column)."""
    if len(witnesses) == 0:
        return DistanceMatrix(np.zeros((len(landmarks), 0), dtype=np.float64))
    return DistanceMatrix(
        pairwise_distances_km(
            landmarks.lats, landmarks.lons, witnesses.lats, witnesses.lons
        )
    )


def edge_filtration_value(i: int, j: int, distances: DistanceMatrix) -> float:
    """
    Smallest alpha at which one witness lies within alpha of both landmarks:
    the minimum over witnesses of max(d(i, w), d(j, w)). Infinite without
    witnesses.
    """
    if i == j:
        raise ValueError("an edge needs two distinct landmarks")
    if distances.n_witnesses == 0:
        return np.inf
    values = distances.values
    return float(np.maximum(values[i], values[j]).min())


def _edge_rows(
    values: npt.NDArray[np.float64], start: int, stop: int
) -> tuple[int, npt.NDArray[np.float64]]:
    block = np.empty((stop - start, values.shape[0]), dtype=np.float64)
    for offset, i in enumerate(range(start, stop)):
        block[offset] = np.maximum(values[i], values).min(axis=1)
    return start, block


def edge_filtration_matrix(
    distances: DistanceMatrix,
    max_workers: int = DEFAULT_MAX_WORKERS,
    row_block: int = DEFAULT_ROW_BLOCK,
) -> npt.NDArray[np.float64]:
    """
    Edge filtration values for every landmark pair as a symmetric matrix with
    an infinite diagonal. Row blocks are computed in a thread pool.
    """
    n = distances.n_landmarks
    result = np.full((n, n), np.inf, dtype=np.float64)
    if distances.n_witnesses == 0 or n < 2:
        return result

    values = distances.values
    blocks = [(start, min(n, start + row_block)) for start in range(0, n, row_block)]
    actual_workers = min(max_workers, max(1, len(blocks)))
    with ThreadPoolExecutor(max_workers=actual_workers) as executor:
        futures = [
            executor.submit(_edge_rows, values, start, stop) for start, stop in blocks
        ]
        for future in as_completed(futures):
            start, block = future.result()
            result[start : start + block.shape[0]] = block
    np.fill_diagonal(result, np.inf)
    return result


@log_stage
def build_filtered_complex(
    landmarks: LandmarkSet,
    witnesses: WitnessSet,
    max_dim: int = DEFAULT_MAX_DIM,
    max_workers: int = DEFAULT_MAX_WORKERS,
) -> FlagComplex:
    """
    Build the filtered witness complex as a flag filtration.

    Vertices enter at 0, an edge at its edge filtration value, and every
    clique of up to max_dim + 1 landmarks at the largest value among its
    edges. Never co-witnessed pairs are left out.

    Raises:
        ValueError: If max_dim < 1.

    Warns:
        DimensionTooLarge: When max_dim > len(landmarks) - 1; max_dim is
            clamped to max(1, len(landmarks) - 1).
    """
    if max_dim < 1:
        raise ValueError(f"max_dim must be at least 1, got {max_dim}")
    supported = max(1, len(landmarks) - 1)
    if max_dim > supported:
        clamped = supported
        warning = DimensionTooLarge(max_dim, clamped, len(landmarks))
        logger.warning(
            str(warning),
            extra={"requested_max_dim": max_dim, "clamped_max_dim": clamped},
        )
        warnings.warn(warning, stacklevel=2)
        max_dim = clamped

    distances = distance_matrix(landmarks, witnesses)
    edges = edge_filtration_matrix(distances, max_workers=max_workers)
    complex_ = FlagComplex(edges, max_dim=max_dim)
    logger.info(
        "Built witness complex",
        extra={
            "landmarks": len(landmarks),
            "witnesses": len(witnesses),
            "edges": complex_.num_edges,
            "max_dim": max_dim,
        },
    )
    return complex_
