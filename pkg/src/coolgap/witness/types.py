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
from dataclasses import dataclass
from typing import Iterator

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, model_validator

from ..geo import GeoPoint


class _PointSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    points: tuple[GeoPoint, ...] = ()
    ids: tuple[str, ...] = ()

    @model_validator(mode="after")
    def _check_ids(self) -> "_PointSet":
        if len(self.points) != len(self.ids):
            raise ValueError(
                f"{len(self.points)} points but {len(self.ids)} ids were given"
            )
        seen: set[str] = set()
        for identifier in self.ids:
            if identifier in seen:
                raise ValueError(f"duplicate id {identifier!r}")
            seen.add(identifier)
        return self

    def __len__(self) -> int:
        return len(self.points)

    def items(self) -> Iterator[tuple[str, GeoPoint]]:
        return iter(zip(self.ids, self.points))

    @property
    def lats(self) -> npt.NDArray[np.float64]:
        return np.fromiter(
            (p.lat for p in self.points), dtype=np.float64, count=len(self.points)
        )

    @property
    def lons(self) -> npt.NDArray[np.float64]:
        return np.fromiter(
            (p.lon for p in self.points), dtype=np.float64, count=len(self.points)
        )


class LandmarkSet(_PointSet):
    """Landmark vertices (e.g. census block centroids), one id per point."""

    @model_validator(mode="after")
    def _check_nonempty(self) -> "LandmarkSet":
        if not self.points:
            raise ValueError("a landmark set needs at least one point")
        return self


class WitnessSet(_PointSet):
    """Witness locations (e.g. cooling centers); may be empty."""

    pass


@dataclass(frozen=True)
class DistanceMatrix:
    """Landmark x witness distances in kilometers."""

    values: npt.NDArray[np.float64]

    def __post_init__(self) -> None:
        if self.values.ndim != 2:
            raise ValueError("a distance matrix must be two-dimensional")
        if self.values.size and (
            not np.all(np.isfinite(self.values)) or np.any(self.values < 0)
        ):
            raise ValueError("distances must be finite and nonnegative")

    @property
    def n_landmarks(self) -> int:
        return int(self.values.shape[0])

    @property
    def n_witnesses(self) -> int:
        return int(self.values.shape[1])


@dataclass(frozen=True, slots=True)
class Simplex:
    """A simplex over landmark indices, vertices strictly increasing."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("a simplex needs at least one vertex")
        if any(a >= b for a, b in zip(self.vertices, self.vertices[1:])):
            raise ValueError(f"vertices must be strictly increasing: {self.vertices}")

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def faces(self) -> list[tuple[int, ...]]:
        """Codimension-one faces, each as a vertex tuple."""
        if self.dim == 0:
            return []
        return [
            self.vertices[:i] + self.vertices[i + 1 :]
            for i in range(len(self.vertices))
        ]


@dataclass(frozen=True, slots=True)
class FilteredSimplex:
    simplex: Simplex
    value: float

    @property
    def dim(self) -> int:
        return self.simplex.dim

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.simplex.vertices

    @property
    def sort_key(self) -> tuple[float, int, tuple[int, ...]]:
        """Filtration total order: value, then dimension, then vertex order."""
        return (self.value, self.simplex.dim, self.simplex.vertices)
