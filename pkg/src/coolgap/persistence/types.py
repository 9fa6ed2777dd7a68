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
from dataclasses import dataclass, field

from ..witness.types import Simplex


@dataclass(frozen=True)
class PersistencePair:
    """
    One homology class of a filtration.

    `death_simplex` is None for essential classes, whose death is +inf.
    """

    dim: int
    birth: float
    death: float
    birth_simplex: Simplex
    death_simplex: Simplex | None = None

    def __post_init__(self) -> None:
        if self.birth_simplex.dim != self.dim:
            raise ValueError(
                f"birth simplex {self.birth_simplex.vertices} is not of "
                f"dimension {self.dim}"
            )
        if self.death_simplex is None:
            if not math.isinf(self.death):
                raise ValueError("a finite pair needs a death simplex")
        elif self.death_simplex.dim != self.dim + 1:
            raise ValueError(
                f"death simplex {self.death_simplex.vertices} is not of "
                f"dimension {self.dim + 1}"
            )
        if self.death < self.birth:
            raise ValueError(f"death {self.death} precedes birth {self.birth}")

    @property
    def is_essential(self) -> bool:
        return self.death_simplex is None

    @property
    def persistence(self) -> float:
        return self.death - self.birth

    @property
    def sort_key(
        self,
    ) -> tuple[int, float, float, tuple[int, ...], tuple[int, ...]]:
        death_vertices = self.death_simplex.vertices if self.death_simplex else ()
        return (
            self.dim,
            self.birth,
            self.death,
            self.birth_simplex.vertices,
            death_vertices,
        )


@dataclass(frozen=True)
class PersistenceDiagram:
    """
    The multiset of persistence pairs of a filtration, in a fixed order:
    dimension, birth, death, then birth and death simplex vertices.

    Pairs with birth == death are not in `pairs`; they are listed in
    `zero_persistence` only when requested. A diagram of a truncated complex
    has no classes in dimension max_dim.
    """

    pairs: tuple[PersistencePair, ...]
    max_dim: int
    zero_persistence: tuple[PersistencePair, ...] = field(default=())
    truncated: bool = False

    @property
    def reported_dimensions(self) -> range:
        """Dimensions whose classes the diagram lists completely."""
        return range(self.max_dim if self.truncated else self.max_dim + 1)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def dimensions(self) -> tuple[int, ...]:
        return tuple(sorted({p.dim for p in self.pairs}))

    def in_dimension(self, dim: int) -> tuple[PersistencePair, ...]:
        return tuple(p for p in self.pairs if p.dim == dim)

    def finite(self, dim: int | None = None) -> tuple[PersistencePair, ...]:
        return tuple(
            p
            for p in self.pairs
            if not p.is_essential and (dim is None or p.dim == dim)
        )

    def essential(self, dim: int | None = None) -> tuple[PersistencePair, ...]:
        return tuple(
            p for p in self.pairs if p.is_essential and (dim is None or p.dim == dim)
        )


@dataclass(frozen=True)
class RankedPair:
    """A persistence pair ranked by death value, with the landmarks it names."""

    rank: int
    pair: PersistencePair
    landmark_indices: tuple[int, ...]
    landmark_ids: tuple[str, ...] = ()
