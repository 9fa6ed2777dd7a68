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
from typing import Sequence

from ..witness.complex import FilteredComplex
from .exceptions import PersistenceError
from .reduction import compute_persistence
from .types import PersistenceDiagram, PersistencePair, RankedPair


def betti_numbers(
    source: FilteredComplex | PersistenceDiagram, alpha: float, dim: int
) -> int:
    """
    Rank of the dim-th homology of the sublevel complex at alpha, counted as the
    pairs with birth <= alpha < death.

    Raises:
        PersistenceError: If dim is outside the computed range, or is the top
            dimension of a truncated complex, whose classes are not reported.
    """
    if alpha < 0:
        raise ValueError(f"alpha must be nonnegative, got {alpha}")
    diagram = (
        source
        if isinstance(source, PersistenceDiagram)
        else compute_persistence(source)
    )
    _check_dimension(diagram, dim)
    return sum(1 for p in diagram.in_dimension(dim) if p.birth <= alpha < p.death)


def _check_dimension(diagram: PersistenceDiagram, dim: int) -> None:
    if not 0 <= dim <= diagram.max_dim:
        raise PersistenceError(
            f"dimension {dim} is outside the computed range 0..{diagram.max_dim}"
        )
    if dim not in diagram.reported_dimensions:
        raise PersistenceError(
            f"dimension {dim} is the top dimension of a complex truncated at "
            f"max_dim {diagram.max_dim}; build it with max_dim {dim + 1} or more"
        )


def _representatives(pair: PersistencePair) -> tuple[int, ...]:
    # a merge is located at the younger component's vertex; a cycle at the
    # simplex that fills it
    if pair.dim == 0 or pair.death_simplex is None:
        return pair.birth_simplex.vertices
    return pair.death_simplex.vertices


def top_k_deaths(
    diagram: PersistenceDiagram,
    dim: int,
    k: int,
    finite_only: bool = True,
    landmark_ids: Sequence[str] | None = None,
) -> list[RankedPair]:
    """
    The k pairs of one dimension with the largest death values.

    Ties are broken by birth ascending, then by birth simplex vertices. When
    finite_only is False, essential classes come first.

    Args:
        diagram: The persistence diagram.
        dim: The homology dimension.
        k: How many pairs to report.
        finite_only: Leave out essential classes.
        landmark_ids: Landmark ids by index, used to name the landmarks of each
            ranked pair.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    _check_dimension(diagram, dim)
    candidates = diagram.finite(dim) if finite_only else diagram.in_dimension(dim)
    ranked = sorted(
        candidates, key=lambda p: (-p.death, p.birth, p.birth_simplex.vertices)
    )
    result: list[RankedPair] = []
    for rank, pair in enumerate(ranked[:k], start=1):
        indices = _representatives(pair)
        ids = (
            tuple(landmark_ids[i] for i in indices) if landmark_ids is not None else ()
        )
        result.append(
            RankedPair(rank=rank, pair=pair, landmark_indices=indices, landmark_ids=ids)
        )
    return result
