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
Persistence pairs of a filtered complex by boundary matrix reduction over GF(2).

Dimension 0 is reduced with a union-find: merging two components under the
elder rule gives exactly the pivots of the column algorithm. Each higher
dimension d reduces the boundary columns of the d-simplices, keeping only the
rows of positive (d-1)-simplices; rows of negative simplices can never become
pivots, so dropping them leaves the pairing unchanged. In the top dimension of
a truncated complex, columns whose rows are all already paired reduce to zero
and are skipped, and the pass stops once every positive row is paired.
"""

import heapq
import logging
import sys
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from ..telemetry import log_stage
from ..witness.complex import FilteredComplex
from ..witness.types import FilteredSimplex
from .types import PersistenceDiagram, PersistencePair

logger = logging.getLogger(__name__)

_NOTHING_ALIVE = sys.maxsize


@dataclass
class _PairCollector:
    keep_zero_persistence: bool
    pairs: list[PersistencePair] = field(default_factory=list)
    zero_persistence: list[PersistencePair] = field(default_factory=list)

    def pair(self, birth: FilteredSimplex, death: FilteredSimplex) -> None:
        item = PersistencePair(
            dim=birth.dim,
            birth=birth.value,
            death=death.value,
            birth_simplex=birth.simplex,
            death_simplex=death.simplex,
        )
        if death.value > birth.value:
            self.pairs.append(item)
        elif self.keep_zero_persistence:
            self.zero_persistence.append(item)

    def essential(self, birth: FilteredSimplex) -> None:
        self.pairs.append(
            PersistencePair(
                dim=birth.dim,
                birth=birth.value,
                death=float("inf"),
                birth_simplex=birth.simplex,
            )
        )


@dataclass
class _Rows:
    """Positive simplices of one dimension, addressed by within-dimension position."""

    dim: int
    positions: list[int]
    lookup: Callable[[tuple[int, ...]], int | None]
    simplex: Callable[[int], FilteredSimplex]


def _reduce_dimension_zero(
    complex_: FilteredComplex, collector: _PairCollector
) -> _Rows | None:
    vertices = list(complex_.iter_dimension(0))
    position_of = {s.vertices[0]: i for i, s in enumerate(vertices)}
    parent = list(range(len(vertices)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    track_cycles = complex_.max_dim >= 1 and (
        complex_.max_dim >= 2 or not complex_.truncated
    )
    positive = bytearray(complex_.num_edges) if track_cycles else None

    if complex_.max_dim >= 1:
        for position, edge in enumerate(complex_.iter_dimension(1)):
            u, v = edge.vertices
            root_u, root_v = find(position_of[u]), find(position_of[v])
            if root_u == root_v:
                if positive is not None:
                    positive[position] = 1
                continue
            # roots are always the oldest vertex of their component
            elder, younger = min(root_u, root_v), max(root_u, root_v)
            parent[younger] = elder
            collector.pair(vertices[younger], edge)

    if complex_.max_dim > 0 or not complex_.truncated:
        for i, vertex in enumerate(vertices):
            if find(i) == i:
                collector.essential(vertex)

    if positive is None:
        return None

    def lookup(face: tuple[int, ...]) -> int | None:
        position = complex_.position(face)
        return position if positive[position] else None

    return _Rows(
        dim=1,
        positions=[i for i, flag in enumerate(positive) if flag],
        lookup=lookup,
        simplex=lambda position: complex_.simplex_at(1, position),
    )


def _reduce_column(column: set[int], pivots: dict[int, tuple[int, ...]]) -> int | None:
    while column:
        low = max(column)
        reduced = pivots.get(low)
        if reduced is None:
            return low
        column.symmetric_difference_update(reduced)
    return None


def _reduce_dimension(
    complex_: FilteredComplex,
    dim: int,
    rows: _Rows,
    collector: _PairCollector,
) -> _Rows | None:
    """Pair positive (dim - 1)-simplices with dim-simplices."""
    top = dim == complex_.max_dim
    may_skip = top and complex_.truncated
    pivots: dict[int, tuple[int, ...]] = {}
    alive = list(rows.positions)
    heapq.heapify(alive)

    def floor() -> int:
        while alive and alive[0] in pivots:
            heapq.heappop(alive)
        return alive[0] if alive else _NOTHING_ALIVE

    record_positive = not top
    keep_essential = not top or not complex_.truncated
    next_positions: list[int] = []
    next_index: dict[tuple[int, ...], int] = {}
    next_simplices: dict[int, FilteredSimplex] = {}

    edge_floor = floor if may_skip and dim == 2 else None
    for position, simplex in enumerate(complex_.iter_dimension(dim, edge_floor)):
        lowest_alive = floor() if may_skip else 0
        if lowest_alive == _NOTHING_ALIVE:
            break
        column: set[int] = set()
        for face in simplex.simplex.faces():
            row = rows.lookup(face)
            if row is not None:
                column.add(row)
        if may_skip and (not column or max(column) < lowest_alive):
            continue

        low = _reduce_column(column, pivots)
        if low is not None:
            pivots[low] = tuple(column)
            collector.pair(rows.simplex(low), simplex)
        elif record_positive:
            next_positions.append(position)
            next_index[simplex.vertices] = position
            next_simplices[position] = simplex
        elif keep_essential:
            collector.essential(simplex)

    for position in rows.positions:
        if position not in pivots:
            collector.essential(rows.simplex(position))

    logger.debug(
        "Reduced boundary columns",
        extra={"dim": dim, "pivots": len(pivots), "rows": len(rows.positions)},
    )
    if not record_positive:
        return None
    return _Rows(
        dim=dim,
        positions=next_positions,
        lookup=next_index.get,
        simplex=next_simplices.__getitem__,
    )


@log_stage
def compute_persistence(
    complex_: FilteredComplex, keep_zero_persistence: bool = False
) -> PersistenceDiagram:
    """
    Compute the persistence diagram of a filtered complex.

    A column reducing to lowest row i pairs simplex i (birth) with the column's
    simplex (death). Unpaired simplices below max_dim give essential classes
    with death +inf; so do unpaired top-dimensional simplices when the complex
    is not truncated.

    Args:
        complex_: The filtration.
        keep_zero_persistence: Keep pairs with birth == death in
            `PersistenceDiagram.zero_persistence`.

    Raises:
        InvalidFiltration: If a coface precedes one of its faces.
    """
    complex_.validate()
    collector = _PairCollector(keep_zero_persistence)

    rows = _reduce_dimension_zero(complex_, collector)
    for dim in range(2, complex_.max_dim + 1):
        if rows is None:
            break
        rows = _reduce_dimension(complex_, dim, rows, collector)
    if rows is not None:
        # nothing above these rows can kill them
        for position in rows.positions:
            collector.essential(rows.simplex(position))

    pairs = tuple(sorted(collector.pairs, key=lambda p: p.sort_key))
    zero = tuple(sorted(collector.zero_persistence, key=lambda p: p.sort_key))
    counts = Counter(p.dim for p in pairs)
    logger.info(
        "Computed persistence",
        extra={
            "pairs": len(pairs),
            "per_dim": {str(d): counts[d] for d in sorted(counts)},
            "essential": sum(1 for p in pairs if p.is_essential),
            "zero_persistence": len(zero),
        },
    )
    return PersistenceDiagram(
        pairs=pairs,
        max_dim=complex_.max_dim,
        zero_persistence=zero,
        truncated=complex_.truncated,
    )
