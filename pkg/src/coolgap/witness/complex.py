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
Filtered simplicial complexes.

`ExplicitComplex` holds a caller-supplied simplex list. `FlagComplex` is the
clique filtration of a weighted graph: it keeps vertices and edges as arrays
and generates higher simplices lazily, in filtration order, so large inputs
never materialize every triangle at once.
"""

import heapq
import itertools
from abc import ABC, abstractmethod
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np
import numpy.typing as npt

from .exceptions import InvalidFiltration
from .types import FilteredSimplex, Simplex

EdgeFloor = Callable[[], int]


class FilteredComplex(ABC):
    """A simplicial complex with a filtration value on every simplex."""

    max_dim: int
    # True when simplices above max_dim exist but are left out, so top-dimension
    # cycles cannot be told apart from ones that would die later.
    truncated: bool = False

    @abstractmethod
    def iter_dimension(
        self, dim: int, edge_floor: EdgeFloor | None = None
    ) -> Iterator[FilteredSimplex]:
        """
        Yield the simplices of one dimension in filtration order.

        Args:
            dim: The simplex dimension.
            edge_floor: Optional, honored for dim == 2 only. Called before each
                triangle; triangles whose youngest edge position is below the
                returned edge position may be skipped.
        """

    @abstractmethod
    def position(self, vertices: tuple[int, ...]) -> int:
        """Position of a vertex or edge within `iter_dimension` order."""

    @abstractmethod
    def simplex_at(self, dim: int, position: int) -> FilteredSimplex:
        """Inverse of `position` for vertices and edges."""

    @property
    @abstractmethod
    def num_vertices(self) -> int: ...

    @property
    @abstractmethod
    def num_edges(self) -> int: ...

    def validate(self) -> None:
        """Raise InvalidFiltration unless the stored order is a filtration."""
        return None

    def __iter__(self) -> Iterator[FilteredSimplex]:
        streams = [self.iter_dimension(d) for d in range(self.max_dim + 1)]
        return heapq.merge(*streams, key=lambda s: s.sort_key)

    @property
    def simplices(self) -> tuple[FilteredSimplex, ...]:
        """Every simplex in the filtration total order."""
        return tuple(iter(self))

    def sublevel_edges(self, alpha: float) -> list[FilteredSimplex]:
        """Edges present at filtration value alpha (closed threshold)."""
        return list(
            itertools.takewhile(lambda s: s.value <= alpha, self.iter_dimension(1))
        )


class ExplicitComplex(FilteredComplex):
    """A filtered complex given as an explicit list of simplices."""

    def __init__(
        self,
        simplices: Iterable[FilteredSimplex | tuple[Sequence[int], float]],
        max_dim: int | None = None,
        sort: bool = True,
    ):
        items = [
            s
            if isinstance(s, FilteredSimplex)
            else FilteredSimplex(Simplex(tuple(s[0])), float(s[1]))
            for s in simplices
        ]
        if sort:
            items.sort(key=lambda s: s.sort_key)
        top = max((s.dim for s in items), default=0)
        self.max_dim = top if max_dim is None else max_dim
        if top > self.max_dim:
            raise ValueError(f"simplex of dimension {top} exceeds max_dim {max_dim}")
        self._ordered = tuple(items)
        self._by_dim: list[list[FilteredSimplex]] = [
            [] for _ in range(self.max_dim + 1)
        ]
        self._positions: dict[tuple[int, ...], int] = {}
        for s in items:
            bucket = self._by_dim[s.dim]
            self._positions[s.vertices] = len(bucket)
            bucket.append(s)

    @property
    def simplices(self) -> tuple[FilteredSimplex, ...]:
        return self._ordered

    def __iter__(self) -> Iterator[FilteredSimplex]:
        return iter(self._ordered)

    @property
    def num_vertices(self) -> int:
        return len(self._by_dim[0])

    @property
    def num_edges(self) -> int:
        return len(self._by_dim[1]) if self.max_dim >= 1 else 0

    def iter_dimension(
        self, dim: int, edge_floor: EdgeFloor | None = None
    ) -> Iterator[FilteredSimplex]:
        if dim > self.max_dim:
            return iter(())
        return iter(self._by_dim[dim])

    def position(self, vertices: tuple[int, ...]) -> int:
        return self._positions[vertices]

    def simplex_at(self, dim: int, position: int) -> FilteredSimplex:
        return self._by_dim[dim][position]

    def validate(self) -> None:
        seen: dict[tuple[int, ...], float] = {}
        previous = -np.inf
        for s in self._ordered:
            if s.vertices in seen:
                raise InvalidFiltration("duplicate simplex", s.vertices)
            if s.value < previous:
                raise InvalidFiltration("filtration values decrease", s.vertices)
            for face in s.simplex.faces():
                if face not in seen:
                    raise InvalidFiltration(
                        f"face {face} is missing or comes later", s.vertices
                    )
                if seen[face] > s.value:
                    raise InvalidFiltration(
                        f"face {face} has a larger filtration value", s.vertices
                    )
            seen[s.vertices] = s.value
            previous = s.value


class FlagComplex(FilteredComplex):
    """
    Clique filtration of a weighted graph on landmark indices.

    Every vertex enters at 0. An edge enters at its weight; pairs with an
    infinite weight are absent. A k-simplex enters at the largest weight of its
    edges and is present for k <= max_dim.
    """

    truncated = True

    def __init__(self, edge_values: npt.NDArray[np.float64], max_dim: int = 2):
        n = int(edge_values.shape[0])
        if edge_values.shape != (n, n):
            raise ValueError("edge values must be a square matrix")
        self.max_dim = max_dim
        self._n = n

        iu, ju = np.triu_indices(n, k=1)
        values = edge_values[iu, ju]
        finite = np.isfinite(values)
        iu, ju, values = iu[finite], ju[finite], values[finite]
        # np.lexsort sorts by the last key first: value, then (i, j)
        order = np.lexsort((ju, iu, values))
        self._edge_u = iu[order].astype(np.int64)
        self._edge_v = ju[order].astype(np.int64)
        self._edge_values = values[order].astype(np.float64)

        rank_dtype = np.int32 if len(order) < np.iinfo(np.int32).max else np.int64
        self._absent = int(np.iinfo(rank_dtype).max)
        self._rank = np.full((n, n), self._absent, dtype=rank_dtype)
        ranks = np.arange(len(order), dtype=rank_dtype)
        self._rank[self._edge_u, self._edge_v] = ranks
        self._rank[self._edge_v, self._edge_u] = ranks

    @property
    def num_vertices(self) -> int:
        return self._n

    @property
    def num_edges(self) -> int:
        return len(self._edge_values)

    @property
    def edge_values(self) -> npt.NDArray[np.float64]:
        """Edge filtration values in filtration order."""
        return self._edge_values

    def edge_value(self, i: int, j: int) -> float:
        rank = int(self._rank[i, j])
        return np.inf if rank == self._absent else float(self._edge_values[rank])

    def position(self, vertices: tuple[int, ...]) -> int:
        if len(vertices) == 1:
            return vertices[0]
        if len(vertices) == 2:
            rank = int(self._rank[vertices[0], vertices[1]])
            if rank == self._absent:
                raise KeyError(vertices)
            return rank
        raise ValueError("positions are tracked for vertices and edges only")

    def simplex_at(self, dim: int, position: int) -> FilteredSimplex:
        if dim == 0:
            return FilteredSimplex(Simplex((position,)), 0.0)
        if dim == 1:
            return FilteredSimplex(
                Simplex((int(self._edge_u[position]), int(self._edge_v[position]))),
                float(self._edge_values[position]),
            )
        raise ValueError("positions are tracked for vertices and edges only")

    def iter_dimension(
        self, dim: int, edge_floor: EdgeFloor | None = None
    ) -> Iterator[FilteredSimplex]:
        if dim > self.max_dim:
            return
        if dim == 0:
            for v in range(self._n):
                yield FilteredSimplex(Simplex((v,)), 0.0)
            return
        if dim == 1:
            for rank in range(self.num_edges):
                yield self.simplex_at(1, rank)
            return
        yield from self._iter_cofaces(dim, edge_floor if dim == 2 else None)

    def _iter_cofaces(
        self, dim: int, edge_floor: EdgeFloor | None
    ) -> Iterator[FilteredSimplex]:
        values = self._edge_values
        if len(values) == 0:
            return
        breaks = np.flatnonzero(np.diff(values)) + 1
        bounds = np.concatenate(([0], breaks, [len(values)])).tolist()
        for start, stop in itertools.pairwise(bounds):
            if edge_floor is not None and edge_floor() >= stop:
                continue
            alpha = float(values[start])
            # each edge yields its cofaces in vertex order; merging keeps ties sorted
            streams = [
                self._cofaces_under(rank, dim, edge_floor)
                for rank in range(start, stop)
                if edge_floor is None or edge_floor() <= rank
            ]
            for vertices in heapq.merge(*streams):
                yield FilteredSimplex(Simplex(vertices), alpha)

    def _cofaces_under(
        self, rank: int, dim: int, edge_floor: EdgeFloor | None
    ) -> Iterator[tuple[int, ...]]:
        """dim-simplices whose youngest edge is the edge at `rank`."""
        if edge_floor is not None and edge_floor() > rank:
            return
        u, v = int(self._edge_u[rank]), int(self._edge_v[rank])
        older = (self._rank[u] < rank) & (self._rank[v] < rank)
        candidates = np.flatnonzero(older).tolist()
        for extra in self._cliques(candidates, dim - 1, rank):
            if edge_floor is not None and edge_floor() > rank:
                return
            yield tuple(sorted((u, v, *extra)))

    def _cliques(
        self, candidates: list[int], size: int, rank: int
    ) -> Iterator[tuple[int, ...]]:
        """Increasing `size`-cliques among candidates using edges older than rank."""
        if size == 1:
            for k in candidates:
                yield (k,)
            return
        for idx, k in enumerate(candidates):
            row = self._rank[k]
            rest = [m for m in candidates[idx + 1 :] if row[m] < rank]
            for tail in self._cliques(rest, size - 1, rank):
                yield (k, *tail)
