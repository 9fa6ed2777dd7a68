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
import numpy as np
import pytest

from coolgap.persistence import (
    PersistenceDiagram,
    PersistenceError,
    PersistencePair,
    betti_numbers,
    compute_persistence,
    top_k_deaths,
)
from coolgap.witness import FlagComplex, Simplex


def _dim_zero_diagram(deaths: list[float]) -> PersistenceDiagram:
    pairs = [
        PersistencePair(
            dim=0,
            birth=0.0,
            death=death,
            birth_simplex=Simplex((i,)),
            death_simplex=Simplex((0, i)),
        )
        for i, death in enumerate(deaths, start=1)
    ]
    essential = PersistencePair(
        dim=0, birth=0.0, death=float("inf"), birth_simplex=Simplex((0,))
    )
    return PersistenceDiagram(
        pairs=tuple(sorted([*pairs, essential], key=lambda p: p.sort_key)), max_dim=1
    )


def _square_flag(max_dim: int) -> FlagComplex:
    """Four-cycle with sides at 1 and diagonals at 2."""
    matrix = np.full((4, 4), 2.0)
    for i in range(4):
        j = (i + 1) % 4
        matrix[i, j] = matrix[j, i] = 1.0
    return FlagComplex(matrix, max_dim=max_dim)


class TestBettiNumbers:
    @pytest.mark.parametrize(
        "alpha, expected",
        [(0.0, (3, 0)), (2.5, (1, 0)), (3.0, (1, 1)), (100.0, (1, 1))],
    )
    def test_hollow_triangle(self, hollow_triangle, alpha, expected):
        diagram = compute_persistence(hollow_triangle)

        actual = (betti_numbers(diagram, alpha, 0), betti_numbers(diagram, alpha, 1))

        assert actual == expected

    def test_accepts_a_complex(self, hollow_triangle):
        assert betti_numbers(hollow_triangle, 1.5, 0) == 2

    def test_negative_alpha_is_rejected(self, hollow_triangle):
        with pytest.raises(ValueError):
            betti_numbers(hollow_triangle, -1.0, 0)

    def test_dimension_outside_range_is_rejected(self, hollow_triangle):
        with pytest.raises(PersistenceError):
            betti_numbers(hollow_triangle, 1.0, 2)

    def test_top_dimension_of_truncated_complex_is_rejected(self):
        square = _square_flag(max_dim=1)

        assert betti_numbers(square, 1.5, 0) == 1
        with pytest.raises(PersistenceError, match="truncated"):
            betti_numbers(square, 1.5, 1)
        with pytest.raises(PersistenceError, match="truncated"):
            top_k_deaths(compute_persistence(square), dim=1, k=1)

    def test_one_more_dimension_reports_the_cycle(self):
        square = _square_flag(max_dim=2)

        assert betti_numbers(square, 1.5, 1) == 1
        assert betti_numbers(square, 2.0, 1) == 0


class TestTopKDeaths:
    def test_ties_resolved_by_birth_then_simplex(self):
        diagram = _dim_zero_diagram([5.0, 3.0, 3.0, 1.0])

        ranked = top_k_deaths(diagram, dim=0, k=2)

        assert [(r.rank, r.pair.death) for r in ranked] == [(1, 5.0), (2, 3.0)]
        assert ranked[1].landmark_indices == (2,)

    def test_k_larger_than_pair_count(self):
        diagram = _dim_zero_diagram([5.0, 3.0, 3.0, 1.0])

        ranked = top_k_deaths(diagram, dim=0, k=10)

        assert [r.pair.death for r in ranked] == [5.0, 3.0, 3.0, 1.0]

    def test_essential_classes_lead_unless_finite_only(self):
        diagram = _dim_zero_diagram([2.0])

        ranked = top_k_deaths(diagram, dim=0, k=1, finite_only=False)

        assert ranked[0].pair.is_essential
        assert ranked[0].landmark_indices == (0,)

    def test_hollow_triangle_dimension_zero(self, hollow_triangle):
        diagram = compute_persistence(hollow_triangle)

        (top,) = top_k_deaths(diagram, dim=0, k=1, landmark_ids=["a", "b", "c"])

        assert (top.pair.birth, top.pair.death) == (0.0, 2.0)
        assert top.landmark_indices == (2,)
        assert top.landmark_ids == ("c",)

    def test_cycles_are_located_at_their_death_simplex(self):
        cycle = PersistencePair(
            dim=1,
            birth=1.0,
            death=4.0,
            birth_simplex=Simplex((1, 3)),
            death_simplex=Simplex((0, 1, 3)),
        )
        diagram = PersistenceDiagram(pairs=(cycle,), max_dim=2)

        (top,) = top_k_deaths(diagram, dim=1, k=1)

        assert top.landmark_indices == (0, 1, 3)

    def test_k_must_be_positive(self, hollow_triangle):
        diagram = compute_persistence(hollow_triangle)
        with pytest.raises(ValueError):
            top_k_deaths(diagram, dim=0, k=0)


class TestPersistencePair:
    def test_finite_pair_needs_death_simplex(self):
        with pytest.raises(ValueError):
            PersistencePair(dim=0, birth=0.0, death=1.0, birth_simplex=Simplex((0,)))

    def test_death_simplex_must_be_one_dimension_up(self):
        with pytest.raises(ValueError):
            PersistencePair(
                dim=0,
                birth=0.0,
                death=1.0,
                birth_simplex=Simplex((0,)),
                death_simplex=Simplex((0, 1, 2)),
            )

    def test_death_cannot_precede_birth(self):
        with pytest.raises(ValueError):
            PersistencePair(
                dim=0,
                birth=2.0,
                death=1.0,
                birth_simplex=Simplex((0,)),
                death_simplex=Simplex((0, 1)),
            )

    def test_persistence(self):
        pair = PersistencePair(
            dim=0,
            birth=0.5,
            death=2.0,
            birth_simplex=Simplex((1,)),
            death_simplex=Simplex((0, 1)),
        )
        assert pair.persistence == 1.5
        assert not pair.is_essential
