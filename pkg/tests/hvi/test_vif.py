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

import numpy as np
import pytest

from coolgap.hvi import (
    InsufficientData,
    SingularDesign,
    TractDemographics,
    ZeroVariance,
    vif,
)


def _orthogonal_columns() -> np.ndarray:
    """Four centered, mutually orthogonal +-1 columns over 8 rows."""
    h2 = np.array([[1.0, 1.0], [1.0, -1.0]])
    h8 = np.kron(h2, np.kron(h2, h2))
    return h8[:, 1:5]


def _tracts(columns: np.ndarray) -> list[TractDemographics]:
    temp, gap, under5, over65 = columns.T
    return [
        TractDemographics(
            tract_id=f"{i:011d}",
            pm_temp=85.0 + 5.0 * float(temp[i]),
            canopy_gap_pct=50.0 + 10.0 * float(gap[i]),
            pop_under5=200.0 + 50.0 * float(under5[i]),
            pop_over65=300.0 + 50.0 * float(over65[i]),
        )
        for i in range(columns.shape[0])
    ]


class TestVif:
    def test_uncorrelated_variables(self):
        entries = vif(_tracts(_orthogonal_columns()))

        for entry in entries:
            assert entry.vif == pytest.approx(1.0, abs=1e-9)
            assert not entry.singular

    def test_controlled_r_squared(self):
        q = _orthogonal_columns()
        columns = q.copy()
        # the regressors span q[:, 1:]; q[:, 0] is the residual direction
        columns[:, 0] = math.sqrt(0.75) * q[:, 1] + math.sqrt(0.25) * q[:, 0]

        entries = {e.variable: e for e in vif(_tracts(columns))}

        assert entries["pm_temp"].r_squared == pytest.approx(0.75, abs=1e-9)
        assert entries["pm_temp"].vif == pytest.approx(4.0, abs=0.05)

    def test_duplicated_variable_is_singular(self):
        rng = np.random.default_rng(3)
        columns = rng.normal(size=(12, 4))
        columns[:, 3] = columns[:, 2]

        with pytest.warns(SingularDesign):
            entries = {e.variable: e for e in vif(_tracts(columns))}

        for name in ("pop_under5", "pop_over65"):
            assert entries[name].vif == math.inf
            assert entries[name].singular
            assert entries[name].r_squared == 1.0
        assert math.isfinite(entries["pm_temp"].vif)

    def test_needs_six_complete_tracts(self):
        tracts = _tracts(_orthogonal_columns())[:5]
        with pytest.raises(InsufficientData):
            vif(tracts)

    def test_constant_variable_is_rejected(self):
        columns = _orthogonal_columns()
        columns[:, 1] = 0.0
        with pytest.raises(ZeroVariance):
            vif(_tracts(columns))
