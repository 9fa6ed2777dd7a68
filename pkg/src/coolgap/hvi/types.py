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
from typing import Final

from pydantic import BaseModel, ConfigDict, Field, model_validator

HVI_VARIABLES: Final = ("pm_temp", "canopy_gap_pct", "pop_under5", "pop_over65")


class TractDemographics(BaseModel):
    """
    One census tract's heat vulnerability inputs. None marks a missing value.

    Attributes:
        tract_id: Tract identifier (GEOID).
        pm_temp: Typical afternoon temperature, degrees Fahrenheit.
        canopy_gap_pct: Percent of the area not covered by tree canopy.
        pop_under5: Residents younger than 5.
        pop_over65: Residents aged 65 or older.
    """

    model_config = ConfigDict(frozen=True)

    tract_id: str
    pm_temp: float | None = Field(default=None, allow_inf_nan=False)
    canopy_gap_pct: float | None = Field(
        default=None, ge=0.0, le=100.0, allow_inf_nan=False
    )
    pop_under5: float | None = Field(default=None, ge=0.0, allow_inf_nan=False)
    pop_over65: float | None = Field(default=None, ge=0.0, allow_inf_nan=False)

    @property
    def missing_fields(self) -> tuple[str, ...]:
        return tuple(name for name in HVI_VARIABLES if getattr(self, name) is None)

    @property
    def is_complete(self) -> bool:
        return not self.missing_fields

    def as_vector(self) -> tuple[float, ...]:
        """The four variables in HVI_VARIABLES order; only for complete tracts."""
        if not self.is_complete:
            raise ValueError(f"tract {self.tract_id} has missing values")
        return tuple(float(getattr(self, name)) for name in HVI_VARIABLES)


class CityStats(BaseModel):
    """Population mean and standard deviation per variable over complete cases."""

    model_config = ConfigDict(frozen=True)

    mean: dict[str, float]
    std: dict[str, float]
    count: int = Field(ge=0)


class HviResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    tract_id: str
    score: float | None = None
    z_scores: dict[str, float] | None = None
    missing_fields: tuple[str, ...] = ()

    @property
    def missing(self) -> bool:
        return bool(self.missing_fields)

    @model_validator(mode="after")
    def _check_score(self) -> "HviResult":
        if self.missing_fields:
            if self.score is not None or self.z_scores is not None:
                raise ValueError("a tract with missing values has no score")
        elif self.score is None or self.z_scores is None:
            raise ValueError("a complete tract needs a score and z-scores")
        elif not math.isclose(
            self.score, math.fsum(self.z_scores.values()), abs_tol=1e-9
        ):
            raise ValueError("score must equal the sum of the z-scores")
        return self


class VifEntry(BaseModel):
    """Variance inflation factor of one variable regressed on the others."""

    model_config = ConfigDict(frozen=True)

    variable: str
    vif: float
    r_squared: float
    singular: bool = False
