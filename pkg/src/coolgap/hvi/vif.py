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
from typing import Sequence

import numpy as np

from .exceptions import InsufficientData, SingularDesign, ZeroVariance
from .index import complete_case_matrix
from .types import HVI_VARIABLES, TractDemographics, VifEntry

logger = logging.getLogger(__name__)

MIN_TRACTS_FOR_VIF = 6
RANK_TOLERANCE = 1e-10


def vif(tracts: Sequence[TractDemographics]) -> list[VifEntry]:
    """
    Variance inflation factor of each HVI variable.

    Each variable is regressed on the other three plus an intercept by least
    squares over the complete-case tracts; VIF = 1 / (1 - R^2). The normal
    equations are solved with a pseudo-inverse at a relative rank tolerance of
    1e-10. An exactly collinear regression (1 - R^2 within that tolerance)
    reports VIF = inf and is flagged singular.

    Raises:
        InsufficientData: If fewer than 6 complete tracts remain.
        ZeroVariance: If a variable is constant, leaving R^2 undefined.
    """
    complete, matrix = complete_case_matrix(tracts)
    if len(complete) < MIN_TRACTS_FOR_VIF:
        raise InsufficientData(len(complete), MIN_TRACTS_FOR_VIF)

    centered = matrix - matrix.mean(axis=0)
    total = (centered**2).sum(axis=0)
    constant = [name for name, ss in zip(HVI_VARIABLES, total) if ss == 0.0]
    if constant:
        raise ZeroVariance(constant)

    intercept = np.ones((matrix.shape[0], 1))
    entries: list[VifEntry] = []
    for column, name in enumerate(HVI_VARIABLES):
        target = matrix[:, column]
        design = np.hstack([intercept, np.delete(matrix, column, axis=1)])
        gram = design.T @ design
        coefficients = np.linalg.pinv(gram, rcond=RANK_TOLERANCE) @ (design.T @ target)
        residual = target - design @ coefficients
        unexplained = float(residual @ residual) / float(total[column])
        r_squared = min(1.0, max(0.0, 1.0 - unexplained))

        if 1.0 - r_squared <= RANK_TOLERANCE:
            logger.warning(
                "Singular VIF regression",
                extra={"variable": name, "r_squared": r_squared},
            )
            warnings.warn(SingularDesign(name), stacklevel=2)
            entries.append(
                VifEntry(variable=name, vif=np.inf, r_squared=1.0, singular=True)
            )
            continue
        entries.append(
            VifEntry(variable=name, vif=1.0 / (1.0 - r_squared), r_squared=r_squared)
        )
    return entries
