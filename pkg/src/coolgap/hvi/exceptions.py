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
"""Exceptions and warnings for heat vulnerability scoring."""

from typing import Sequence

from ..exceptions import CoolgapError


class HviError(CoolgapError):
    """Base class for all exceptions raised by the hvi package."""

    pass


class InsufficientData(HviError):
    """Raised when too few complete-case tracts remain for a statistic."""

    def __init__(self, count: int, required: int):
        super().__init__(
            f"Need at least {required} tracts with no missing values, got {count}"
        )
        self.count = count
        self.required = required


class ZeroVariance(HviError):
    """Raised when a variable is constant across the complete-case tracts."""

    def __init__(self, variables: Sequence[str]):
        super().__init__(
            f"Zero standard deviation for {', '.join(variables)}; "
            "z-scores are undefined"
        )
        self.variables = tuple(variables)


class SingularDesign(UserWarning):
    """Emitted when a VIF regression is exactly collinear (VIF reported as inf)."""

    def __init__(self, variable: str):
        super().__init__(f"Regression of {variable} on the other variables is singular")
        self.variable = variable
