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
"""Exceptions and warnings for witness complex construction."""

from ..exceptions import CoolgapError


class WitnessError(CoolgapError):
    """Base class for all exceptions raised by the witness package."""

    pass


class InvalidFiltration(WitnessError):
    """Raised when a simplex order is not a valid filtration order."""

    def __init__(self, reason: str, vertices: tuple[int, ...] | None = None):
        where = f" at simplex {vertices}" if vertices is not None else ""
        super().__init__(f"Invalid filtration{where}: {reason}")
        self.reason = reason
        self.vertices = vertices


class DimensionTooLarge(UserWarning):
    """Emitted when max_dim exceeds what the landmark count can support."""

    def __init__(self, requested: int, clamped: int, landmarks: int):
        super().__init__(
            f"max_dim={requested} exceeds {landmarks} landmarks - 1; "
            f"clamped to {clamped}"
        )
        self.requested = requested
        self.clamped = clamped
        self.landmarks = landmarks
