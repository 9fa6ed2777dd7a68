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
"""Exceptions for loading inputs and fetching witnesses."""

from ..exceptions import CoolgapError


class IngestError(CoolgapError):
    """Base class for all exceptions raised by the ingest package."""

    pass


class ParseError(IngestError):
    """Raised when an input document cannot be parsed."""

    def __init__(self, source: str, reason: str):
        super().__init__(f"Could not parse {source}: {reason}")
        self.source = source
        self.reason = reason


class MissingId(IngestError):
    """Raised when a feature carries no usable identifier."""

    def __init__(self, source: str, index: int):
        super().__init__(f"Feature {index} in {source} has no id")
        self.source = source
        self.index = index


class DuplicateId(MissingId):
    """Raised when two features share an identifier."""

    def __init__(self, source: str, index: int, feature_id: str):
        IngestError.__init__(
            self, f"Feature {index} in {source} repeats id {feature_id!r}"
        )
        self.source = source
        self.index = index
        self.feature_id = feature_id


class ValueRangeError(IngestError):
    """Raised when a value lies outside its allowed range."""

    def __init__(self, source: str, field: str, value: float, where: str = ""):
        location = f" ({where})" if where else ""
        super().__init__(f"{field}={value!r} out of range in {source}{location}")
        self.source = source
        self.field = field
        self.value = value
        self.where = where


class CoordinateRangeError(ValueRangeError):
    """Raised when a latitude or longitude is outside the valid range."""

    pass


class FetchError(IngestError):
    """Base class for failures talking to the OSM query service."""

    pass


class NetworkError(FetchError):
    """Raised when the query service cannot be reached."""

    def __init__(self, endpoint: str, reason: str, cache_key: str | None = None):
        detail = f" (cache miss for {cache_key})" if cache_key else ""
        super().__init__(f"Could not reach {endpoint}: {reason}{detail}")
        self.endpoint = endpoint
        self.reason = reason
        self.cache_key = cache_key


class UpstreamError(FetchError):
    """Raised when the query service answers with a non-success status."""

    def __init__(self, endpoint: str, status_code: int | None, body_excerpt: str):
        status = status_code if status_code is not None else "no status"
        super().__init__(f"{endpoint} returned {status}: {body_excerpt}")
        self.endpoint = endpoint
        self.status_code = status_code
        self.body_excerpt = body_excerpt
