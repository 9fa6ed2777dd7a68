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
import hashlib
import json
import logging
from typing import Mapping, Sequence

from fsspec import AbstractFileSystem
from pydantic import ValidationError

from ..geo import BoundingBox
from ..storage import open_file_system, read_text, write_text
from .exceptions import ParseError
from .types import CacheEntry

logger = logging.getLogger(__name__)

TagFilters = Sequence[tuple[str, Sequence[Mapping[str, str]]]]


class ResponseCache:
    """
    Content-addressed cache of Overpass results: one JSON file per query,
    named by the hash of endpoint, bounding box and resolved tag filters.
    """

    def __init__(self, cache_dir: str, file_system: AbstractFileSystem | None = None):
        self.cache_dir = cache_dir.rstrip("/")
        self.file_system = file_system

    @staticmethod
    def key(endpoint: str, bbox: BoundingBox, filters: TagFilters) -> str:
        canonical = json.dumps(
            {
                "endpoint": endpoint,
                "bbox": bbox.as_overpass(),
                "filters": [
                    [group, [sorted(f.items()) for f in group_filters]]
                    for group, group_filters in filters
                ],
            },
            sort_keys=True,
            separators=(",", ":"),
        )
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def path(self, key: str) -> str:
        return f"{self.cache_dir}/{key}.json"

    def get(self, key: str) -> CacheEntry | None:
        path = self.path(key)
        fs, resolved = open_file_system(path, self.file_system)
        if not fs.exists(resolved):
            return None
        try:
            return CacheEntry.model_validate_json(read_text(path, self.file_system))
        except ValidationError as e:
            raise ParseError(path, f"corrupt cache entry: {e.errors()[0]['msg']}") from e

    def put(self, entry: CacheEntry) -> str:
        path = self.path(entry.key)
        write_text(path, entry.model_dump_json(indent=2) + "\n", self.file_system)
        logger.debug("Cached witness query", extra={"key": entry.key, "path": path})
        return path
