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
Inputs: region documents, witness files, tract demographics, and candidate
cooling centers fetched from OpenStreetMap.
"""

from .cache import ResponseCache
from .demographics import DEMOGRAPHIC_COLUMNS, load_demographics, parse_demographics
from .exceptions import (
    CoordinateRangeError,
    DuplicateId,
    FetchError,
    IngestError,
    MissingId,
    NetworkError,
    ParseError,
    UpstreamError,
    ValueRangeError,
)
from .overpass import (
    OverpassClient,
    build_overpass_query,
    fetch_witnesses,
    load_tag_mapping,
    resolve_tags,
    witnesses_from_responses,
)
from .regions import (
    load_regions,
    parse_region_document,
    points_feature_collection,
    read_region_file,
    save_regions,
)
from .synthetic import random_witnesses
from .types import (
    DEFAULT_TAGS,
    CacheEntry,
    RegionFeature,
    RegionFile,
    WitnessQuery,
    make_point,
)
from .witnesses import (
    load_witnesses,
    parse_witness_csv,
    parse_witness_geojson,
    save_witnesses,
    witness_csv,
)

__all__ = [
    "DEFAULT_TAGS",
    "DEMOGRAPHIC_COLUMNS",
    "CacheEntry",
    "CoordinateRangeError",
    "DuplicateId",
    "FetchError",
    "IngestError",
    "MissingId",
    "NetworkError",
    "OverpassClient",
    "ParseError",
    "RegionFeature",
    "RegionFile",
    "ResponseCache",
    "UpstreamError",
    "ValueRangeError",
    "WitnessQuery",
    "build_overpass_query",
    "fetch_witnesses",
    "load_demographics",
    "load_regions",
    "load_tag_mapping",
    "load_witnesses",
    "make_point",
    "parse_demographics",
    "parse_region_document",
    "parse_witness_csv",
    "parse_witness_geojson",
    "points_feature_collection",
    "random_witnesses",
    "read_region_file",
    "resolve_tags",
    "save_regions",
    "save_witnesses",
    "witness_csv",
    "witnesses_from_responses",
]
