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
OpenStreetMap candidate witnesses through the Overpass API.

One query per tag group is sent, serialized, with retries and exponential
backoff. Results are cached per (endpoint, bounding box, tag filters).
"""

import json
import logging
from datetime import datetime, timezone
from importlib import resources
from typing import Any, Mapping, Sequence, cast

import requests
from fsspec import AbstractFileSystem
from requests.adapters import HTTPAdapter
from urllib3.util.retry import Retry

from ..config import DEFAULT_OVERPASS_ENDPOINT
from ..geo import BoundingBox, GeoPoint
from ..storage import read_text
from ..telemetry import log_stage
from ..witness import WitnessSet
from .cache import ResponseCache, TagFilters
from .exceptions import IngestError, NetworkError, ParseError, UpstreamError
from .types import CacheEntry, WitnessQuery, make_point

logger = logging.getLogger(__name__)

DEFAULT_TIMEOUT_S = 30.0
DEFAULT_MAX_RETRIES = 3
DEFAULT_BACKOFF_FACTOR = 1.0
BODY_EXCERPT_CHARS = 300
RETRY_STATUSES = (429, 500, 502, 503, 504)

TagMapping = dict[str, list[dict[str, str]]]


def load_tag_mapping(
    path: str | None = None, file_system: AbstractFileSystem | None = None
) -> TagMapping:
    """
    Tag group name -> list of OSM key/value filters. Each filter matches
    elements carrying all of its tags; a group matches any of its filters.
    Without a path the packaged default mapping is used.
    """
    if path is None:
        text = resources.files("coolgap.ingest").joinpath("osm_tags.json").read_text(
            encoding="utf-8"
        )
        source = "osm_tags.json"
    else:
        text = read_text(path, file_system)
        source = path
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(source, f"invalid JSON: {e}") from e
    if not isinstance(data, dict) or not all(
        isinstance(filters, list)
        and filters
        and all(
            isinstance(f, dict)
            and f
            and all(isinstance(k, str) and isinstance(v, str) for k, v in f.items())
            for f in filters
        )
        for filters in data.values()
    ):
        raise ParseError(
            source, "expected an object of tag group -> nonempty list of tag objects"
        )
    return cast(TagMapping, data)


def resolve_tags(tags: Sequence[str], mapping: Mapping[str, Any]) -> TagFilters:
    unknown = [t for t in tags if t not in mapping]
    if unknown:
        raise IngestError(f"No tag mapping for {', '.join(repr(t) for t in unknown)}")
    return [(tag, mapping[tag]) for tag in tags]


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def build_overpass_query(
    bbox: BoundingBox,
    filters: Sequence[Mapping[str, str]],
    timeout: float = DEFAULT_TIMEOUT_S,
) -> str:
    """Overpass QL for nodes and ways matching any filter inside the box."""
    area = f"({bbox.as_overpass()})"
    statements: list[str] = []
    for tag_filter in filters:
        selector = "".join(
            f"[{_quote(k)}={_quote(v)}]" for k, v in sorted(tag_filter.items())
        )
        for element in ("node", "way"):
            statements.append(f"  {element}{selector}{area};")
    body = "\n".join(statements)
    return f"[out:json][timeout:{int(timeout)}];\n(\n{body}\n);\nout geom;\n"


def _retrying_session(max_retries: int, backoff_factor: float) -> requests.Session:
    retry = Retry(
        total=max_retries,
        backoff_factor=backoff_factor,
        status_forcelist=RETRY_STATUSES,
        allowed_methods=frozenset({"GET", "POST"}),
        raise_on_status=False,
    )
    session = requests.Session()
    adapter = HTTPAdapter(max_retries=retry)
    session.mount("http://", adapter)
    session.mount("https://", adapter)
    return session


class OverpassClient:
    def __init__(
        self,
        endpoint: str = DEFAULT_OVERPASS_ENDPOINT,
        timeout: float = DEFAULT_TIMEOUT_S,
        max_retries: int = DEFAULT_MAX_RETRIES,
        backoff_factor: float = DEFAULT_BACKOFF_FACTOR,
        session: requests.Session | None = None,
    ):
        self.endpoint = endpoint
        self.timeout = timeout
        self.session = session or _retrying_session(max_retries, backoff_factor)

    @property
    def headers(self) -> dict[str, str]:
        return {"Accept": "application/json"}

    def query(self, ql: str, cache_key: str | None = None) -> dict[str, Any]:
        """
        Run one Overpass QL query.

        Raises:
            NetworkError: If the endpoint cannot be reached.
            UpstreamError: If it answers with a non-success status.
            ParseError: If the body is not an Overpass JSON document.
        """
        try:
            response = self.session.post(
                self.endpoint,
                data={"data": ql},
                headers=self.headers,
                timeout=self.timeout,
            )
        except requests.exceptions.RetryError as e:
            raise UpstreamError(self.endpoint, None, str(e)) from e
        except (requests.ConnectionError, requests.Timeout) as e:
            raise NetworkError(self.endpoint, str(e), cache_key) from e

        if not response.ok:
            raise UpstreamError(
                self.endpoint,
                response.status_code,
                response.text[:BODY_EXCERPT_CHARS],
            )
        try:
            document = response.json()
        except ValueError as e:
            raise ParseError(self.endpoint, f"response is not JSON: {e}") from e
        if not isinstance(document, dict) or not isinstance(
            document.get("elements"), list
        ):
            raise ParseError(self.endpoint, "response has no elements list")
        return document


def _element_point(element: Mapping[str, Any], source: str) -> GeoPoint | None:
    kind = element.get("type")
    where = f"{kind}/{element.get('id')}"
    try:
        if kind == "node":
            return make_point(float(element["lat"]), float(element["lon"]), source, where)
        if kind == "way":
            # ways are represented by the provided center or their first node
            center = element.get("center")
            if isinstance(center, dict):
                return make_point(
                    float(center["lat"]), float(center["lon"]), source, where
                )
            geometry = element.get("geometry")
            if isinstance(geometry, list) and geometry:
                first = geometry[0]
                return make_point(float(first["lat"]), float(first["lon"]), source, where)
            return None
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(source, f"{where}: malformed coordinates ({e})") from e
    return None


def witnesses_from_responses(
    responses: Sequence[Mapping[str, Any]], source: str = "overpass"
) -> WitnessSet:
    """Merge Overpass responses: dedupe by element id, sort by (type, id)."""
    found: dict[tuple[str, int], GeoPoint] = {}
    skipped = 0
    for document in responses:
        for element in document.get("elements", []):
            kind, identifier = element.get("type"), element.get("id")
            if not isinstance(kind, str) or not isinstance(identifier, int):
                raise ParseError(source, f"element without type/id: {element!r:.120}")
            key = (kind, identifier)
            if key in found:
                continue
            point = _element_point(element, source)
            if point is None:
                skipped += 1
                continue
            found[key] = point
    if skipped:
        logger.debug("Skipped elements without geometry", extra={"skipped": skipped})
    keys = sorted(found)
    return WitnessSet(
        points=tuple(found[k] for k in keys),
        ids=tuple(f"{kind}/{identifier}" for kind, identifier in keys),
    )


@log_stage
def fetch_witnesses(
    query: WitnessQuery,
    endpoint: str = DEFAULT_OVERPASS_ENDPOINT,
    cache_dir: str = ".cache/coolgap",
    tag_mapping: Mapping[str, Any] | None = None,
    timeout: float = DEFAULT_TIMEOUT_S,
    max_retries: int = DEFAULT_MAX_RETRIES,
    backoff_factor: float = DEFAULT_BACKOFF_FACTOR,
    session: requests.Session | None = None,
    file_system: AbstractFileSystem | None = None,
) -> WitnessSet:
    """
    Candidate cooling centers inside the query box, one Overpass request per
    tag group, served from the cache when the same query ran before.

    Raises:
        NetworkError: On connection failure with no cached result.
        UpstreamError: On a non-success response.
        ParseError: On a malformed response.
    """
    mapping = tag_mapping if tag_mapping is not None else load_tag_mapping()
    filters = resolve_tags(query.tags, mapping)
    cache = ResponseCache(cache_dir, file_system)
    key = cache.key(endpoint, query.bbox, filters)

    cached = cache.get(key)
    if cached is not None:
        logger.info(
            "Served witnesses from cache",
            extra={"key": key, "witnesses": len(cached.witnesses)},
        )
        return cached.witnesses

    client = OverpassClient(endpoint, timeout, max_retries, backoff_factor, session)
    queries: list[str] = []
    responses: list[dict[str, Any]] = []
    for group, group_filters in filters:
        ql = build_overpass_query(query.bbox, group_filters, timeout)
        logger.info("Querying Overpass", extra={"tag_group": group, "endpoint": endpoint})
        queries.append(ql)
        responses.append(client.query(ql, cache_key=key))

    witnesses = witnesses_from_responses(responses, endpoint)
    if len(witnesses) == 0:
        logger.warning(
            "Overpass returned no witnesses",
            extra={"bbox": query.bbox.as_overpass(), "tags": list(query.tags)},
        )
    cache.put(
        CacheEntry(
            key=key,
            fetched_at=datetime.now(timezone.utc),
            endpoint=endpoint,
            queries=queries,
            responses=responses,
            witnesses=witnesses,
        )
    )
    logger.info("Fetched witnesses", extra={"witnesses": len(witnesses), "key": key})
    return witnesses
