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
import io
import logging
import math

import pandas as pd
from fsspec import AbstractFileSystem

from ..hvi import TractDemographics
from ..storage import read_text
from .exceptions import ParseError, ValueRangeError

logger = logging.getLogger(__name__)

DEMOGRAPHIC_COLUMNS = ("tract_id", "pm_temp_f", "canopy_pct", "pop_under5", "pop_over65")
_NUMERIC_COLUMNS = DEMOGRAPHIC_COLUMNS[1:]


def _optional(value: float) -> float | None:
    return None if math.isnan(value) else float(value)


def parse_demographics(text: str, source: str = "<csv>") -> list[TractDemographics]:
    try:
        frame = pd.read_csv(
            io.StringIO(text), dtype={"tract_id": str}, skipinitialspace=True
        )
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise ParseError(source, str(e)) from e
    missing = [c for c in DEMOGRAPHIC_COLUMNS if c not in frame.columns]
    if missing:
        raise ParseError(source, f"missing columns {', '.join(missing)}")

    for column in _NUMERIC_COLUMNS:
        try:
            frame[column] = pd.to_numeric(frame[column], errors="raise").astype(float)
        except (ValueError, TypeError) as e:
            raise ParseError(source, f"column {column}: {e}") from e

    tracts: list[TractDemographics] = []
    for row, record in enumerate(frame.to_dict("records"), start=2):
        tract_id = record["tract_id"]
        if not isinstance(tract_id, str) or not tract_id:
            raise ParseError(source, f"line {row}: empty tract_id")
        where = f"tract {tract_id}"
        canopy = _optional(record["canopy_pct"])
        if canopy is not None and not 0.0 <= canopy <= 100.0:
            raise ValueRangeError(source, "canopy_pct", canopy, where)
        values = {
            "pm_temp": _optional(record["pm_temp_f"]),
            "canopy_gap_pct": None if canopy is None else 100.0 - canopy,
            "pop_under5": _optional(record["pop_under5"]),
            "pop_over65": _optional(record["pop_over65"]),
        }
        for name in ("pm_temp", "pop_under5", "pop_over65"):
            value = values[name]
            if value is not None and (
                math.isinf(value) or (name != "pm_temp" and value < 0)
            ):
                raise ValueRangeError(source, name, value, where)
        tracts.append(
            TractDemographics(
                tract_id=tract_id,
                pm_temp=values["pm_temp"],
                canopy_gap_pct=values["canopy_gap_pct"],
                pop_under5=values["pop_under5"],
                pop_over65=values["pop_over65"],
            )
        )
    return tracts


def load_demographics(
    path: str, file_system: AbstractFileSystem | None = None
) -> list[TractDemographics]:
    """
    Tract demographics from a CSV with header
    tract_id,pm_temp_f,canopy_pct,pop_under5,pop_over65. Empty cells are
    missing values; the canopy gap is 100 minus the canopy percentage.

    Raises:
        ParseError: If the CSV is malformed or a cell is not numeric.
        ValueRangeError: If canopy_pct is outside [0, 100] or a count is negative.
    """
    tracts = parse_demographics(read_text(path, file_system), path)
    incomplete = sum(1 for t in tracts if not t.is_complete)
    logger.info(
        "Loaded demographics",
        extra={"path": path, "tracts": len(tracts), "incomplete": incomplete},
    )
    return tracts
