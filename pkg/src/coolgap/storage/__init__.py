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
fsspec helpers so every input and output path may be local or any fsspec URL.
"""

import logging

from fsspec import AbstractFileSystem
from fsspec.core import url_to_fs

logger = logging.getLogger(__name__)


def open_file_system(
    path: str, file_system: AbstractFileSystem | None = None
) -> tuple[AbstractFileSystem, str]:
    """Resolve `path` to a file system and the path inside it."""
    if file_system is not None:
        return file_system, path
    fs, resolved = url_to_fs(path)
    return fs, resolved


def read_bytes(path: str, file_system: AbstractFileSystem | None = None) -> bytes:
    fs, resolved = open_file_system(path, file_system)
    if not fs.exists(resolved):
        raise FileNotFoundError(f"File not found at {path}")
    with fs.open(resolved, "rb") as f:
        data: bytes = f.read()
    return data


def read_text(path: str, file_system: AbstractFileSystem | None = None) -> str:
    return read_bytes(path, file_system).decode("utf-8")


def write_text(
    path: str, content: str, file_system: AbstractFileSystem | None = None
) -> None:
    """Write UTF-8 text with LF line endings, creating parent directories."""
    fs, resolved = open_file_system(path, file_system)
    parent = resolved.rsplit("/", 1)[0] if "/" in resolved else ""
    if parent:
        fs.makedirs(parent, exist_ok=True)
    with fs.open(resolved, "wb") as f:
        f.write(content.encode("utf-8"))
    logger.debug("Wrote file", extra={"path": path, "bytes": len(content)})


__all__ = ["open_file_system", "read_bytes", "read_text", "write_text"]
