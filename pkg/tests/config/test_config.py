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
import json
import os
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from coolgap.config import CONFIG_FILE_ENV, DEFAULT_OVERPASS_ENDPOINT, Settings
from coolgap.telemetry import LogLevel


@pytest.fixture(autouse=True)
def empty_directory(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)


def test__config__defaults() -> None:
    with patch.dict(os.environ, {}, clear=True):
        settings = Settings()

        assert settings.overpass_endpoint == DEFAULT_OVERPASS_ENDPOINT
        assert settings.max_dim == 2
        assert settings.top_k == 5
        assert settings.osm_tags_file is None
        assert settings.log_level == LogLevel.INFO


def test__config__load_env_vars() -> None:
    env_vars = dict(
        COOLGAP_MAX_DIM="3",
        COOLGAP_CACHE_DIR="memory://cache",
        COOLGAP_LOG_FORMAT="json",
        UNRELATED="ignored",
    )

    with patch.dict(os.environ, env_vars, clear=True):
        settings = Settings()

        assert settings.max_dim == 3
        assert settings.cache_dir == "memory://cache"
        assert settings.log_format == "json"


def test__config__load_config_file(tmp_path) -> None:
    (tmp_path / "coolgap.json").write_text(
        json.dumps(
            {
                "top_k": 7,
                "overpass_endpoint": "https://overpass.test/api/interpreter",
                "log_level": "DEBUG",
            }
        )
    )

    with patch.dict(os.environ, {}, clear=True):
        settings = Settings()

        assert settings.top_k == 7
        assert settings.overpass_endpoint == "https://overpass.test/api/interpreter"
        assert settings.log_level == LogLevel.DEBUG


def test__config__config_file_found_in_parent(tmp_path, monkeypatch) -> None:
    (tmp_path / "coolgap.json").write_text(json.dumps({"workers": 2}))
    nested = tmp_path / "a" / "b"
    nested.mkdir(parents=True)
    monkeypatch.chdir(nested)

    with patch.dict(os.environ, {}, clear=True):
        assert Settings().workers == 2


def test__config__env_overrides_file_and_flags_override_env(tmp_path) -> None:
    (tmp_path / "coolgap.json").write_text(json.dumps({"top_k": 7, "max_dim": 3}))

    with patch.dict(os.environ, {"COOLGAP_TOP_K": "9"}, clear=True):
        settings = Settings(max_dim=1)

        assert settings.top_k == 9
        assert settings.max_dim == 1


def test__config__explicit_config_file(tmp_path) -> None:
    config_file = tmp_path / "elsewhere" / "settings.json"
    config_file.parent.mkdir()
    config_file.write_text(json.dumps({"osm_tags_file": "tags.json"}))

    with patch.dict(os.environ, {CONFIG_FILE_ENV: str(config_file)}, clear=True):
        assert Settings().osm_tags_file == "tags.json"


def test__config__rejects_invalid_values() -> None:
    with patch.dict(os.environ, {"COOLGAP_MAX_DIM": "0"}, clear=True):
        with pytest.raises(ValidationError):
            Settings()
