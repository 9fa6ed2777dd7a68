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
from pathlib import Path
from typing import Any, Mapping

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic_settings.sources import EnvSettingsSource, PydanticBaseSettingsSource
from pydantic_settings.sources.utils import parse_env_vars

from ..telemetry.logging import FormatType, LogLevel

ENV_PREFIX = "COOLGAP_"
CONFIG_FILE_ENV = f"{ENV_PREFIX}CONFIG_FILE"
DEFAULT_CONFIG_FILE = "coolgap.json"
DEFAULT_OVERPASS_ENDPOINT = "https://overpass-api.de/api/interpreter"


class ConfigFileSettingsSource(EnvSettingsSource):
    """A source class that takes settings from a coolgap.json file."""

    def __init__(
        self,
        settings_cls: type[BaseSettings],
        config_file: str | None = None,
        config_file_encoding: str | None = None,
        **kwargs: Any,
    ):
        self.config_file = config_file
        self.config_file_encoding = config_file_encoding
        super().__init__(settings_cls, **kwargs)

    def _find_config_file(self, config_file: str) -> Path | None:
        """Find config file by searching up the directory tree like .env files."""
        config_path = Path(config_file)

        if config_path.is_absolute():
            return config_path if config_path.is_file() else None

        cwd = Path.cwd()
        for path in [cwd, *cwd.parents]:
            potential_path = path / config_file
            if potential_path.is_file():
                return potential_path

        return None

    def _load_env_vars(self) -> Mapping[str, str | None]:
        """Load environment variables with config file values as fallback."""
        env_vars = dict(super()._load_env_vars())

        config_file = (
            self.config_file or os.getenv(CONFIG_FILE_ENV) or DEFAULT_CONFIG_FILE
        )
        config_path = self._find_config_file(config_file)

        if config_path is not None:
            encoding = self.config_file_encoding or "utf-8"
            with open(config_path, "r", encoding=encoding) as f:
                file_data = json.load(f)

            if isinstance(file_data, dict):
                for field_name in self.settings_cls.model_fields.keys():
                    env_key = f"{ENV_PREFIX}{field_name}".lower()

                    # environment wins over the file
                    if env_vars.get(env_key):
                        continue

                    value = file_data.get(field_name)
                    if value is None or value == "":
                        continue
                    env_vars[env_key] = (
                        json.dumps(value) if isinstance(value, (list, dict)) else str(value)
                    )

        return parse_env_vars(
            env_vars,
            self.case_sensitive,
            self.env_ignore_empty,
            self.env_parse_none_str,
        )

    def __repr__(self) -> str:
        return f"ConfigFileSettingsSource(config_file={self.config_file!r}, config_file_encoding={self.config_file_encoding!r})"


class Settings(BaseSettings):
    """
    Runtime settings. Source priority:
    1. explicit values (CLI flags)
    2. COOLGAP_* environment variables
    3. .env file
    4. file_secrets
    5. coolgap.json (fallback)
    """

    overpass_endpoint: str = DEFAULT_OVERPASS_ENDPOINT
    cache_dir: str = ".cache/coolgap"
    osm_tags_file: str | None = None

    request_timeout: float = Field(default=30.0, gt=0)
    max_retries: int = Field(default=3, ge=0)
    backoff_factor: float = Field(default=1.0, ge=0)

    max_dim: int = Field(default=2, ge=1)
    top_k: int = Field(default=5, ge=1)
    workers: int = Field(default=8, ge=1)

    log_level: LogLevel = LogLevel.INFO
    log_format: FormatType = "text"

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return (
            init_settings,
            env_settings,
            dotenv_settings,
            file_secret_settings,
            ConfigFileSettingsSource(settings_cls),
        )

    model_config = SettingsConfigDict(
        env_prefix=ENV_PREFIX,
        env_file=".env",
        extra="ignore",
    )


__all__ = [
    "CONFIG_FILE_ENV",
    "ConfigFileSettingsSource",
    "DEFAULT_OVERPASS_ENDPOINT",
    "Settings",
]
