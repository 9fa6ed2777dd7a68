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
import logging
from functools import wraps
from pathlib import PurePosixPath
from typing import Any, Callable, ParamSpec, TypeVar

import click
from pydantic import ValidationError

from ..config import Settings
from ..exceptions import CoolgapError
from ..geo import BoundingBox, buffered_bbox
from ..hvi import InsufficientData, rank_tracts, score_city, vif
from ..ingest import (
    DEFAULT_TAGS,
    FetchError,
    WitnessQuery,
    fetch_witnesses,
    load_demographics,
    load_regions,
    load_tag_mapping,
    load_witnesses,
    random_witnesses,
    witness_csv,
)
from ..storage import read_text, write_text
from ..telemetry import init_logging
from ..witness import LandmarkSet, WitnessSet, build_filtered_complex
from .analysis import analyze as run_analysis
from .summary import compare_cities
from .types import SummaryStats
from .writers import (
    HVI_FILE,
    SUMMARY_FILE,
    TOP_K_HVI_FILE,
    format_float,
    read_summary_stats,
    render_analysis,
    render_hvi_csv,
    render_snapshot,
    render_top_k_hvi_csv,
    write_outputs,
)

logger = logging.getLogger(__name__)

EXIT_INPUT_ERROR = 1
EXIT_FETCH_ERROR = 2
VIF_FILE = "vif.csv"

P = ParamSpec("P")
T = TypeVar("T")


class InputError(click.UsageError):
    exit_code = EXIT_INPUT_ERROR


class Environment:
    def __init__(self, settings: Settings, seed: int = 0):
        self.settings = settings
        self.seed = seed

    def fetch(self, bbox: BoundingBox, tags: tuple[str, ...]) -> WitnessSet:
        settings = self.settings
        return fetch_witnesses(
            WitnessQuery(bbox=bbox, tags=tags),
            endpoint=settings.overpass_endpoint,
            cache_dir=settings.cache_dir,
            tag_mapping=load_tag_mapping(settings.osm_tags_file),
            timeout=settings.request_timeout,
            max_retries=settings.max_retries,
            backoff_factor=settings.backoff_factor,
        )

    def witnesses_for(
        self,
        landmarks: LandmarkSet,
        witnesses_path: str | None,
        fetch: bool,
        bbox: BoundingBox | None,
    ) -> WitnessSet:
        if witnesses_path is not None:
            return load_witnesses(witnesses_path)
        if fetch:
            return self.fetch(bbox or buffered_bbox(list(landmarks.points)), DEFAULT_TAGS)
        raise InputError("Give a witness file with --witnesses or pass --fetch.")


pass_environment = click.make_pass_decorator(Environment)


def exit_on_error(func: Callable[P, T]) -> Callable[P, T]:
    """Report library errors on stderr and exit 2 for fetch failures, 1 otherwise."""

    @wraps(func)
    def wrapper(*args: P.args, **kwargs: P.kwargs) -> T:
        try:
            return func(*args, **kwargs)
        except FetchError as e:
            click.echo(f"Error: {e}", err=True)
            raise click.exceptions.Exit(EXIT_FETCH_ERROR) from e
        except (CoolgapError, FileNotFoundError, ValidationError, ValueError) as e:
            click.echo(f"Error: {e}", err=True)
            raise click.exceptions.Exit(EXIT_INPUT_ERROR) from e

    return wrapper


def parse_bbox(
    ctx: click.Context, param: click.Parameter, value: str | None
) -> BoundingBox | None:
    if value is None:
        return None
    try:
        sw_lon, sw_lat, ne_lon, ne_lat = (float(v) for v in value.split(","))
        return BoundingBox.from_corners(sw_lon, sw_lat, ne_lon, ne_lat)
    except (ValueError, CoolgapError) as e:
        raise click.BadParameter(
            f"expected sw_lon,sw_lat,ne_lon,ne_lat ({e})", ctx=ctx, param=param
        ) from e


bbox_option = click.option(
    "--bbox",
    default=None,
    callback=parse_bbox,
    help="Explicit box as sw_lon,sw_lat,ne_lon,ne_lat instead of the buffered box.",
)


@click.group()
@click.option("--cache-dir", default=None, help="Directory for cached OSM responses.")
@click.option("--endpoint", default=None, help="Overpass API endpoint.")
@click.option("--max-dim", type=int, default=None, help="Largest simplex dimension.")
@click.option("--top-k", type=int, default=None, help="Length of top-k rankings.")
@click.option("--seed", type=int, default=0, help="Seed for synthetic witnesses.")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Logging level (logs go to stderr).",
)
@click.option(
    "--log-format", type=click.Choice(["text", "json"]), default=None, help="Log format."
)
@click.pass_context
def cli(
    ctx: click.Context,
    cache_dir: str | None,
    endpoint: str | None,
    max_dim: int | None,
    top_k: int | None,
    seed: int,
    log_level: str | None,
    log_format: str | None,
) -> None:
    """Cooling-center coverage gaps from persistent homology, and a heat
    vulnerability index for comparison.

    Settings come from these flags, COOLGAP_* environment variables, a .env
    file, and a coolgap.json config file, in that order.

    Common examples:

    # Analyze block centroids against a witness CSV
    > coolgap analyze blocks.geojson --witnesses centers.csv --out out/austin

    # Fetch cooling-center candidates from OpenStreetMap, then analyze
    > coolgap analyze blocks.geojson --fetch --out out/austin

    # Score tracts with the heat vulnerability index
    > coolgap hvi tracts.csv --out out/austin

    # Compare several cities
    > coolgap summary out/austin out/miami
    """
    overrides: dict[str, Any] = {
        "cache_dir": cache_dir,
        "overpass_endpoint": endpoint,
        "max_dim": max_dim,
        "top_k": top_k,
        "log_level": log_level.upper() if log_level else None,
        "log_format": log_format,
    }
    try:
        settings = Settings(**{k: v for k, v in overrides.items() if v is not None})
    except ValidationError as e:
        raise InputError(str(e)) from e
    init_logging(settings.log_level, settings.log_format)
    ctx.obj = Environment(settings, seed)


@cli.command()
@pass_environment
@click.argument("regions")
@click.option("--witnesses", "witnesses_path", default=None, help="Witness CSV or GeoJSON.")
@click.option("--fetch", is_flag=True, help="Fetch witnesses from OpenStreetMap.")
@bbox_option
@click.option("--demographics", default=None, help="Tract demographics CSV.")
@click.option("--city", default="", help="City label carried into the outputs.")
@click.option("--id-property", default="id", help="Feature property holding the id.")
@click.option("--out", "out_dir", required=True, help="Output directory.")
@exit_on_error
def analyze(
    environment: Environment,
    regions: str,
    witnesses_path: str | None,
    fetch: bool,
    bbox: BoundingBox | None,
    demographics: str | None,
    city: str,
    id_property: str,
    out_dir: str,
) -> None:
    """Persistence pairs, death-value map layers and top-k rankings.

    Writes pairs.csv, deaths_dim0.geojson, deaths_dim1.geojson, top_k.geojson
    and summary.json; with --demographics also hvi.csv and top_k_hvi.csv.
    """
    settings = environment.settings
    landmarks = load_regions(regions, id_property=id_property)
    witnesses = environment.witnesses_for(landmarks, witnesses_path, fetch, bbox)
    tracts = load_demographics(demographics) if demographics else None
    report = run_analysis(
        landmarks,
        witnesses,
        max_dim=settings.max_dim,
        k=settings.top_k,
        tracts=tracts,
        city=city or PurePosixPath(regions).stem,
        max_workers=settings.workers,
    )
    outputs = render_analysis(report)
    write_outputs(outputs, out_dir)
    click.echo(f"Wrote {len(outputs)} files to {out_dir}")


@cli.command()
@pass_environment
@click.argument("demographics")
@click.option("--out", "out_dir", required=True, help="Output directory.")
@exit_on_error
def hvi(environment: Environment, demographics: str, out_dir: str) -> None:
    """Heat vulnerability scores per tract and the top-k ranking.

    Writes hvi.csv and top_k_hvi.csv, plus vif.csv when at least six tracts
    have complete data.
    """
    tracts = load_demographics(demographics)
    results = score_city(tracts)
    top = rank_tracts(results, environment.settings.top_k)
    outputs = {
        HVI_FILE: render_hvi_csv(results),
        TOP_K_HVI_FILE: render_top_k_hvi_csv(top),
    }
    try:
        entries = vif(tracts)
    except InsufficientData as e:
        logger.warning("Skipped VIF check", extra={"reason": str(e)})
    else:
        lines = ["variable,vif,r_squared,singular"] + [
            f"{entry.variable},{format_float(entry.vif)},{format_float(entry.r_squared)},"
            f"{'true' if entry.singular else 'false'}"
            for entry in entries
        ]
        outputs[VIF_FILE] = "\n".join(lines) + "\n"
    write_outputs(outputs, out_dir)
    click.echo(f"Scored {len(results)} tracts; wrote {len(outputs)} files to {out_dir}")


@cli.command("fetch-witnesses")
@pass_environment
@click.argument("regions", required=False)
@bbox_option
@click.option(
    "--tag",
    "tags",
    multiple=True,
    help="Tag group from the tag mapping; repeat for several (default: all four).",
)
@click.option("--id-property", default="id", help="Feature property holding the id.")
@click.option("--out", "out_path", required=True, help="Witness CSV to write.")
@exit_on_error
def fetch_witnesses_command(
    environment: Environment,
    regions: str | None,
    bbox: BoundingBox | None,
    tags: tuple[str, ...],
    id_property: str,
    out_path: str,
) -> None:
    """Fetch cooling-center candidates from OpenStreetMap into a witness CSV."""
    if bbox is None:
        if regions is None:
            raise InputError("Give a region file or --bbox.")
        bbox = buffered_bbox(list(load_regions(regions, id_property=id_property).points))
    witnesses = environment.fetch(bbox, tags or DEFAULT_TAGS)
    write_text(out_path, witness_csv(witnesses))
    click.echo(f"Wrote {len(witnesses)} witnesses to {out_path}")


@cli.command()
@click.argument("analysis_dirs", nargs=-1, required=True)
@click.option("--out", "out_path", default=None, help="CSV to write instead of stdout.")
@exit_on_error
def summary(analysis_dirs: tuple[str, ...], out_path: str | None) -> None:
    """Box-plot statistics of death values across analysis output directories."""
    summaries: dict[str, dict[int, SummaryStats]] = {}
    for directory in analysis_dirs:
        text = read_text(f"{directory.rstrip('/')}/{SUMMARY_FILE}")
        city = _city_label(text) or PurePosixPath(directory.rstrip("/")).name
        summaries[city] = read_summary_stats(text)
    table = compare_cities(summaries).to_csv(
        index=False, lineterminator="\n", float_format="%.17g"
    )
    if out_path is None:
        click.echo(table, nl=False)
    else:
        write_text(out_path, table)


@cli.command()
@pass_environment
@click.argument("regions")
@click.option("--witnesses", "witnesses_path", required=True, help="Witness CSV or GeoJSON.")
@click.option("--alpha", type=float, required=True, help="Filtration value in km.")
@click.option("--id-property", default="id", help="Feature property holding the id.")
@click.option("--out", "out_path", required=True, help="GeoJSON file to write.")
@exit_on_error
def snapshot(
    environment: Environment,
    regions: str,
    witnesses_path: str,
    alpha: float,
    id_property: str,
    out_path: str,
) -> None:
    """Edges of the witness complex present at one filtration value."""
    if alpha < 0:
        raise InputError("--alpha must be nonnegative.")
    landmarks = load_regions(regions, id_property=id_property)
    witnesses = load_witnesses(witnesses_path)
    complex_ = build_filtered_complex(
        landmarks, witnesses, max_dim=1, max_workers=environment.settings.workers
    )
    document = render_snapshot(complex_, landmarks, alpha)
    write_text(out_path, document)
    click.echo(f"Wrote filtration snapshot at {alpha} km to {out_path}")


@cli.command()
@pass_environment
@click.argument("regions")
@click.option("--count", type=int, required=True, help="Number of witnesses.")
@bbox_option
@click.option("--id-property", default="id", help="Feature property holding the id.")
@click.option("--out", "out_path", required=True, help="Witness CSV to write.")
@exit_on_error
def synthesize(
    environment: Environment,
    regions: str,
    count: int,
    bbox: BoundingBox | None,
    id_property: str,
    out_path: str,
) -> None:
    """Uniformly random witnesses inside a region's buffered box (uses --seed)."""
    if bbox is None:
        bbox = buffered_bbox(list(load_regions(regions, id_property=id_property).points))
    witnesses = random_witnesses(bbox, count, environment.seed)
    write_text(out_path, witness_csv(witnesses))
    click.echo(f"Wrote {len(witnesses)} witnesses to {out_path}")


def _city_label(summary_text: str) -> str:
    city = json.loads(summary_text).get("city", "")
    return city if isinstance(city, str) else ""


if __name__ == "__main__":
    cli()
