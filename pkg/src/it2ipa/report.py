"""End-to-end pipeline: input files to report tables, map, and notes."""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from . import fixtures, ipamap, scoring
from .defuzz import dtrat
from .errors import InputFileError
from .ipamap import MapThresholds
from .scale import LinguisticScale, default_scale, load_scale
from .scoring import RankedFactor
from .survey import (
    FactorProfile,
    Psychometrics,
    cronbach_alpha,
    cvr,
    DegenerateDataError,
    InvalidCountsError,
    aggregate,
    factor_sort_key,
    load_psychometrics,
    parse_aggregated,
    parse_ratings,
)

STRUCTURED = "structured"
DELIMITED = "delimited"
SVG_MAP = "svg-map"
REPORT_FORMATS = (STRUCTURED, DELIMITED, SVG_MAP)

SCHEMA = "it2ipa-report/1"
DISPLAY_DECIMALS = 3


class IoFailureError(OSError):
    """A report file could not be written."""

    def __init__(self, path: Path, cause: Exception):
        self.path = Path(path)
        super().__init__(f"cannot write {path}: {cause}")


@dataclass
class PipelineConfig:
    """Everything the pipeline needs besides the input files."""

    scale_path: str | None = None
    thresholds: MapThresholds = field(default_factory=MapThresholds)
    partition_mode: str = ipamap.REGION_MODE
    cffs_mode: str = scoring.AS_COMPUTED
    out_dir: str | None = None
    formats: tuple[str, ...] = (STRUCTURED,)

    def validate(self) -> None:
        if self.partition_mode not in (ipamap.REGION_MODE, ipamap.COMPARISON_MODE):
            raise ValueError(f"unknown partition mode: {self.partition_mode!r}")
        if self.cffs_mode not in scoring.FAILURE_MODES:
            raise ValueError(f"unknown failure-score mode: {self.cffs_mode!r}")
        unknown = [f for f in self.formats if f not in REPORT_FORMATS]
        if unknown:
            raise ValueError(f"unknown report formats: {unknown}")


@dataclass
class Report:
    """All pipeline results. ``to_structured`` mirrors the emitted JSON schema."""

    config: PipelineConfig
    scale: LinguisticScale
    scale_source: str
    input_source: str
    used_bundled_input: bool
    profiles: list[FactorProfile]
    failure_candidates: list[FactorProfile]
    success_candidates: list[FactorProfile]
    balanced: list[FactorProfile]
    success_ranking: list[RankedFactor]
    failure_ranking: list[RankedFactor]
    psychometrics: dict | None
    notes: list[str]

    def map_document(self, format: str) -> str:
        return ipamap.render_map(self.profiles, self.config.thresholds, format)

    def to_structured(self) -> dict:
        aggregated = [
            {
                "factor": p.factor.id,
                "name": p.factor.name,
                "dimension": p.factor.dimension,
                "importance": p.w_fuzzy.to_text(),
                "performance": p.r_fuzzy.to_text(),
            }
            for p in self.profiles
        ]
        defuzzified = [
            {
                "factor": p.factor.id,
                "importance": p.e_w,
                "performance": p.e_r,
                "importance_band": p.region.importance_band,
                "performance_band": p.region.performance_band,
                "zone": p.region.zone,
            }
            for p in self.profiles
        ]

        def ranking_rows(ranking: list[RankedFactor]) -> list[dict]:
            rows = []
            for position, rf in enumerate(ranking, start=1):
                row = {
                    "position": position,
                    "factor": rf.factor.id,
                    "rank": rf.rank,
                    "value": rf.score.value.to_text(),
                    "breakdown": dataclasses.asdict(rf.breakdown),
                }
                if rf.score.mode is not None:
                    row["mode"] = rf.score.mode
                rows.append(row)
            return rows

        scores = {
            "success": [
                {"factor": rf.factor.id, "value": rf.score.value.to_text()}
                for rf in self.success_ranking
            ],
            "failure": [
                {"factor": rf.factor.id, "value": rf.score.value.to_text(), "mode": rf.score.mode}
                for rf in self.failure_ranking
            ],
        }
        return {
            "schema": SCHEMA,
            "config": {
                "scale": self.scale_source,
                "thresholds": [self.config.thresholds.t1, self.config.thresholds.t2],
                "partition_mode": self.config.partition_mode,
                "cffs_mode": self.config.cffs_mode,
            },
            "input": {
                "source": self.input_source,
                "bundled": self.used_bundled_input,
                "factor_count": len(self.profiles),
            },
            "aggregated": aggregated,
            "defuzzified": defuzzified,
            "partition": {
                "mode": self.config.partition_mode,
                "failure_candidates": [p.factor.id for p in self.failure_candidates],
                "success_candidates": [p.factor.id for p in self.success_candidates],
                "balanced": [p.factor.id for p in self.balanced],
            },
            "scores": scores,
            "rankings": {
                "success": ranking_rows(self.success_ranking),
                "failure": ranking_rows(self.failure_ranking),
            },
            "map": json.loads(self.map_document(ipamap.STRUCTURED_FORMAT)),
            "psychometrics": self.psychometrics if self.psychometrics else {"provided": False},
            "notes": list(self.notes),
        }


def _summarize_psychometrics(data: Psychometrics, source: str) -> dict:
    summary: dict = {"provided": True, "source": source}
    if data.essential_counts:
        components = []
        for cid in sorted(data.essential_counts, key=factor_sort_key):
            count = data.essential_counts[cid]
            try:
                value = cvr(count, data.panel_size)
            except InvalidCountsError as exc:
                raise InputFileError(source, f"component {cid}: {exc}") from exc
            components.append({
                "id": cid,
                "essential": count,
                "cvr": value,
                "passes": value > data.cvr_threshold,
            })
        summary["content_validity"] = {
            "panel_size": data.panel_size,
            "threshold": data.cvr_threshold,
            "components": components,
        }
    if data.dimension_scores:
        dimensions = []
        for name in sorted(data.dimension_scores):
            grid = data.dimension_scores[name]
            try:
                alpha = cronbach_alpha(grid)
            except DegenerateDataError as exc:
                raise InputFileError(source, f"dimension {name!r}: {exc}") from exc
            dimensions.append({
                "dimension": name,
                "respondents": len(grid),
                "items": len(grid[0]) if grid else 0,
                "alpha": alpha,
                "passes": alpha >= data.alpha_threshold,
            })
        summary["reliability"] = {
            "threshold": data.alpha_threshold,
            "dimensions": dimensions,
        }
    return summary


def _endpoint_deviation(computed, reference) -> float:
    pairs = zip(
        computed.upper.endpoints + computed.lower.endpoints,
        reference.upper.endpoints + reference.lower.endpoints,
    )
    return max(abs(c - r) for c, r in pairs)


def _build_notes(report: Report) -> list[str]:
    notes = []
    if report.config.cffs_mode == scoring.AS_COMPUTED:
        notes.append(
            "Failure scores use the as_computed rule (performance / importance), "
            "the rule the bundled reference failure tuples follow."
        )
    else:
        notes.append(
            "Failure scores use the as_written rule (importance x (1 - performance)). "
            "The bundled reference failure tuples instead match performance / importance, "
            "so values here differ from that reference."
        )
    notes.append(
        "Rank values are freshly computed with the Chen-Lee formula. The bundled "
        "reference rank values are not reproducible from that formula applied to the "
        "reference score tuples and serve for order comparison only."
    )
    if not report.used_bundled_input:
        return notes

    reference = fixtures.reference_scores()
    by_id = {p.factor.id: p for p in report.profiles}

    deviations = [
        _endpoint_deviation(
            scoring.success_score(by_id[fid].factor, by_id[fid].w_fuzzy, by_id[fid].r_fuzzy).value,
            ref,
        )
        for fid, ref in reference["success"].items()
        if fid in by_id
    ]
    if deviations:
        notes.append(
            f"Success score tuples vs reference (8 factors): "
            f"max endpoint deviation {max(deviations):.4f}."
        )
    deviations = [
        _endpoint_deviation(
            scoring.failure_score(
                by_id[fid].factor, by_id[fid].w_fuzzy, by_id[fid].r_fuzzy,
                mode=report.config.cffs_mode,
            ).value,
            ref,
        )
        for fid, ref in reference["failure"].items()
        if fid in by_id
    ]
    if deviations:
        agreement = "within" if max(deviations) <= 0.005 else "OUTSIDE"
        notes.append(
            f"Failure score tuples ({report.config.cffs_mode}) vs reference (7 factors): "
            f"max endpoint deviation {max(deviations):.4f} ({agreement} the 0.005 "
            f"reproduction tolerance)."
        )

    def ids(profiles):
        return {p.factor.id for p in profiles}

    ref_success = set(reference["success"])
    ref_failure = set(reference["failure"])
    computed_failure, computed_success = ids(report.failure_candidates), ids(report.success_candidates)
    if computed_failure != ref_failure or computed_success != ref_success:
        unlisted = sorted(
            ids(report.profiles) - ref_success - ref_failure, key=factor_sort_key
        )
        notes.append(
            f"The reference success/failure membership lists are not derivable from the "
            f"{report.config.partition_mode} partition rule on the defuzzified values: "
            f"computed failure candidates {sorted(computed_failure, key=factor_sort_key)} vs "
            f"reference {sorted(ref_failure, key=factor_sort_key)}; computed success candidates "
            f"{sorted(computed_success, key=factor_sort_key)} vs reference "
            f"{sorted(ref_success, key=factor_sort_key)}. Factors absent from both reference "
            f"lists: {unlisted}."
        )
    for kind, ranking in (("success", report.success_ranking), ("failure", report.failure_ranking)):
        ref_order = [fid for fid, _ in fixtures.reference_rankings()[kind]]
        computed_order = [rf.factor.id for rf in ranking]
        if computed_order and computed_order != ref_order:
            notes.append(
                f"Computed {kind} ranking order {computed_order} differs from the "
                f"reference order {ref_order}."
            )
    return notes


def run_pipeline(
    config: PipelineConfig,
    ratings_path: str | Path | None = None,
    aggregated_path: str | Path | None = None,
    psychometrics_path: str | Path | None = None,
) -> Report:
    """Run the full pipeline and return the assembled report.

    Exactly one of ``ratings_path`` / ``aggregated_path`` may be given; with
    neither, the bundled reference dataset is used. The result is a pure
    function of the inputs and the configuration.
    """
    config.validate()
    if ratings_path is not None and aggregated_path is not None:
        raise ValueError("give either a ratings file or an aggregated file, not both")

    if config.scale_path:
        scale = load_scale(config.scale_path)
        scale_source = str(config.scale_path)
    else:
        scale = default_scale()
        scale_source = "builtin"

    used_bundled = False
    if ratings_path is not None:
        matrix = parse_ratings(ratings_path)
        profiles = aggregate(matrix, scale)
        input_source = str(ratings_path)
    else:
        if aggregated_path is None:
            aggregated_path = fixtures.aggregated_path()
        profiles = parse_aggregated(aggregated_path)
        input_source = str(aggregated_path)
        used_bundled = Path(aggregated_path).resolve() == fixtures.aggregated_path().resolve()

    profiles.sort(key=lambda p: factor_sort_key(p.factor.id))
    for profile in profiles:
        profile.e_w = dtrat(profile.w_fuzzy)
        profile.e_r = dtrat(profile.r_fuzzy)
        profile.region = ipamap.place(profile.e_w, profile.e_r, config.thresholds)

    failure_candidates, success_candidates, balanced = ipamap.partition(
        profiles, config.thresholds, config.partition_mode
    )
    success_scores = [
        scoring.success_score(p.factor, p.w_fuzzy, p.r_fuzzy) for p in success_candidates
    ]
    failure_scores = [
        scoring.failure_score(p.factor, p.w_fuzzy, p.r_fuzzy, mode=config.cffs_mode)
        for p in failure_candidates
    ]

    psychometrics = None
    if psychometrics_path is not None:
        data = load_psychometrics(psychometrics_path)
        psychometrics = _summarize_psychometrics(data, str(psychometrics_path))

    report = Report(
        config=config,
        scale=scale,
        scale_source=scale_source,
        input_source=input_source,
        used_bundled_input=used_bundled,
        profiles=profiles,
        failure_candidates=failure_candidates,
        success_candidates=success_candidates,
        balanced=balanced,
        success_ranking=scoring.rank_order(success_scores),
        failure_ranking=scoring.rank_order(failure_scores),
        psychometrics=psychometrics,
        notes=[],
    )
    report.notes = _build_notes(report)
    return report


# ---------------------------------------------------------------------------
# Emission

def _write_atomic(path: Path, content: str) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
        try:
            with os.fdopen(fd, "w", newline="") as handle:
                handle.write(content)
            os.replace(tmp_name, path)
        except BaseException:
            os.unlink(tmp_name)
            raise
    except OSError as exc:
        raise IoFailureError(path, exc) from exc


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _crisp(value: float) -> str:
    return f"{value:.{DISPLAY_DECIMALS}f}"


def _delimited_files(report: Report) -> dict[str, str]:
    nd = DISPLAY_DECIMALS
    files = {
        "aggregated.csv": _csv_text(
            ["factor_id", "name", "dimension", "importance", "performance"],
            [
                [p.factor.id, p.factor.name, p.factor.dimension,
                 p.w_fuzzy.to_text(nd), p.r_fuzzy.to_text(nd)]
                for p in report.profiles
            ],
        ),
        "defuzzified.csv": _csv_text(
            ["factor_id", "name", "dimension", "importance", "performance",
             "importance_band", "performance_band", "zone"],
            [
                [p.factor.id, p.factor.name, p.factor.dimension,
                 _crisp(p.e_w), _crisp(p.e_r),
                 p.region.importance_band, p.region.performance_band, p.region.zone]
                for p in report.profiles
            ],
        ),
        "map.txt": report.map_document(ipamap.TEXT_FORMAT),
        "notes.txt": "".join(f"{i}. {note}\n" for i, note in enumerate(report.notes, start=1)),
    }
    for kind, ranking in (("success", report.success_ranking), ("failure", report.failure_ranking)):
        files[f"scores_{kind}.csv"] = _csv_text(
            ["factor_id", "kind", "mode", "value"],
            [
                [rf.factor.id, kind, rf.score.mode or "", rf.score.value.to_text(nd)]
                for rf in sorted(ranking, key=lambda rf: factor_sort_key(rf.factor.id))
            ],
        )
        breakdown_fields = [f.name for f in dataclasses.fields(scoring.RankBreakdown) if f.name != "rank"]
        files[f"ranking_{kind}.csv"] = _csv_text(
            ["position", "factor_id", "rank"] + breakdown_fields,
            [
                [str(i), rf.factor.id, f"{rf.rank:.6f}"]
                + [f"{getattr(rf.breakdown, name):.6f}" for name in breakdown_fields]
                for i, rf in enumerate(ranking, start=1)
            ],
        )
    if report.psychometrics:
        rows = []
        content = report.psychometrics.get("content_validity")
        if content:
            for component in content["components"]:
                rows.append([
                    "cvr", component["id"], f"{component['cvr']:.6f}",
                    f"{content['threshold']:.6g}", str(component["passes"]).lower(),
                ])
        reliability = report.psychometrics.get("reliability")
        if reliability:
            for dim in reliability["dimensions"]:
                rows.append([
                    "cronbach_alpha", dim["dimension"], f"{dim['alpha']:.6f}",
                    f"{reliability['threshold']:.6g}", str(dim["passes"]).lower(),
                ])
        files["psychometrics.csv"] = _csv_text(
            ["metric", "id", "value", "threshold", "passes"], rows
        )
    return files


def emit(report: Report, out_dir: str | Path | None = None, formats=None) -> list[Path]:
    """Write the report to ``out_dir`` in the requested formats.

    Files are written atomically (temp file + rename). Returns the written
    paths in a fixed order.
    """
    out = Path(out_dir if out_dir is not None else report.config.out_dir or ".")
    wanted = tuple(formats if formats is not None else report.config.formats)
    unknown = [f for f in wanted if f not in REPORT_FORMATS]
    if unknown:
        raise ValueError(f"unknown report formats: {unknown}")

    written: list[Path] = []
    for format in dict.fromkeys(wanted):
        if format == STRUCTURED:
            path = out / "report.json"
            _write_atomic(path, json.dumps(report.to_structured(), indent=2) + "\n")
            written.append(path)
        elif format == DELIMITED:
            for name, content in _delimited_files(report).items():
                path = out / name
                _write_atomic(path, content)
                written.append(path)
        elif format == SVG_MAP:
            path = out / "map.svg"
            _write_atomic(path, report.map_document(ipamap.SVG_FORMAT))
            written.append(path)
    return written
