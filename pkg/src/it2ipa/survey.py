"""Expert rating ingestion, fuzzy aggregation, and questionnaire psychometrics."""

from __future__ import annotations

import csv
import json
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import numbers
from .errors import InputFileError
from .numbers import IT2TrapFN
from .scale import LinguisticScale, UnknownTermError, lookup

IMPORTANCE = "importance"
PERFORMANCE = "performance"
FACETS = (IMPORTANCE, PERFORMANCE)


class EmptyMatrixError(ValueError):
    """A rating matrix with no factors or no experts."""


class InvalidCountsError(ValueError):
    """Content-validity counts outside 0 <= n_essential <= n_panel, n_panel >= 1."""


class DegenerateDataError(ValueError):
    """A score grid too small or too uniform for a reliability coefficient."""


@dataclass(frozen=True)
class Factor:
    """One survey component: short code, display name, questionnaire dimension."""

    id: str
    name: str
    dimension: str


@dataclass
class RatingMatrix:
    """Dense linguistic ratings, one row per factor, one column per expert."""

    factors: list[Factor]
    experts: list[str]
    importance: list[list[str]]
    performance: list[list[str]]


@dataclass
class FactorProfile:
    """A factor's aggregated fuzzy ratings plus later pipeline stages' results."""

    factor: Factor
    w_fuzzy: IT2TrapFN
    r_fuzzy: IT2TrapFN
    e_w: float | None = None
    e_r: float | None = None
    region: object | None = None


_DIGITS = re.compile(r"(\d+)")


def factor_sort_key(factor_id: str):
    """Natural ordering key so x_2 sorts before x_10."""
    return tuple(int(p) if p.isdigit() else p for p in _DIGITS.split(factor_id))


def aggregate(matrix: RatingMatrix, scale: LinguisticScale) -> list[FactorProfile]:
    """Average the experts' fuzzy ratings per factor and facet.

    Implements the mean operator: the fuzzy sum over experts divided by the
    expert count. Result heights are the minimum across experts.
    """
    if not matrix.factors or not matrix.experts:
        raise EmptyMatrixError("rating matrix needs at least one factor and one expert")

    m = len(matrix.experts)
    profiles = []
    for i, factor in enumerate(matrix.factors):
        means = {}
        for facet, grid in ((IMPORTANCE, matrix.importance), (PERFORMANCE, matrix.performance)):
            row = grid[i]
            if len(row) != m or any(not cell or not cell.strip() for cell in row):
                raise EmptyMatrixError(
                    f"factor {factor.id}: {facet} row is not dense ({len(row)} cells for {m} experts)"
                )
            total = None
            for expert, label in zip(matrix.experts, row):
                try:
                    value = lookup(scale, label)
                except UnknownTermError as exc:
                    raise UnknownTermError(
                        exc.label, exc.vocabulary,
                        context=f"factor {factor.id}, expert {expert}, {facet}",
                    ) from None
                total = value if total is None else numbers.add(total, value)
            means[facet] = numbers.scalar_div(total, m)
        profiles.append(FactorProfile(factor, means[IMPORTANCE], means[PERFORMANCE]))
    return profiles


def cvr(n_essential: int, n_panel: int) -> float:
    """Lawshe content validity ratio: (n_e - N/2) / (N/2), in [-1, 1]."""
    if n_panel < 1 or n_essential < 0 or n_essential > n_panel:
        raise InvalidCountsError(
            f"need 0 <= n_essential <= n_panel and n_panel >= 1, got ({n_essential}, {n_panel})"
        )
    half = n_panel / 2.0
    return (n_essential - half) / half


def cronbach_alpha(scores) -> float:
    """Internal-consistency coefficient over a respondents x items grid.

    Uses the variance form with sample (N-1) variances. Requires at least
    two respondents, two items, and nonzero total-score variance.
    """
    try:
        grid = np.asarray(scores, dtype=float)
    except (TypeError, ValueError) as exc:
        raise DegenerateDataError(f"scores grid is not numeric and rectangular: {exc}") from exc
    if grid.ndim != 2 or grid.shape[0] < 2 or grid.shape[1] < 2:
        raise DegenerateDataError(
            f"need a grid of >= 2 respondents x >= 2 items, got shape {grid.shape}"
        )
    item_variances = grid.var(axis=0, ddof=1)
    total_variance = grid.sum(axis=1).var(ddof=1)
    if total_variance <= 0:
        raise DegenerateDataError("total-score variance is zero")
    k = grid.shape[1]
    return float(k / (k - 1) * (1.0 - item_variances.sum() / total_variance))


# ---------------------------------------------------------------------------
# Input files

def _data_rows(path: Path):
    """Yield (1-based line number, row) from a CSV, skipping comments/blanks."""
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputFileError(str(path), f"cannot read file: {exc}") from exc
    rows = []
    for lineno, row in enumerate(csv.reader(text.splitlines()), start=1):
        if not row or (row[0].lstrip().startswith("#")):
            continue
        if all(not cell.strip() for cell in row):
            continue
        rows.append((lineno, [cell.strip() for cell in row]))
    return rows


def _split_header(path: Path, header: list[str], lineno: int, tail: list[str]) -> tuple[dict, list[str]]:
    """Map optional leading columns, return (column index map, remaining headers)."""
    lowered = [h.lower() for h in header]
    if not lowered or lowered[0] != "factor_id":
        raise InputFileError(str(path), "header must start with 'factor_id'", row=lineno)
    idx = {"factor_id": 0}
    pos = 1
    for optional in ("name", "dimension"):
        if pos < len(lowered) and lowered[pos] == optional:
            idx[optional] = pos
            pos += 1
    for required in tail:
        if pos >= len(lowered) or lowered[pos] != required:
            raise InputFileError(
                str(path), f"expected column {required!r} at position {pos + 1}", row=lineno
            )
        idx[required] = pos
        pos += 1
    return idx, header[pos:]


def parse_ratings(path: str | Path) -> RatingMatrix:
    """Read a linguistic ratings file.

    Layout: header ``factor_id[,name][,dimension],facet,<expert>...``, then one
    row per (factor, facet) with one scale label per expert. Every factor must
    appear with both facets and every cell must be filled.
    """
    path = Path(path)
    rows = _data_rows(path)
    if not rows:
        raise InputFileError(str(path), "empty ratings file: no header row")
    header_line, header = rows[0]
    idx, experts = _split_header(path, header, header_line, ["facet"])
    if not experts:
        raise InputFileError(str(path), "no expert columns after 'facet'", row=header_line)
    if len(rows) == 1:
        raise InputFileError(str(path), "empty ratings file: no data rows")

    factors: list[Factor] = []
    by_id: dict[str, dict[str, list[str]]] = {}
    for lineno, row in rows[1:]:
        if len(row) != len(header):
            raise InputFileError(
                str(path), f"expected {len(header)} cells, found {len(row)}", row=lineno
            )
        fid = row[idx["factor_id"]]
        facet = row[idx["facet"]].lower()
        if facet not in FACETS:
            raise InputFileError(
                str(path), f"facet must be one of {FACETS}, got {row[idx['facet']]!r}", row=lineno
            )
        cells = row[len(header) - len(experts):]
        if any(not c for c in cells):
            raise InputFileError(str(path), f"factor {fid}: empty {facet} cell", row=lineno)
        if fid not in by_id:
            name = row[idx["name"]] if "name" in idx else fid
            dimension = row[idx["dimension"]] if "dimension" in idx else "general"
            factors.append(Factor(fid, name or fid, dimension or "general"))
            by_id[fid] = {}
        if facet in by_id[fid]:
            raise InputFileError(str(path), f"duplicate {facet} row for factor {fid}", row=lineno)
        by_id[fid][facet] = cells

    for factor in factors:
        missing = [f for f in FACETS if f not in by_id[factor.id]]
        if missing:
            raise InputFileError(str(path), f"factor {factor.id}: missing {missing[0]} row")

    return RatingMatrix(
        factors=factors,
        experts=list(experts),
        importance=[by_id[f.id][IMPORTANCE] for f in factors],
        performance=[by_id[f.id][PERFORMANCE] for f in factors],
    )


def parse_aggregated(path: str | Path) -> list[FactorProfile]:
    """Read pre-aggregated fuzzy ratings, one factor per row.

    Layout: header ``factor_id[,name][,dimension],importance,performance`` with
    both fuzzy values in the canonical textual form. Values must be
    structurally valid numbers.
    """
    path = Path(path)
    rows = _data_rows(path)
    if not rows:
        raise InputFileError(str(path), "empty aggregated file: no header row")
    header_line, header = rows[0]
    idx, extra = _split_header(path, header, header_line, [IMPORTANCE, PERFORMANCE])
    if extra:
        raise InputFileError(
            str(path), f"unexpected trailing columns: {extra}", row=header_line
        )
    if len(rows) == 1:
        raise InputFileError(str(path), "empty aggregated file: no data rows")

    profiles = []
    seen: set[str] = set()
    for lineno, row in rows[1:]:
        if len(row) != len(header):
            raise InputFileError(
                str(path), f"expected {len(header)} cells, found {len(row)}", row=lineno
            )
        fid = row[idx["factor_id"]]
        if fid in seen:
            raise InputFileError(str(path), f"duplicate factor id {fid}", row=lineno)
        seen.add(fid)
        name = row[idx["name"]] if "name" in idx else fid
        dimension = row[idx["dimension"]] if "dimension" in idx else "general"
        values = {}
        for facet in FACETS:
            try:
                value = IT2TrapFN.from_text(row[idx[facet]])
            except ValueError as exc:
                raise InputFileError(str(path), f"factor {fid} {facet}: {exc}", row=lineno) from exc
            problems = value.violations()
            if problems:
                raise InputFileError(
                    str(path), f"factor {fid} {facet}: {'; '.join(problems)}", row=lineno
                )
            values[facet] = value
        profiles.append(FactorProfile(
            Factor(fid, name or fid, dimension or "general"),
            values[IMPORTANCE], values[PERFORMANCE],
        ))
    return profiles


@dataclass
class Psychometrics:
    """Optional questionnaire-validation inputs: CVR counts and score grids."""

    panel_size: int = 0
    essential_counts: dict[str, int] = field(default_factory=dict)
    dimension_scores: dict[str, list[list[float]]] = field(default_factory=dict)
    cvr_threshold: float = 0.59
    alpha_threshold: float = 0.7


def load_psychometrics(path: str | Path) -> Psychometrics:
    """Read the psychometrics JSON document (both sections optional)."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except OSError as exc:
        raise InputFileError(str(path), f"cannot read file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputFileError(str(path), f"invalid JSON: {exc}", row=exc.lineno) from exc
    if not isinstance(doc, dict):
        raise InputFileError(str(path), "document must be a JSON object")

    result = Psychometrics()
    content = doc.get("content_validity", {})
    if content:
        try:
            result.panel_size = int(content["panel_size"])
            result.essential_counts = {
                str(k): int(v) for k, v in dict(content["essential_counts"]).items()
            }
        except (KeyError, TypeError, ValueError) as exc:
            raise InputFileError(
                str(path), f"content_validity needs 'panel_size' and 'essential_counts': {exc}"
            ) from exc
        if "threshold" in content:
            result.cvr_threshold = float(content["threshold"])

    reliability = doc.get("reliability", {})
    if reliability:
        grids = reliability.get("dimensions")
        if not isinstance(grids, dict):
            raise InputFileError(str(path), "reliability needs a 'dimensions' object")
        try:
            result.dimension_scores = {
                str(dim): [[float(v) for v in row] for row in grid]
                for dim, grid in grids.items()
            }
        except (TypeError, ValueError) as exc:
            raise InputFileError(str(path), f"reliability grids must be numeric: {exc}") from exc
        if "threshold" in reliability:
            result.alpha_threshold = float(reliability["threshold"])
    return result
