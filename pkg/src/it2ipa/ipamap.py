"""The 3x3 importance-performance map: banding, zoning, and rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .survey import FactorProfile, factor_sort_key

BANDS = ("low", "medium", "high")
WEAKNESS = "weakness"
BALANCED = "balanced"
STRENGTH = "strength"

REGION_MODE = "region"
COMPARISON_MODE = "comparison"

TEXT_FORMAT = "text"
SVG_FORMAT = "svg"
STRUCTURED_FORMAT = "structured"


class OutOfRangeError(ValueError):
    """A crisp coordinate outside [0, 1]."""


class UnsupportedFormatError(ValueError):
    """An unknown map rendering format."""


@dataclass(frozen=True)
class MapThresholds:
    """Cut points splitting each axis into low / medium / high bands."""

    t1: float = 1.0 / 3.0
    t2: float = 2.0 / 3.0

    def __post_init__(self):
        if not (0.0 < self.t1 < self.t2 < 1.0):
            raise ValueError(f"need 0 < t1 < t2 < 1, got ({self.t1}, {self.t2})")


@dataclass(frozen=True)
class MapRegion:
    """One of the nine map cells plus its diagonal zone."""

    importance_band: str
    performance_band: str
    zone: str


def band(value: float, thresholds: MapThresholds) -> str:
    """Band assignment over [0, t1), [t1, t2), [t2, 1]."""
    if not (0.0 <= value <= 1.0):
        raise OutOfRangeError(f"map coordinates must lie in [0, 1], got {value}")
    if value < thresholds.t1:
        return "low"
    if value < thresholds.t2:
        return "medium"
    return "high"


def _zone_of(importance_band: str, performance_band: str) -> str:
    gap = BANDS.index(importance_band) - BANDS.index(performance_band)
    return WEAKNESS if gap > 0 else (BALANCED if gap == 0 else STRENGTH)


def place(e_w: float, e_r: float, thresholds: MapThresholds) -> MapRegion:
    """Locate a factor cell from its crisp importance and performance.

    Cells above the main diagonal (importance band exceeding performance
    band) are weaknesses, the diagonal is balanced, below is strength.
    """
    importance_band = band(e_w, thresholds)
    performance_band = band(e_r, thresholds)
    return MapRegion(importance_band, performance_band, _zone_of(importance_band, performance_band))


def partition(
    profiles: list[FactorProfile],
    thresholds: MapThresholds,
    mode: str = REGION_MODE,
) -> tuple[list[FactorProfile], list[FactorProfile], list[FactorProfile]]:
    """Split profiles into (failure candidates, success candidates, balanced).

    ``region`` mode follows the map zone; ``comparison`` mode compares the
    crisp values directly (importance above performance means a failure
    candidate). Output lists are ordered by factor id.
    """
    if mode not in (REGION_MODE, COMPARISON_MODE):
        raise ValueError(f"mode must be '{REGION_MODE}' or '{COMPARISON_MODE}', got {mode!r}")
    failure, success, balanced = [], [], []
    for profile in sorted(profiles, key=lambda p: factor_sort_key(p.factor.id)):
        if profile.e_w is None or profile.e_r is None:
            raise ValueError(f"factor {profile.factor.id}: profile lacks crisp values")
        if mode == REGION_MODE:
            zone = place(profile.e_w, profile.e_r, thresholds).zone
        else:
            diff = profile.e_w - profile.e_r
            zone = WEAKNESS if diff > 0 else (BALANCED if diff == 0 else STRENGTH)
        target = failure if zone == WEAKNESS else (balanced if zone == BALANCED else success)
        target.append(profile)
    return failure, success, balanced


def _cells(profiles, thresholds):
    cells: dict[tuple[str, str], list[FactorProfile]] = {
        (i, p): [] for i in BANDS for p in BANDS
    }
    for profile in sorted(profiles, key=lambda p: factor_sort_key(p.factor.id)):
        region = place(profile.e_w, profile.e_r, thresholds)
        cells[(region.importance_band, region.performance_band)].append(profile)
    return cells


def render_map(
    profiles: list[FactorProfile],
    thresholds: MapThresholds,
    format: str = TEXT_FORMAT,
) -> str:
    """Render the map as ``text``, ``svg``, or ``structured`` (JSON) document.

    Output is a pure function of the inputs, so identical calls give
    byte-identical documents.
    """
    if format == TEXT_FORMAT:
        return _render_text(profiles, thresholds)
    if format == SVG_FORMAT:
        return _render_svg(profiles, thresholds)
    if format == STRUCTURED_FORMAT:
        return _render_structured(profiles, thresholds)
    raise UnsupportedFormatError(f"unsupported map format: {format!r}")


def _render_text(profiles, thresholds) -> str:
    cells = _cells(profiles, thresholds)
    content = {
        key: " ".join(p.factor.id for p in members) for key, members in cells.items()
    }
    row_label = "importance"
    widths = {
        p: max([len(p)] + [len(content[(i, p)]) for i in BANDS]) for p in BANDS
    }
    label_width = max(len(row_label), max(len(b) for b in BANDS))

    lines = []
    header = " | ".join([row_label.ljust(label_width)] + [p.ljust(widths[p]) for p in BANDS])
    lines.append(header)
    lines.append("-+-".join(["-" * label_width] + ["-" * widths[p] for p in BANDS]))
    for importance_band in reversed(BANDS):
        row = [importance_band.ljust(label_width)]
        row += [content[(importance_band, p)].ljust(widths[p]) for p in BANDS]
        lines.append(" | ".join(row))
    lines.append("")
    lines.append(f"columns: performance bands (cuts at {thresholds.t1:.6g}, {thresholds.t2:.6g})")
    return "\n".join(lines) + "\n"


def _render_structured(profiles, thresholds) -> str:
    cells = _cells(profiles, thresholds)
    regions = []
    for importance_band in reversed(BANDS):
        for performance_band in BANDS:
            members = cells[(importance_band, performance_band)]
            zone = _zone_of(importance_band, performance_band)
            regions.append({
                "importance_band": importance_band,
                "performance_band": performance_band,
                "zone": zone,
                "factors": [
                    {"id": p.factor.id, "importance": p.e_w, "performance": p.e_r}
                    for p in members
                ],
            })
    doc = {"thresholds": [thresholds.t1, thresholds.t2], "regions": regions}
    return json.dumps(doc, indent=2) + "\n"


def _render_svg(profiles, thresholds) -> str:
    size, margin = 500.0, 70.0
    width = height = size + 2 * margin

    def sx(v: float) -> str:
        return f"{margin + v * size:.2f}"

    def sy(v: float) -> str:
        return f"{margin + (1.0 - v) * size:.2f}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        "<style>text{font-family:monospace;font-size:12px;fill:#222}"
        ".grid{stroke:#999;stroke-dasharray:4 3}.frame{stroke:#222;fill:none}"
        ".pt{fill:#1a5fb4}.diag{stroke:#ccc}</style>",
        f'<rect class="frame" x="{margin:.2f}" y="{margin:.2f}" '
        f'width="{size:.2f}" height="{size:.2f}"/>',
        f'<line class="diag" x1="{sx(0)}" y1="{sy(0)}" x2="{sx(1)}" y2="{sy(1)}"/>',
    ]
    for cut in (thresholds.t1, thresholds.t2):
        parts.append(f'<line class="grid" x1="{sx(cut)}" y1="{sy(0)}" x2="{sx(cut)}" y2="{sy(1)}"/>')
        parts.append(f'<line class="grid" x1="{sx(0)}" y1="{sy(cut)}" x2="{sx(1)}" y2="{sy(cut)}"/>')

    band_centers = {
        "low": thresholds.t1 / 2,
        "medium": (thresholds.t1 + thresholds.t2) / 2,
        "high": (thresholds.t2 + 1.0) / 2,
    }
    for name, center in band_centers.items():
        parts.append(
            f'<text x="{sx(center)}" y="{height - 30:.2f}" text-anchor="middle">{name}</text>'
        )
        parts.append(
            f'<text x="{margin - 10:.2f}" y="{sy(center)}" text-anchor="end">{name}</text>'
        )
    parts.append(
        f'<text x="{margin + size / 2:.2f}" y="{height - 10:.2f}" '
        f'text-anchor="middle">performance</text>'
    )
    parts.append(
        f'<text x="15" y="{margin + size / 2:.2f}" text-anchor="middle" '
        f'transform="rotate(-90 15 {margin + size / 2:.2f})">importance</text>'
    )
    for profile in sorted(profiles, key=lambda p: factor_sort_key(p.factor.id)):
        # place() also validates the coordinates
        place(profile.e_w, profile.e_r, thresholds)
        x, y = sx(profile.e_r), sy(profile.e_w)
        parts.append(f'<circle class="pt" cx="{x}" cy="{y}" r="3"/>')
        parts.append(f'<text x="{float(x) + 5:.2f}" y="{float(y) - 4:.2f}">{profile.factor.id}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
