"""Ordered linguistic rating scales mapped to interval type-2 values."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .defuzz import dtrat
from .errors import InputFileError
from .numbers import IT2TrapFN, it2


class UnknownTermError(KeyError):
    """A rating label that the scale does not define."""

    def __init__(self, label: str, vocabulary: tuple[str, ...], context: str = ""):
        self.label = label
        self.vocabulary = vocabulary
        prefix = f"{context}: " if context else ""
        super().__init__(f"{prefix}unknown term {label!r}; known terms: {', '.join(vocabulary)}")


@dataclass(frozen=True)
class LinguisticScale:
    """Ordered (label, value) pairs from the weakest to the strongest term."""

    terms: tuple[tuple[str, IT2TrapFN], ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.terms)

    def __len__(self) -> int:
        return len(self.terms)


# Chen-Lee five-term scale on [0, 1].
_DEFAULT_TERMS = (
    ("Very Low", it2((0.0, 0.0, 0.0, 0.1, 1.0, 1.0), (0.0, 0.0, 0.0, 0.05, 0.9, 0.9))),
    ("Low", it2((0.0, 0.1, 0.1, 0.3, 1.0, 1.0), (0.05, 0.1, 0.1, 0.2, 0.9, 0.9))),
    ("Medium", it2((0.3, 0.5, 0.5, 0.7, 1.0, 1.0), (0.4, 0.5, 0.5, 0.6, 0.9, 0.9))),
    ("High", it2((0.7, 0.9, 0.9, 1.0, 1.0, 1.0), (0.8, 0.9, 0.9, 0.95, 0.9, 0.9))),
    ("Very High", it2((0.9, 1.0, 1.0, 1.0, 1.0, 1.0), (0.95, 1.0, 1.0, 1.0, 0.9, 0.9))),
)


def default_scale() -> LinguisticScale:
    """The built-in five-term scale (Very Low .. Very High)."""
    return LinguisticScale(_DEFAULT_TERMS)


def lookup(scale: LinguisticScale, label: str) -> IT2TrapFN:
    """Resolve a label case-insensitively, ignoring surrounding whitespace.

    No fuzzy matching: anything that is not an exact term raises
    ``UnknownTermError`` listing the legal vocabulary.
    """
    wanted = label.strip().casefold()
    for known, value in scale.terms:
        if known.strip().casefold() == wanted:
            return value
    raise UnknownTermError(label, scale.labels)


def validate_scale(scale: LinguisticScale) -> list[str]:
    """Check scale invariants; violations are returned as data, not raised.

    A valid scale has unique labels (case-insensitive), structurally sound
    values with support inside [0, 1], and strictly increasing defuzzified
    values along the term order.
    """
    problems: list[str] = []
    seen: dict[str, str] = {}
    for label, _ in scale.terms:
        key = label.strip().casefold()
        if key in seen:
            problems.append(f"duplicate label (case-insensitive): {label!r} vs {seen[key]!r}")
        else:
            seen[key] = label

    for label, value in scale.terms:
        for violation in value.violations():
            problems.append(f"term {label!r}: {violation}")
        if value.upper.a1 < 0 or value.upper.a4 > 1:
            problems.append(f"term {label!r}: support outside [0, 1]")

    crisp = [(label, dtrat(value)) for label, value in scale.terms]
    for (prev_label, prev), (label, cur) in zip(crisp, crisp[1:]):
        if cur <= prev:
            problems.append(
                f"defuzzified values not strictly increasing: "
                f"{prev_label!r}={prev:.6f} >= {label!r}={cur:.6f}"
            )
    return problems


def load_scale(path: str | Path) -> LinguisticScale:
    """Load a scale definition (JSON with an ordered ``terms`` list).

    Each term carries a ``label`` and a ``value`` in the canonical textual
    form. The loaded scale must pass ``validate_scale``.
    """
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except OSError as exc:
        raise InputFileError(str(path), f"cannot read scale file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputFileError(str(path), f"invalid JSON: {exc}", row=exc.lineno) from exc

    terms_doc = doc.get("terms") if isinstance(doc, dict) else None
    if not isinstance(terms_doc, list) or not terms_doc:
        raise InputFileError(str(path), "scale file must contain a non-empty 'terms' list")

    terms = []
    for i, entry in enumerate(terms_doc, start=1):
        if not isinstance(entry, dict) or "label" not in entry or "value" not in entry:
            raise InputFileError(str(path), f"term #{i} must have 'label' and 'value'")
        try:
            value = IT2TrapFN.from_text(str(entry["value"]))
        except ValueError as exc:
            raise InputFileError(str(path), f"term #{i} ({entry['label']!r}): {exc}") from exc
        terms.append((str(entry["label"]), value))

    scale = LinguisticScale(tuple(terms))
    problems = validate_scale(scale)
    if problems:
        raise InputFileError(str(path), "invalid scale: " + "; ".join(problems))
    return scale
