"""Turning probability distributions into labels.

Covers the confidence-thresholded decision rule with base-set restriction,
consolidation of language varieties into their macrolanguage, and
many-to-one label mapping between coding schemes.

The rule is deliberately literal: the maximum is taken over the base set's
RAW probabilities, with no renormalization after restriction, and the
sentence is Undetermined whenever that raw maximum falls below theta.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import EmptyScope, FormatError, UnmappedLabel
from .model import UNDETERMINED, PredictionDist


class Scenario(enum.Enum):
    """Whether the benchmark's language set is known to the caller.

    SET_KNOWN restricts predictions to the benchmark's languages; in
    SET_UNKNOWN the base set must be the model's entire label inventory.
    """

    SET_KNOWN = "set-known"
    SET_UNKNOWN = "set-unknown"


@dataclass(frozen=True)
class DecisionConfig:
    base_set: frozenset[str]
    theta: float
    scenario: Scenario = Scenario.SET_UNKNOWN

    def __post_init__(self) -> None:
        if not self.base_set:
            raise ValueError("base_set must be non-empty")
        if not 0.0 <= self.theta <= 1.0:
            raise ValueError("theta must be in [0, 1]")

    @classmethod
    def for_model(
        cls,
        model_labels: Iterable[str],
        theta: float,
        base_set: Iterable[str] | None = None,
    ) -> "DecisionConfig":
        """Build a config against a model's label inventory.

        With no base set the scenario is SET_UNKNOWN over all model labels;
        otherwise SET_KNOWN over the intersection (labels the model cannot
        emit are useless in the base set).  EmptyScope if nothing survives.
        """
        labels = frozenset(model_labels)
        if base_set is None:
            return cls(labels, theta, Scenario.SET_UNKNOWN)
        restricted = labels & frozenset(base_set)
        if not restricted:
            raise EmptyScope("base set shares no labels with the model")
        return cls(restricted, theta, Scenario.SET_KNOWN)


@dataclass(frozen=True)
class LanguageHierarchy:
    """Variety -> macrolanguage map.  Flat by construction: a macrolanguage
    may never itself appear as a variety, which also rules out cycles."""

    macro_of: Mapping[str, str]

    def __post_init__(self) -> None:
        bad = set(self.macro_of) & set(self.macro_of.values())
        if bad:
            raise ValueError(f"labels are both variety and macrolanguage: {sorted(bad)}")


@dataclass(frozen=True)
class LabelMap:
    """Many-to-one relabeling rules from a source scheme to a target scheme."""

    rules: Mapping[str, str]


def decide(dist: PredictionDist, config: DecisionConfig) -> str:
    """Apply the threshold rule: argmax over the base set, or Undetermined.

    Probabilities are compared raw — restricting to the base set does not
    renormalize them.  Ties break toward the lexicographically smaller
    label.  Returns UNDETERMINED iff the base-set maximum is < theta.
    """
    best_label: str | None = None
    best_p = -1.0
    for label in sorted(config.base_set):
        try:
            p = dist.probs[label]
        except KeyError:
            raise ValueError(f"base set label {label!r} not in distribution") from None
        if p > best_p:
            best_label, best_p = label, p
    if best_p < config.theta:
        return UNDETERMINED
    assert best_label is not None
    return best_label


def rollup(dist: PredictionDist, hierarchy: LanguageHierarchy) -> PredictionDist:
    """Fold each variety's probability into its macrolanguage.

    Varieties disappear from the result; labels outside the hierarchy pass
    through untouched.  Each output probability is accumulated left to
    right as (macrolanguage's own mass, then its varieties in lexicographic
    order), a fixed summation order that makes total mass conservation
    exact — the result is a rearrangement of the same float addends.
    """
    probs = dist.probs
    varieties: dict[str, list[str]] = {}
    for label in probs:
        macro = hierarchy.macro_of.get(label)
        if macro is not None:
            varieties.setdefault(macro, []).append(label)
    out_labels = set(varieties)
    out_labels.update(l for l in probs if l not in hierarchy.macro_of)
    out: dict[str, float] = {}
    for label in sorted(out_labels):
        acc = probs.get(label, 0.0)
        for v in sorted(varieties.get(label, ())):
            acc += probs[v]
        out[label] = acc
    return PredictionDist(out)


def map_labels(
    labels: Sequence[str], label_map: LabelMap, strict: bool = True
) -> list[str]:
    """Relabel a sequence through the map.

    The Undetermined sentinel always passes through unchanged.  Labels
    without a rule raise UnmappedLabel in strict mode and pass through
    unchanged otherwise (needed when models emit labels outside the
    benchmark's scheme).
    """
    out: list[str] = []
    for label in labels:
        if label == UNDETERMINED:
            out.append(label)
            continue
        target = label_map.rules.get(label)
        if target is None:
            if strict:
                raise UnmappedLabel(f"no mapping rule for {label!r}")
            target = label
        out.append(target)
    return out


# --- data file loaders ------------------------------------------------------


def _read_pair_lines(path: str) -> list[tuple[int, str, str]]:
    """Parse a two-column TSV with '#' comment lines; (lineno, src, tgt)."""
    rows: list[tuple[int, str, str]] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise FormatError(f"{path}:{lineno}: expected 'source<TAB>target'")
            rows.append((lineno, parts[0], parts[1]))
    return rows


def _pairs_to_map(path: str, rows: list[tuple[int, str, str]]) -> dict[str, str]:
    out: dict[str, str] = {}
    for lineno, src, tgt in rows:
        if src in out:
            raise FormatError(f"{path}:{lineno}: duplicate source label {src!r}")
        out[src] = tgt
    return out


def load_hierarchy(path: str) -> LanguageHierarchy:
    """Load a variety<TAB>macrolanguage file."""
    mapping = _pairs_to_map(path, _read_pair_lines(path))
    try:
        return LanguageHierarchy(mapping)
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from None


def load_label_map(path: str) -> LabelMap:
    """Load a source<TAB>target relabeling file."""
    return LabelMap(_pairs_to_map(path, _read_pair_lines(path)))


def load_label_set(path: str) -> frozenset[str]:
    """Load a one-label-per-line file ('#' comments allowed)."""
    labels: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if any(ch.isspace() for ch in line):
                raise FormatError(f"{path}:{lineno}: label contains whitespace")
            labels.add(line)
    return frozenset(labels)
