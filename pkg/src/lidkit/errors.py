"""Exception types shared across the toolkit.

Everything raised on purpose derives from :class:`LidkitError`, so callers
(and the CLI) can distinguish data problems from genuine bugs or OS errors.
"""


class LidkitError(Exception):
    """Base class for all toolkit errors."""


class FormatError(LidkitError):
    """A text input file (corpus, hierarchy, label map, TSV) is malformed."""


class NoFeatures(LidkitError):
    """A sentence produced an empty feature bag; no prediction is possible."""


class NoLabels(LidkitError):
    """Vocabulary construction found no labels that survive filtering."""


class UnsupportedFormat(LidkitError):
    """Model file has the wrong magic bytes or an unknown format version."""


class CorruptModel(LidkitError):
    """Model file is truncated or fails its checksum."""


class InputMismatch(LidkitError):
    """Parallel evaluation inputs (gold vs predictions) have different lengths."""


class EmptyScope(LidkitError):
    """Label-set intersection for macro averaging came out empty."""


class UnmappedLabel(LidkitError):
    """Strict label mapping hit a label with no rule."""
