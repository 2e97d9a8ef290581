"""The value lexicon: labeled synonym groups mapped to ten basic values.

File format, one group per line::

    label,synonym1;synonym2;...,Value

``#`` starts a comment line; blank lines are ignored. The canonical
serialization keeps file order and drops comments; ``version_hash`` is
the SHA-256 of those canonical bytes, so two lexicons with the same
groups in the same order share a hash regardless of formatting noise.
"""

import enum
import hashlib
from dataclasses import dataclass, field
from importlib import resources

from .generalize import Strategy, generalize


class LexiconError(Exception):
    """Raised for malformed lexicon files or stem collisions.

    ``line`` is the 1-based offending line for parse errors, None for
    collisions found at compile time.
    """

    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(message)
        self.line = line


class SchwartzValue(enum.Enum):
    SECURITY = "Security"
    TRADITION = "Tradition"
    CONFORMITY = "Conformity"
    SELF_DIRECTION = "Self-Direction"
    STIMULATION = "Stimulation"
    HEDONISM = "Hedonism"
    ACHIEVEMENT = "Achievement"
    POWER = "Power"
    BENEVOLENCE = "Benevolence"
    UNIVERSALISM = "Universalism"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TokenGroup:
    label: str
    synonyms: tuple[str, ...]
    value: SchwartzValue


@dataclass(frozen=True)
class ValueLexicon:
    groups: tuple[TokenGroup, ...]
    version_hash: str = field(compare=False)

    def group(self, label: str) -> TokenGroup:
        for g in self.groups:
            if g.label == label:
                return g
        raise KeyError(label)


def _canonical(groups: tuple[TokenGroup, ...]) -> str:
    return "".join(
        f"{g.label},{';'.join(g.synonyms)},{g.value.value}\n" for g in groups
    )


def _hash(groups: tuple[TokenGroup, ...]) -> str:
    return hashlib.sha256(_canonical(groups).encode("utf-8")).hexdigest()


def parse_lexicon(file_content: str) -> ValueLexicon:
    """Parse lexicon file content, reporting every error with its line number."""
    groups: list[TokenGroup] = []
    label_lines: dict[str, int] = {}
    for lineno, line in enumerate(file_content.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split(",")
        if len(parts) != 3:
            raise LexiconError(
                f"line {lineno}: expected 'label,syn1;syn2;...,Value', got {stripped!r}",
                line=lineno,
            )
        label, synonym_field, value_name = (p.strip() for p in parts)
        if not label:
            raise LexiconError(f"line {lineno}: empty label", line=lineno)
        if label in label_lines:
            raise LexiconError(
                f"line {lineno}: duplicate label {label!r} "
                f"(first defined on line {label_lines[label]})",
                line=lineno,
            )
        synonyms = tuple(s.strip() for s in synonym_field.split(";"))
        if not synonym_field or any(not s for s in synonyms):
            raise LexiconError(
                f"line {lineno}: empty synonym in group {label!r}", line=lineno
            )
        for s in synonyms:
            if any(c.isspace() for c in s):
                raise LexiconError(
                    f"line {lineno}: synonym {s!r} is not a single word", line=lineno
                )
        try:
            value = SchwartzValue(value_name)
        except ValueError:
            valid = ", ".join(v.value for v in SchwartzValue)
            raise LexiconError(
                f"line {lineno}: unknown value {value_name!r} (expected one of {valid})",
                line=lineno,
            ) from None
        label_lines[label] = lineno
        groups.append(TokenGroup(label, synonyms, value))
    frozen = tuple(groups)
    return ValueLexicon(frozen, _hash(frozen))


def serialize_lexicon(lexicon: ValueLexicon) -> str:
    """Canonical text form; ``parse_lexicon`` round-trips it exactly."""
    return _canonical(lexicon.groups)


def default_lexicon() -> ValueLexicon:
    """The bundled 29-group lexicon."""
    content = (
        resources.files("valuescope").joinpath("data/default_lexicon.txt").read_text("utf-8")
    )
    return parse_lexicon(content)


def compile_lexicon(
    lexicon: ValueLexicon, strategy: Strategy
) -> dict[str, tuple[str, SchwartzValue]]:
    """Map each generalized synonym (and label) to its owning group.

    A stem reachable from two distinct groups is ambiguous and raises,
    naming the stem and both groups, so the review loop can resolve it.
    """
    compiled: dict[str, tuple[str, SchwartzValue]] = {}
    for group in lexicon.groups:
        for word in (group.label, *group.synonyms):
            stem = generalize(strategy, word)
            previous = compiled.get(stem)
            if previous is not None and previous[0] != group.label:
                raise LexiconError(
                    f"stem collision under {strategy}: {stem!r} is reachable "
                    f"from group {previous[0]!r} and group {group.label!r}"
                )
            compiled[stem] = (group.label, group.value)
    return compiled
