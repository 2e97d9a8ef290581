"""Word generalization strategies.

A strategy maps a surface word to the key used for lexicon matching.
``EXACT`` keeps the lowercased word; the others apply a stemmer. The
``DOUBLE_SNOWBALL`` strategy stems twice with the revised English
algorithm, which collapses a few stems that are still inflected after
one pass (its stems are not always fixed points).
"""

import enum

from .stemming import lancaster, porter, porter2


class Strategy(enum.Enum):
    """Generalization strategy, keyed by its command-line name."""

    EXACT = "exact"
    PORTER = "porter"
    SNOWBALL = "snowball"
    LANCASTER = "lancaster"
    DOUBLE_SNOWBALL = "snowball2"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_name(cls, name: str) -> "Strategy":
        """Parse a command-line strategy name, with a helpful error."""
        try:
            return cls(name)
        except ValueError:
            valid = "|".join(s.value for s in cls)
            raise ValueError(f"unknown strategy {name!r} (expected {valid})") from None


def generalize(strategy: Strategy, word: str) -> str:
    """Map ``word`` to its matching key under ``strategy``."""
    # curly and ASCII apostrophes must reach the same key
    word = word.lower().replace("’", "'")
    if strategy is Strategy.EXACT:
        return word
    if strategy is Strategy.PORTER:
        return porter.stem(word)
    if strategy is Strategy.SNOWBALL:
        return porter2.stem(word)
    if strategy is Strategy.LANCASTER:
        return lancaster.stem(word)
    if strategy is Strategy.DOUBLE_SNOWBALL:
        return porter2.stem(porter2.stem(word))
    raise ValueError(f"unhandled strategy: {strategy!r}")
