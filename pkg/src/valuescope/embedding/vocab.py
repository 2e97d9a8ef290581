"""Vocabulary over the marked union corpus."""

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True, eq=False)
class Vocabulary:
    """Token index with counts and the negative-sampling distribution.

    Tokens are ordered by descending count, ties broken alphabetically,
    so the index is a pure function of the counted stream. The noise
    cumulative distribution weights tokens by count^0.75.
    """

    tokens: tuple[str, ...]
    counts: np.ndarray  # int64, aligned with tokens
    index: dict[str, int] = field(repr=False)
    noise_cdf: np.ndarray = field(repr=False)  # float64 cumulative weights

    def __len__(self) -> int:
        return len(self.tokens)

    def __contains__(self, token: str) -> bool:
        return token in self.index

    @property
    def total(self) -> int:
        return int(self.counts.sum())


def build_vocab(documents: Iterable[Sequence[str]], min_count: int = 2) -> Vocabulary:
    """Count tokens across documents and index those with count ≥ ``min_count``."""
    counter: Counter[str] = Counter()
    for doc in documents:
        counter.update(doc)
    if not counter:
        raise ValueError("empty token stream")
    surviving = [(t, c) for t, c in counter.items() if c >= min_count]
    if not surviving:
        raise ValueError(
            f"vocabulary empty after min_count filtering (min_count={min_count})"
        )
    surviving.sort(key=lambda tc: (-tc[1], tc[0]))
    tokens = tuple(t for t, _ in surviving)
    counts = np.array([c for _, c in surviving], dtype=np.int64)
    noise = counts.astype(np.float64) ** 0.75
    return Vocabulary(
        tokens=tokens,
        counts=counts,
        index={t: i for i, t in enumerate(tokens)},
        noise_cdf=np.cumsum(noise),
    )

def vocab_from_counts(tokens: Sequence[str], counts: Sequence[int]) -> Vocabulary:
    """Rebuild a vocabulary from saved (token, count) pairs, order preserved."""
    if len(tokens) != len(counts):
        raise ValueError(f"{len(tokens)} tokens but {len(counts)} counts")
    if not tokens:
        raise ValueError("empty token list")
    frozen = tuple(tokens)
    arr = np.array(counts, dtype=np.int64)
    noise = arr.astype(np.float64) ** 0.75
    return Vocabulary(
        tokens=frozen,
        counts=arr,
        index={t: i for i, t in enumerate(frozen)},
        noise_cdf=np.cumsum(noise),
    )
