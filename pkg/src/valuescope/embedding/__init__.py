"""Compass-aligned word embeddings trained from scratch.

The compass trains target (U) and context (C) matrices on the marked
union of all corpora. Each per-corpus slice then retrains a copy of U
against the frozen C, which keeps every slice in one coordinate system
so target vectors compare directly across corpora.
"""

from .model import (
    CompassModel,
    Hyperparams,
    SliceModel,
    VectorSet,
    cosine,
    load_vectors,
    matrix_digest,
    nearest,
    parse_vectors_text,
    save_compass,
    save_slice,
    vectors_text,
)
from .train import sample_gradients, train_compass, train_slice
from .vocab import Vocabulary, build_vocab

__all__ = [
    "CompassModel",
    "Hyperparams",
    "SliceModel",
    "VectorSet",
    "Vocabulary",
    "build_vocab",
    "cosine",
    "load_vectors",
    "matrix_digest",
    "nearest",
    "parse_vectors_text",
    "sample_gradients",
    "save_compass",
    "save_slice",
    "train_compass",
    "train_slice",
    "vectors_text",
]
