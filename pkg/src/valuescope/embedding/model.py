"""Embedding model types, similarity queries, and the text interchange format.

Matrices live as 64-bit arrays in memory; files store 32-bit decimal
values. All cross-slice comparisons use target vectors, which share one
coordinate system because every slice trains against the compass's
frozen context matrix.
"""

import dataclasses
import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .vocab import Vocabulary


@dataclass(frozen=True)
class Hyperparams:
    dimension: int = 100
    window: int = 5
    negatives: int = 5
    epochs_compass: int = 50
    epochs_slice: int = 50
    min_count: int = 2
    learning_rate: float = 0.025
    min_learning_rate: float = 1e-4
    subsample: float = 1e-3
    architecture: str = "cbow"  # or "skipgram"
    rng_seed: int = 1
    deterministic: bool = True

    def __post_init__(self) -> None:
        if self.dimension < 2:
            raise ValueError("dimension must be ≥ 2")
        if self.window < 1:
            raise ValueError("window must be ≥ 1")
        if self.negatives < 1:
            raise ValueError("negatives must be ≥ 1")
        if self.epochs_compass < 1 or self.epochs_slice < 1:
            raise ValueError("epochs must be ≥ 1")
        if self.learning_rate <= 0:
            raise ValueError("learning rate must be > 0")
        if self.architecture not in ("cbow", "skipgram"):
            raise ValueError(f"unknown architecture {self.architecture!r}")

    @property
    def mode(self) -> str:
        return "deterministic" if self.deterministic else "fast"


@dataclass(frozen=True, eq=False)
class CompassModel:
    vocab: Vocabulary
    U: np.ndarray  # target vectors, V×d float64
    C: np.ndarray  # context vectors, V×d float64, frozen after training
    hyperparams: Hyperparams

    def token_index(self, token: str) -> int:
        return _lookup(self.vocab.index, token)


@dataclass(frozen=True, eq=False)
class SliceModel:
    corpus_id: str
    vocab: Vocabulary  # shared with the compass
    U: np.ndarray
    frozen_c_digest: str  # digest of the compass C this slice trained against
    hyperparams: Hyperparams

    def token_index(self, token: str) -> int:
        return _lookup(self.vocab.index, token)


@dataclass(frozen=True, eq=False)
class VectorSet:
    """Target vectors loaded from a model file (no counts, query-only)."""

    tokens: tuple[str, ...]
    U: np.ndarray
    index: dict[str, int] = field(repr=False)

    def token_index(self, token: str) -> int:
        return _lookup(self.index, token)


def _lookup(index, token: str) -> int:
    try:
        return index[token]
    except KeyError:
        raise KeyError(f"token not in vocabulary: {token!r}") from None


def cosine(model, token_a: str, token_b: str) -> float:
    """Cosine similarity of the two tokens' target vectors."""
    a = model.U[model.token_index(token_a)]
    b = model.U[model.token_index(token_b)]
    na = float(np.sqrt((a * a).sum()))
    nb = float(np.sqrt((b * b).sum()))
    if na == 0.0 or nb == 0.0:
        culprit = token_a if na == 0.0 else token_b
        raise ValueError(f"zero vector for {culprit!r}; cosine undefined")
    return float((a * b).sum() / (na * nb))


def nearest(model, token: str, k: int) -> list[tuple[str, float]]:
    """Top-``k`` neighbours by cosine, query excluded, ties by vocabulary index."""
    if k < 1:
        raise ValueError("k must be ≥ 1")
    query_index = model.token_index(token)
    U = model.U
    q = U[query_index]
    qn = float(np.sqrt((q * q).sum()))
    norms = np.sqrt((U * U).sum(axis=1))
    with np.errstate(divide="ignore", invalid="ignore"):
        sims = (U * q).sum(axis=1) / (norms * qn)
    sims[~np.isfinite(sims)] = -np.inf
    sims[query_index] = -np.inf
    order = np.argsort(-sims, kind="stable")[:k]
    tokens = _tokens_of(model)
    return [(tokens[i], float(sims[i])) for i in order if np.isfinite(sims[i])]


def _tokens_of(model) -> tuple[str, ...]:
    if isinstance(model, VectorSet):
        return model.tokens
    return model.vocab.tokens


def _format_value(x: float) -> str:
    return str(np.float32(x))


def _atomic_write(path: Path, text: str) -> None:
    # readers polling mid-train must see whole files only
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    tmp.replace(path)


def vectors_text(tokens: tuple[str, ...], matrix: np.ndarray) -> str:
    """Interchange text format: `V d` header, then one `token v1 … vd` line each."""
    V, d = matrix.shape
    if V != len(tokens):
        raise ValueError(f"matrix rows {V} != token count {len(tokens)}")
    lines = [f"{V} {d}"]
    for token, row in zip(tokens, matrix):
        lines.append(token + " " + " ".join(_format_value(x) for x in row))
    return "\n".join(lines) + "\n"


def parse_vectors_text(text: str) -> VectorSet:
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty model file")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad model header: {lines[0]!r}")
    V, d = int(header[0]), int(header[1])
    if len(lines) != V + 1:
        raise ValueError(f"expected {V} vector lines, found {len(lines) - 1}")
    tokens = []
    U = np.empty((V, d), dtype=np.float64)
    for i, line in enumerate(lines[1:]):
        parts = line.split(" ")
        if len(parts) != d + 1:
            raise ValueError(f"line {i + 2}: expected token and {d} values")
        tokens.append(parts[0])
        U[i] = np.array(parts[1:], dtype=np.float64)
    frozen = tuple(tokens)
    return VectorSet(frozen, U, {t: j for j, t in enumerate(frozen)})


def matrix_digest(tokens: tuple[str, ...], matrix: np.ndarray) -> str:
    """SHA-256 of the canonical text serialization (stable across save/load)."""
    return hashlib.sha256(vectors_text(tokens, matrix).encode("utf-8")).hexdigest()


def save_compass(
    model: CompassModel,
    directory: str | Path,
    corpus_digest: str,
    lexicon_hash: str,
    strategy: str,
) -> dict:
    """Write compass.vectors.txt, compass.context.txt, compass.meta.json."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    tokens = model.vocab.tokens
    _atomic_write(directory / "compass.vectors.txt", vectors_text(tokens, model.U))
    _atomic_write(directory / "compass.context.txt", vectors_text(tokens, model.C))
    # counts let slice training rebuild the exact noise distribution
    _atomic_write(
        directory / "compass.vocab.txt",
        "".join(f"{t} {c}\n" for t, c in zip(tokens, model.vocab.counts)),
    )
    meta = {
        "role": "compass",
        "corpus_digest": corpus_digest,
        "lexicon_hash": lexicon_hash,
        "strategy": strategy,
        "seed": model.hyperparams.rng_seed,
        "mode": model.hyperparams.mode,
        "hyperparams": dataclasses.asdict(model.hyperparams),
        "frozen_c_digest": matrix_digest(tokens, model.C),
        "vocab_size": len(tokens),
        "dimension": model.U.shape[1],
    }
    _atomic_write(
        directory / "compass.meta.json",
        json.dumps(meta, indent=2, sort_keys=True) + "\n",
    )
    return meta


def save_slice(
    model: SliceModel,
    directory: str | Path,
    corpus_digest: str,
    lexicon_hash: str,
    strategy: str,
) -> dict:
    """Write <corpus_id>.vectors.txt and <corpus_id>.meta.json."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    tokens = model.vocab.tokens
    _atomic_write(
        directory / f"{model.corpus_id}.vectors.txt", vectors_text(tokens, model.U)
    )
    meta = {
        "role": "slice",
        "corpus_id": model.corpus_id,
        "corpus_digest": corpus_digest,
        "lexicon_hash": lexicon_hash,
        "strategy": strategy,
        "seed": model.hyperparams.rng_seed,
        "mode": model.hyperparams.mode,
        "hyperparams": dataclasses.asdict(model.hyperparams),
        "frozen_c_digest": model.frozen_c_digest,
        "vocab_size": len(tokens),
        "dimension": model.U.shape[1],
    }
    _atomic_write(
        directory / f"{model.corpus_id}.meta.json",
        json.dumps(meta, indent=2, sort_keys=True) + "\n",
    )
    return meta


def load_vectors(path: str | Path) -> VectorSet:
    return parse_vectors_text(Path(path).read_text(encoding="utf-8"))


def load_compass(directory: str | Path) -> CompassModel:
    """Rebuild a trained compass from its saved artifacts."""
    from .vocab import vocab_from_counts

    directory = Path(directory)
    meta = json.loads((directory / "compass.meta.json").read_text(encoding="utf-8"))
    targets = load_vectors(directory / "compass.vectors.txt")
    contexts = load_vectors(directory / "compass.context.txt")
    if targets.tokens != contexts.tokens:
        raise ValueError("target and context files disagree on the vocabulary")
    tokens, counts = [], []
    vocab_lines = (directory / "compass.vocab.txt").read_text(encoding="utf-8")
    for line in vocab_lines.splitlines():
        token, count = line.rsplit(" ", 1)
        tokens.append(token)
        counts.append(int(count))
    if tuple(tokens) != targets.tokens:
        raise ValueError("vocab file disagrees with the vector files")
    U, C = targets.U, contexts.U
    U.flags.writeable = False
    C.flags.writeable = False
    return CompassModel(
        vocab=vocab_from_counts(tokens, counts),
        U=U,
        C=C,
        hyperparams=Hyperparams(**meta["hyperparams"]),
    )
