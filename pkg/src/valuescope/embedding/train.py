"""Negative-sampling SGD, shared by compass and slice training.

One objective for both architectures: with input vectors averaged into
``h`` (a single row for skip-gram), the sample loss against output word
``o`` and negatives ``n_k`` is

    L = -log σ(C[o]·h) - Σ_k log σ(-C[n_k]·h)

Training is plain sequential SGD, 64-bit throughout, one thread, with
every random draw taken from one seeded generator so a fixed seed gives
bitwise-identical matrices. Windows never cross text boundaries.
"""

from typing import Sequence

import numpy as np

from .model import CompassModel, Hyperparams, SliceModel, matrix_digest
from .vocab import Vocabulary, build_vocab


def _sigmoid(x: np.ndarray) -> np.ndarray:
    out = np.empty_like(x)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


def sample_gradients(
    U: np.ndarray,
    C: np.ndarray,
    input_rows: Sequence[int],
    output: int,
    negatives: Sequence[int],
) -> tuple[float, dict[int, np.ndarray], dict[int, np.ndarray]]:
    """Loss and analytic gradients for one training sample.

    Returns (loss, grad_U, grad_C) with gradients as row→vector maps;
    duplicate rows accumulate. The trainer applies param -= lr * grad.
    """
    input_rows = list(input_rows)
    h = U[input_rows].mean(axis=0)
    rows = [output, *negatives]
    scores = (C[rows] * h).sum(axis=1)
    sig = _sigmoid(scores)
    # dL/ds: positive sample σ-1, negatives σ
    coeff = sig.copy()
    coeff[0] -= 1.0
    loss = float(np.logaddexp(0.0, -scores[0]) + np.logaddexp(0.0, scores[1:]).sum())
    grad_C: dict[int, np.ndarray] = {}
    for row, c in zip(rows, coeff):
        grad_C[row] = grad_C.get(row, 0.0) + c * h
    grad_h = (coeff[:, None] * C[rows]).sum(axis=0)
    per_input = grad_h / len(input_rows)
    grad_U: dict[int, np.ndarray] = {}
    for row in input_rows:
        grad_U[row] = grad_U.get(row, 0.0) + per_input
    return loss, grad_U, grad_C


def _index_documents(
    documents: Sequence[Sequence[str]], vocab: Vocabulary
) -> list[np.ndarray]:
    index = vocab.index
    return [
        np.array([index[t] for t in doc if t in index], dtype=np.intp)
        for doc in documents
    ]


def _sgd(
    U: np.ndarray,
    C: np.ndarray,
    docs_idx: list[np.ndarray],
    vocab: Vocabulary,
    hp: Hyperparams,
    epochs: int,
    update_context: bool,
    rng: np.random.Generator,
) -> None:
    if not any(len(doc) >= 2 for doc in docs_idx):
        raise ValueError(
            "degenerate corpus: no text has 2 in-vocabulary tokens to form a window"
        )
    counts = vocab.counts
    total = float(counts.sum())
    if hp.subsample > 0:
        freq = counts / total
        ratio = hp.subsample / freq
        keep = np.minimum(1.0, np.sqrt(ratio) + ratio)
    else:
        keep = None
    cdf = vocab.noise_cdf
    cdf_total = cdf[-1]
    cbow = hp.architecture == "cbow"
    raw_total = sum(len(doc) for doc in docs_idx) * epochs
    processed = 0
    lr0 = hp.learning_rate
    lr_floor = hp.min_learning_rate

    for _ in range(epochs):
        for doc in docs_idx:
            processed += len(doc)
            if keep is not None:
                kept = doc[rng.random(len(doc)) < keep[doc]]
            else:
                kept = doc
            n = len(kept)
            if n < 2:
                continue
            lr = max(lr_floor, lr0 * (1.0 - processed / (raw_total + 1)))
            spans = rng.integers(1, hp.window + 1, size=n)
            for i in range(n):
                b = spans[i]
                lo = 0 if i < b else i - b
                hi = min(n, i + b + 1)
                ctx = np.concatenate((kept[lo:i], kept[i + 1 : hi]))
                if ctx.size == 0:
                    continue
                target = int(kept[i])
                if cbow:
                    _step(U, C, ctx, target, lr, hp, rng, cdf, cdf_total, update_context)
                else:
                    for output in ctx:
                        _step(
                            U,
                            C,
                            np.array([target], dtype=np.intp),
                            int(output),
                            lr,
                            hp,
                            rng,
                            cdf,
                            cdf_total,
                            update_context,
                        )


def _step(U, C, input_rows, output, lr, hp, rng, cdf, cdf_total, update_context):
    draws = rng.random(hp.negatives) * cdf_total
    negs = np.searchsorted(cdf, draws, side="right")
    negs = negs[negs != output]
    rows = np.empty(1 + negs.size, dtype=np.intp)
    rows[0] = output
    rows[1:] = negs
    h = U[input_rows].mean(axis=0)
    scores = (C[rows] * h).sum(axis=1)
    sig = _sigmoid(scores)
    g = -lr * sig  # -lr * dL/ds
    g[0] += lr
    grad_h = (g[:, None] * C[rows]).sum(axis=0)
    if update_context:
        np.add.at(C, rows, g[:, None] * h[None, :])
    np.add.at(U, input_rows, grad_h / input_rows.size)


def train_compass(
    documents: Sequence[Sequence[str]], hyperparams: Hyperparams | None = None
) -> CompassModel:
    """Train target and context matrices on the marked union corpus."""
    hp = hyperparams or Hyperparams()
    vocab = build_vocab(documents, hp.min_count)
    rng = np.random.default_rng(hp.rng_seed)
    U = (rng.random((len(vocab), hp.dimension)) - 0.5) / hp.dimension
    C = np.zeros((len(vocab), hp.dimension))
    docs_idx = _index_documents(documents, vocab)
    _sgd(U, C, docs_idx, vocab, hp, hp.epochs_compass, True, rng)
    U.flags.writeable = False
    C.flags.writeable = False
    return CompassModel(vocab, U, C, hp)


def train_slice(
    compass: CompassModel,
    documents: Sequence[Sequence[str]],
    corpus_id: str,
    hyperparams: Hyperparams | None = None,
) -> SliceModel:
    """Fine-tune target vectors for one corpus against the frozen compass C.

    U starts from the compass target matrix; rows whose tokens never
    occur in this corpus keep their initialization. C is read from the
    compass and never written (its buffer is read-only).
    """
    hp = hyperparams or compass.hyperparams
    rng = np.random.default_rng(hp.rng_seed)
    U = compass.U.copy()
    docs_idx = _index_documents(documents, compass.vocab)
    _sgd(U, compass.C, docs_idx, compass.vocab, hp, hp.epochs_slice, False, rng)
    U.flags.writeable = False
    return SliceModel(
        corpus_id=corpus_id,
        vocab=compass.vocab,
        U=U,
        frozen_c_digest=matrix_digest(compass.vocab.tokens, compass.C),
        hyperparams=hp,
    )
