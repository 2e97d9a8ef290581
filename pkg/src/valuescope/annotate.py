"""Lexicon matching over corpora and marker insertion for training.

Annotation finds every token whose generalized form is a compiled
lexicon key. Marking rewrites a token stream so each matched token is
surrounded by its group label, which therefore enters the embedding
vocabulary with one context slot on each side of the match.
"""

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .corpus import Corpus
from .generalize import Strategy, generalize
from .lexicon import SchwartzValue, ValueLexicon, compile_lexicon


@dataclass(frozen=True)
class Annotation:
    text_id: str
    token_index: int
    surface: str  # raw[start:end], original case
    stem: str
    label: str
    value: SchwartzValue
    start: int
    end: int


@dataclass(frozen=True)
class AnnotationSet:
    corpus_id: str
    strategy: Strategy
    lexicon_hash: str
    annotations: tuple[Annotation, ...]

    def per_text(self) -> dict[str, list[Annotation]]:
        grouped: dict[str, list[Annotation]] = {}
        for a in self.annotations:
            grouped.setdefault(a.text_id, []).append(a)
        return grouped


def annotate_corpus(
    corpus: Corpus, lexicon: ValueLexicon, strategy: Strategy
) -> AnnotationSet:
    """One annotation per token whose generalized form is in the lexicon."""
    compiled = compile_lexicon(lexicon, strategy)
    annotations = []
    for text in corpus.texts:
        for index, token in enumerate(text.tokens):
            hit = compiled.get(generalize(strategy, token.text))
            if hit is None:
                continue
            label, value = hit
            annotations.append(
                Annotation(
                    text_id=text.id,
                    token_index=index,
                    surface=text.raw[token.start : token.end],
                    stem=generalize(strategy, token.text),
                    label=label,
                    value=value,
                    start=token.start,
                    end=token.end,
                )
            )
    annotations.sort(key=lambda a: (a.text_id, a.token_index))
    return AnnotationSet(corpus.id, strategy, lexicon.version_hash, tuple(annotations))


def mark_tokens(
    token_texts: Sequence[str],
    annotations: Iterable[Annotation],
    sentinel: bool = False,
) -> list[str]:
    """Insert each annotation's label immediately before and after its token.

    With ``sentinel`` the inserted marker is ``⟨label⟩`` instead of the
    bare label, so markers cannot collide with natural occurrences.
    """
    labels_at: dict[int, str] = {}
    for a in annotations:
        if not 0 <= a.token_index < len(token_texts):
            raise ValueError(
                f"annotation index {a.token_index} out of range for "
                f"{len(token_texts)} tokens ({a.text_id})"
            )
        labels_at[a.token_index] = a.label
    marked: list[str] = []
    for index, token in enumerate(token_texts):
        label = labels_at.get(index)
        if label is None:
            marked.append(token)
        else:
            marker = f"⟨{label}⟩" if sentinel else label
            marked.extend((marker, token, marker))
    return marked


def marked_documents(
    corpus: Corpus, annotation_set: AnnotationSet, sentinel: bool = False
) -> list[list[str]]:
    """Marked token stream per text, in corpus order, for embedding training."""
    per_text = annotation_set.per_text()
    documents = []
    for text in corpus.texts:
        tokens = [t.text for t in text.tokens]
        documents.append(mark_tokens(tokens, per_text.get(text.id, []), sentinel))
    return documents


@dataclass(frozen=True)
class CountTable:
    group_by: str  # "label" or "value"
    per: str  # "text" or "corpus"
    rows: tuple[str, ...]
    cols: tuple[str, ...]
    counts: tuple[tuple[int, ...], ...]

    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def to_csv(self) -> str:
        lines = [",".join([self.group_by, *self.cols])]
        for name, row in zip(self.rows, self.counts):
            lines.append(",".join([name, *map(str, row)]))
        return "\n".join(lines) + "\n"


def token_counts(
    annotation_set: AnnotationSet,
    group_by: str = "label",
    per: str = "text",
    row_universe: Sequence[str] | None = None,
    col_universe: Sequence[str] | None = None,
) -> CountTable:
    """Dense occurrence counts, rows by label or value, columns by text or corpus.

    Universes fix row/column order (and include empty rows/columns);
    when omitted they default to the sorted observed keys.
    """
    if group_by not in ("label", "value"):
        raise ValueError(f"group_by must be 'label' or 'value', got {group_by!r}")
    if per not in ("text", "corpus"):
        raise ValueError(f"per must be 'text' or 'corpus', got {per!r}")

    def row_key(a: Annotation) -> str:
        return a.label if group_by == "label" else a.value.value

    rows_observed = {row_key(a) for a in annotation_set.annotations}
    if per == "text":
        cols_observed = {a.text_id for a in annotation_set.annotations}
    else:
        cols_observed = {annotation_set.corpus_id}

    rows = tuple(row_universe) if row_universe is not None else tuple(sorted(rows_observed))
    cols = tuple(col_universe) if col_universe is not None else tuple(sorted(cols_observed))
    missing_rows = rows_observed - set(rows)
    missing_cols = cols_observed - set(cols)
    if missing_rows or missing_cols:
        raise ValueError(
            f"universe omits observed keys: rows {sorted(missing_rows)}, "
            f"cols {sorted(missing_cols)}"
        )

    row_index = {name: i for i, name in enumerate(rows)}
    col_index = {name: i for i, name in enumerate(cols)}
    grid = [[0] * len(cols) for _ in rows]
    for a in annotation_set.annotations:
        col = a.text_id if per == "text" else annotation_set.corpus_id
        grid[row_index[row_key(a)]][col_index[col]] += 1
    return CountTable(group_by, per, rows, cols, tuple(tuple(r) for r in grid))


def stem_presence(annotation_sets: Sequence[AnnotationSet]) -> dict[int, list[str]]:
    """Partition observed stems into presence regions over the given corpora.

    Region keys are bitmasks: bit ``i`` set means the stem occurs in
    ``annotation_sets[i]``. Every observed stem lands in exactly one
    region; regions partition the observed stems.
    """
    if not annotation_sets:
        return {}
    first = annotation_sets[0]
    for other in annotation_sets[1:]:
        if other.lexicon_hash != first.lexicon_hash:
            raise ValueError(
                f"mismatched lexicon across corpora: {other.corpus_id} vs {first.corpus_id}"
            )
        if other.strategy != first.strategy:
            raise ValueError(
                f"mismatched strategy across corpora: {other.strategy} vs {first.strategy}"
            )
    masks: dict[str, int] = {}
    for bit, aset in enumerate(annotation_sets):
        for a in aset.annotations:
            masks[a.stem] = masks.get(a.stem, 0) | (1 << bit)
    regions: dict[int, list[str]] = {}
    for stem, mask in masks.items():
        regions.setdefault(mask, []).append(stem)
    return {mask: sorted(stems) for mask, stems in sorted(regions.items())}


def venn_payload(annotation_sets: Sequence[AnnotationSet]) -> dict:
    """JSON-ready Venn partition: corpus order plus bitmask → stems."""
    regions = stem_presence(annotation_sets)
    return {
        "corpora": [s.corpus_id for s in annotation_sets],
        "strategy": str(annotation_sets[0].strategy) if annotation_sets else None,
        "lexicon_hash": annotation_sets[0].lexicon_hash if annotation_sets else None,
        "regions": {str(mask): stems for mask, stems in regions.items()},
    }


def annotations_jsonl(annotation_set: AnnotationSet) -> str:
    """One JSON object per annotation, in (text_id, token_index) order."""
    lines = []
    for a in annotation_set.annotations:
        lines.append(
            json.dumps(
                {
                    "text_id": a.text_id,
                    "token_index": a.token_index,
                    "surface": a.surface,
                    "stem": a.stem,
                    "label": a.label,
                    "value": a.value.value,
                    "start": a.start,
                    "end": a.end,
                },
                ensure_ascii=False,
            )
        )
    return "\n".join(lines) + ("\n" if lines else "")


def parse_annotations_jsonl(
    text: str, corpus_id: str, strategy: Strategy, lexicon_hash: str
) -> AnnotationSet:
    """Inverse of annotations_jsonl; set-level fields come from the caller."""
    annotations = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        try:
            record = json.loads(line)
            annotations.append(
                Annotation(
                    text_id=record["text_id"],
                    token_index=record["token_index"],
                    surface=record["surface"],
                    stem=record["stem"],
                    label=record["label"],
                    value=SchwartzValue(record["value"]),
                    start=record["start"],
                    end=record["end"],
                )
            )
        except (json.JSONDecodeError, KeyError, ValueError) as exc:
            raise ValueError(f"bad annotation record on line {line_no}: {exc}") from exc
    return AnnotationSet(corpus_id, strategy, lexicon_hash, tuple(annotations))
