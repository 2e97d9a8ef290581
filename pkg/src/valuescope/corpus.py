"""Corpus loading, tokenization, and descriptive statistics.

A corpus is a directory of UTF-8 plain-text files, one text per file,
laid out as ``corpora/<corpus_id>/<title>.txt`` under a workspace root.
Text ids are slugs of the file title; file order is lexicographic so a
reload always yields the same corpus.
"""

import hashlib
import io
import re
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, NamedTuple

# Letter runs, optionally joined by single internal apostrophes.
_TOKEN_RE = re.compile(r"[^\W\d_]+(?:['’][^\W\d_]+)*")
_SLUG_RE = re.compile(r"[^a-z0-9]+")


class CorpusError(Exception):
    """Raised for unreadable, empty, or inconsistent corpus directories."""


class Token(NamedTuple):
    text: str  # lowercased, apostrophe-normalized
    start: int  # offset into raw
    end: int


@dataclass(frozen=True)
class Text:
    id: str
    title: str
    corpus_id: str
    raw: str
    tokens: tuple[Token, ...]


@dataclass(frozen=True)
class Corpus:
    id: str
    texts: tuple[Text, ...]


class CorpusStats(NamedTuple):
    text_count: int
    symbol_count: int
    word_count: int


def tokenize(raw: str) -> tuple[Token, ...]:
    """Split ``raw`` into lowercase word tokens with character offsets.

    A token is a maximal run of Unicode letters, with apostrophes kept
    when they sit between letters ("king's"). Offsets index into
    ``raw``, so ``raw[t.start:t.end]`` is the original surface form.
    """
    tokens = []
    for m in _TOKEN_RE.finditer(raw):
        text = m.group().lower().replace("’", "'")
        tokens.append(Token(text, m.start(), m.end()))
    return tuple(tokens)


def slugify(title: str) -> str:
    """Derive a stable text id from a title ("The Frog King" → "the-frog-king")."""
    normalized = unicodedata.normalize("NFKD", title)
    ascii_form = normalized.encode("ascii", "ignore").decode("ascii").lower()
    return _SLUG_RE.sub("-", ascii_form).strip("-")


def load_corpus(root_path: str | Path, corpus_id: str) -> Corpus:
    """Load every ``.txt`` file under ``<root_path>/corpora/<corpus_id>/``."""
    directory = Path(root_path) / "corpora" / corpus_id
    if not directory.is_dir():
        raise CorpusError(f"corpus directory not found: {directory}")
    files = sorted(directory.glob("*.txt"), key=lambda p: p.name)
    if not files:
        raise CorpusError(f"no texts found in {directory}")
    texts = []
    seen: dict[str, Path] = {}
    for path in files:
        try:
            raw = path.read_bytes().decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CorpusError(f"{path}: not valid UTF-8 ({exc.reason} at byte {exc.start})")
        title = path.stem
        text_id = slugify(title)
        if not text_id:
            raise CorpusError(f"{path}: title produces an empty id")
        if text_id in seen:
            raise CorpusError(
                f"duplicate text id {text_id!r} from {seen[text_id].name} and {path.name}"
            )
        seen[text_id] = path
        texts.append(Text(text_id, title, corpus_id, raw, tokenize(raw)))
    return Corpus(corpus_id, tuple(texts))


def list_corpus_ids(root_path: str | Path) -> list[str]:
    """Corpus ids available under ``<root_path>/corpora/``, sorted."""
    base = Path(root_path) / "corpora"
    if not base.is_dir():
        raise CorpusError(f"corpora directory not found: {base}")
    return sorted(p.name for p in base.iterdir() if p.is_dir())


def corpus_digest(corpus: Corpus) -> str:
    """Content digest of a corpus, for cache keys and model metadata."""
    h = hashlib.sha256()
    for text in corpus.texts:
        h.update(text.id.encode("utf-8"))
        h.update(b"\x00")
        h.update(text.raw.encode("utf-8"))
        h.update(b"\x00")
    return h.hexdigest()


def corpus_stats(corpus: Corpus) -> CorpusStats:
    return CorpusStats(
        text_count=len(corpus.texts),
        symbol_count=sum(len(t.raw) for t in corpus.texts),
        word_count=sum(len(t.tokens) for t in corpus.texts),
    )


def stats_csv(corpora: Iterable[Corpus]) -> str:
    """Render per-corpus statistics as CSV (`corpus,texts,symbols,words`)."""
    out = io.StringIO()
    out.write("corpus,texts,symbols,words\n")
    for corpus in corpora:
        s = corpus_stats(corpus)
        out.write(f"{corpus.id},{s.text_count},{s.symbol_count},{s.word_count}\n")
    return out.getvalue()
