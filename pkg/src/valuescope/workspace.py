"""Workspace: the on-disk layout tying corpora, lexicon, caches, and models.

Layout under the workspace root::

    corpora/<corpus_id>/<title>.txt    input texts (required)
    lexicon.txt                        current lexicon (default lexicon if absent)
    lexicon_history/NNNN.txt           versions replaced by accepted edits
    cache/annotations/*.jsonl          keyed by corpus digest, lexicon hash, strategy
    models/compass.*                   union embedding
    models/slices/<corpus_id>.*        per-corpus embeddings

Cache entries are never invalidated in place: the key embeds every
input digest, so edits simply route to fresh entries.
"""

import json
from dataclasses import dataclass, replace
from hashlib import sha256
from pathlib import Path

from .annotate import (
    AnnotationSet,
    annotate_corpus,
    annotations_jsonl,
    marked_documents,
    parse_annotations_jsonl,
    venn_payload,
)
from .corpus import Corpus, CorpusError, corpus_digest, list_corpus_ids, load_corpus
from .embedding.model import (
    CompassModel,
    Hyperparams,
    VectorSet,
    load_compass,
    load_vectors,
    save_compass,
    save_slice,
)
from .embedding.train import train_compass, train_slice
from .generalize import Strategy
from .lexicon import ValueLexicon, default_lexicon, parse_lexicon, serialize_lexicon
from .variation import (
    CommunitySet,
    SimilarityGraph,
    SweepPoint,
    clique_percolation,
    label_graph,
    threshold_sweep,
)


class WorkspaceError(Exception):
    """Raised for unknown ids or invalid workspace parameters."""


class MissingArtifactError(WorkspaceError, FileNotFoundError):
    """A required file (workspace piece or trained model) is absent.

    Doubly derived so generic OSError handling classifies it as I/O
    while workspace-aware callers can still catch WorkspaceError.
    """


@dataclass(frozen=True)
class Workspace:
    root: Path
    corpora: dict[str, Corpus]  # keyed by corpus id, iteration in sorted order
    lexicon: ValueLexicon

    def corpus(self, corpus_id: str) -> Corpus:
        try:
            return self.corpora[corpus_id]
        except KeyError:
            known = ", ".join(self.corpora)
            raise WorkspaceError(
                f"unknown corpus {corpus_id!r} (known: {known})"
            ) from None

    def text(self, qualified_id: str):
        """Look up a text by ``corpus_id/text_id``."""
        corpus_id, _, text_id = qualified_id.partition("/")
        if not text_id:
            raise WorkspaceError(
                f"text id must be 'corpus_id/text_id', got {qualified_id!r}"
            )
        for text in self.corpus(corpus_id).texts:
            if text.id == text_id:
                return text
        raise WorkspaceError(f"unknown text {text_id!r} in corpus {corpus_id!r}")


def open_workspace(root: str | Path) -> Workspace:
    root = Path(root)
    if not root.is_dir():
        raise MissingArtifactError(f"workspace root {root} is not a directory")
    try:
        ids = list_corpus_ids(root)
    except CorpusError as exc:
        raise WorkspaceError(str(exc)) from exc
    if not ids:
        raise MissingArtifactError(f"no corpora under {root / 'corpora'}")
    corpora = {cid: load_corpus(root, cid) for cid in sorted(ids)}
    lexicon_path = root / "lexicon.txt"
    if lexicon_path.exists():
        lexicon = parse_lexicon(lexicon_path.read_text(encoding="utf-8"))
    else:
        lexicon = default_lexicon()
    return Workspace(root=root, corpora=corpora, lexicon=lexicon)


def save_lexicon(workspace: Workspace, lexicon: ValueLexicon) -> Workspace:
    """Swap in a new lexicon, snapshotting the replaced version first."""
    history = workspace.root / "lexicon_history"
    history.mkdir(exist_ok=True)
    version = len(list(history.glob("*.txt"))) + 1
    _write_atomic(
        history / f"{version:04d}.txt", serialize_lexicon(workspace.lexicon)
    )
    _write_atomic(workspace.root / "lexicon.txt", serialize_lexicon(lexicon))
    return replace(workspace, lexicon=lexicon)


def _write_atomic(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    tmp.replace(path)


# --- annotation cache ---


def _cache_key(workspace: Workspace, corpus_id: str, strategy: Strategy) -> str:
    digest = corpus_digest(workspace.corpora[corpus_id])
    return f"{corpus_id}.{digest[:12]}.{workspace.lexicon.version_hash[:12]}.{strategy}"


def annotations_for(
    workspace: Workspace, corpus_id: str, strategy: Strategy
) -> AnnotationSet:
    """Annotate one corpus, reading/writing the file cache."""
    corpus = workspace.corpus(corpus_id)
    cache = workspace.root / "cache" / "annotations"
    path = cache / (_cache_key(workspace, corpus_id, strategy) + ".jsonl")
    if path.exists():
        return parse_annotations_jsonl(
            path.read_text(encoding="utf-8"),
            corpus_id,
            strategy,
            workspace.lexicon.version_hash,
        )
    annotation_set = annotate_corpus(corpus, workspace.lexicon, strategy)
    cache.mkdir(parents=True, exist_ok=True)
    _write_atomic(path, annotations_jsonl(annotation_set))
    return annotation_set


def all_annotations(workspace: Workspace, strategy: Strategy) -> list[AnnotationSet]:
    return [annotations_for(workspace, cid, strategy) for cid in workspace.corpora]


def venn(workspace: Workspace, strategy: Strategy) -> dict:
    return venn_payload(all_annotations(workspace, strategy))


def heatmap(
    workspace: Workspace,
    strategy: Strategy,
    group_by: str = "label",
    per: str = "text",
):
    """Workspace-wide count table; per-text columns are ``corpus_id/text_id``."""
    from .annotate import CountTable

    if group_by not in ("label", "value"):
        raise WorkspaceError(f"group_by must be 'label' or 'value', got {group_by!r}")
    if per not in ("text", "corpus"):
        raise WorkspaceError(f"per must be 'text' or 'corpus', got {per!r}")
    if per == "corpus":
        cols = list(workspace.corpora)
    else:
        cols = [
            f"{cid}/{text.id}"
            for cid, corpus in workspace.corpora.items()
            for text in corpus.texts
        ]
    col_index = {c: i for i, c in enumerate(cols)}
    cells: dict[str, list[int]] = {}
    for annotation_set in all_annotations(workspace, strategy):
        for a in annotation_set.annotations:
            row = a.label if group_by == "label" else a.value.value
            col = (
                annotation_set.corpus_id
                if per == "corpus"
                else f"{annotation_set.corpus_id}/{a.text_id}"
            )
            cells.setdefault(row, [0] * len(cols))[col_index[col]] += 1
    rows = sorted(cells)
    counts = tuple(tuple(cells[r]) for r in rows)
    return CountTable(group_by, per, tuple(rows), tuple(cols), counts)


# --- model store ---


def models_dir(workspace: Workspace) -> Path:
    return workspace.root / "models"


def union_digest(workspace: Workspace) -> str:
    """Digest of the whole corpus set, used as the compass corpus key."""
    h = sha256()
    for cid in workspace.corpora:
        h.update(f"{cid}:{corpus_digest(workspace.corpora[cid])}\n".encode())
    return h.hexdigest()


def train_models(
    workspace: Workspace,
    strategy: Strategy,
    hyperparams: Hyperparams | None = None,
    role: str = "all",
    corpus_id: str | None = None,
    log=None,
) -> dict:
    """Train and persist the compass and/or slices for this workspace.

    ``role='slice'`` reuses the compass already on disk; float32 file
    precision makes that reload lossless for the stored values.
    """
    if role not in ("compass", "slice", "all"):
        raise WorkspaceError(f"role must be 'compass', 'slice', or 'all', got {role!r}")
    hp = hyperparams or Hyperparams()
    say = log or (lambda message: None)
    docs = {}
    for cid in workspace.corpora:
        annotation_set = annotations_for(workspace, cid, strategy)
        docs[cid] = marked_documents(workspace.corpora[cid], annotation_set)
    out = models_dir(workspace)
    result: dict = {}
    compass: CompassModel | None = None
    if role in ("compass", "all"):
        say("training compass on the marked union corpus")
        union_docs = [doc for cid in workspace.corpora for doc in docs[cid]]
        compass = train_compass(union_docs, hp)
        result["compass"] = save_compass(
            compass,
            out,
            union_digest(workspace),
            workspace.lexicon.version_hash,
            str(strategy),
        )
        say(f"compass saved ({len(compass.vocab)} tokens)")
    if role in ("slice", "all"):
        if compass is None:
            if not (out / "compass.meta.json").exists():
                raise MissingArtifactError(
                    "no compass model on disk; train the compass first"
                )
            compass = load_compass(out)
        targets = [corpus_id] if corpus_id else list(workspace.corpora)
        result["slices"] = {}
        for cid in targets:
            corpus = workspace.corpus(cid)
            say(f"training slice {cid}")
            slice_model = train_slice(compass, docs[cid], cid, hp)
            result["slices"][cid] = save_slice(
                slice_model,
                out / "slices",
                corpus_digest(corpus),
                workspace.lexicon.version_hash,
                str(strategy),
            )
    return result


def compass_meta(workspace: Workspace) -> dict:
    path = models_dir(workspace) / "compass.meta.json"
    if not path.exists():
        raise MissingArtifactError("no compass model on disk; train the compass first")
    return json.loads(path.read_text(encoding="utf-8"))


def slice_vectors(workspace: Workspace, corpus_id: str) -> tuple[VectorSet, dict]:
    workspace.corpus(corpus_id)  # unknown-corpus error beats missing-model error
    base = models_dir(workspace) / "slices" / corpus_id
    meta_path = base.with_name(f"{corpus_id}.meta.json")
    vec_path = base.with_name(f"{corpus_id}.vectors.txt")
    if not meta_path.exists() or not vec_path.exists():
        raise MissingArtifactError(
            f"no slice model for corpus {corpus_id!r}; run training first"
        )
    meta = json.loads(meta_path.read_text(encoding="utf-8"))
    return load_vectors(vec_path), meta


def meta_digest(meta: dict) -> str:
    """Stable digest of a model's metadata, for staleness detection."""
    return sha256(json.dumps(meta, sort_keys=True).encode("utf-8")).hexdigest()


def model_is_current(workspace: Workspace, meta: dict) -> bool:
    """True when the model was built from the workspace's current inputs."""
    if meta.get("lexicon_hash") != workspace.lexicon.version_hash:
        return False
    if meta.get("role") == "compass":
        return meta.get("corpus_digest") == union_digest(workspace)
    cid = meta.get("corpus_id")
    if cid not in workspace.corpora:
        return False
    return meta.get("corpus_digest") == corpus_digest(workspace.corpora[cid])


# --- variation over stored slices ---


def present_labels(workspace: Workspace, vectors: VectorSet) -> list[str]:
    """Lexicon labels that earned a vector in this slice."""
    return sorted(
        group.label for group in workspace.lexicon.groups if group.label in vectors.index
    )


def slice_graph(
    workspace: Workspace, corpus_id: str, theta: float
) -> tuple[SimilarityGraph, dict]:
    vectors, meta = slice_vectors(workspace, corpus_id)
    labels = present_labels(workspace, vectors)
    graph = label_graph(vectors, labels, theta)
    return replace(graph, corpus_id=corpus_id), meta


def clusters(
    workspace: Workspace, corpus_id: str, k: int, theta: float
) -> tuple[CommunitySet, dict]:
    graph, meta = slice_graph(workspace, corpus_id, theta)
    return clique_percolation(graph, k), meta


def sweep(
    workspace: Workspace, corpus_id: str, theta_grid: list[float]
) -> list[SweepPoint]:
    vectors, _ = slice_vectors(workspace, corpus_id)
    labels = present_labels(workspace, vectors)
    return threshold_sweep(vectors, labels, theta_grid)
