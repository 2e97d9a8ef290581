"""HTTP facade over a workspace for the review UI and scripts.

Readers never take the writer lock: GET handlers snapshot the current
workspace reference and read cache/model files that are only ever
replaced atomically. Mutations (lexicon saves) and jobs (annotation,
training) serialize through one lock plus a single worker thread.

Every JSON body is an envelope::

    {"lexicon_hash": ..., "strategy": ..., "model_digest": ..., "data": ...}

so clients can detect staleness by comparing hashes between responses.
"""

import itertools
import json
import queue
import threading
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import Body, FastAPI, HTTPException
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .corpus import corpus_stats
from .embedding.model import Hyperparams, cosine
from .generalize import Strategy
from .lexicon import LexiconError, compile_lexicon, parse_lexicon, serialize_lexicon
from .variation import communities_json, compare_json, graph_json
from .workspace import (
    MissingArtifactError,
    WorkspaceError,
    all_annotations,
    annotations_for,
    clusters,
    heatmap,
    meta_digest,
    model_is_current,
    open_workspace,
    save_lexicon,
    slice_graph,
    slice_vectors,
    train_models,
    venn,
)


@dataclass
class Job:
    id: str
    kind: str
    params: dict
    status: str = "queued"  # queued | running | done | failed
    log: list = field(default_factory=list)
    error: str | None = None


class Service:
    """Mutable service state: current workspace, job registry, writer lock."""

    def __init__(self, workspace_root: str | Path) -> None:
        self.workspace = open_workspace(workspace_root)
        self.write_lock = threading.Lock()
        self.jobs: dict[str, Job] = {}
        self.job_counter = itertools.count(1)
        self.job_queue: "queue.Queue[str]" = queue.Queue()
        self.worker = threading.Thread(target=self._drain_jobs, daemon=True)
        self.worker.start()

    def submit(self, kind: str, params: dict) -> Job:
        job = Job(id=f"job-{next(self.job_counter):04d}", kind=kind, params=params)
        self.jobs[job.id] = job
        self.job_queue.put(job.id)
        return job

    def _drain_jobs(self) -> None:
        while True:
            job_id = self.job_queue.get()
            job = self.jobs[job_id]
            job.status = "running"
            try:
                with self.write_lock:
                    self._run(job)
            except Exception as exc:
                job.error = f"{type(exc).__name__}: {exc}"
                job.log.append(job.error)
                job.status = "failed"
            else:
                job.status = "done"

    def _run(self, job: Job) -> None:
        ws = self.workspace
        strategy = Strategy.from_name(job.params.get("strategy", "snowball"))
        if job.kind == "annotate":
            for annotation_set in all_annotations(ws, strategy):
                job.log.append(
                    f"{annotation_set.corpus_id}: "
                    f"{len(annotation_set.annotations)} annotations"
                )
        elif job.kind == "train":
            hp = Hyperparams(**job.params.get("hyperparams", {}))
            train_models(
                ws,
                strategy,
                hp,
                role=job.params.get("role", "all"),
                corpus_id=job.params.get("corpus"),
                log=job.log.append,
            )
        else:  # pragma: no cover - submit() fixes the kinds
            raise ValueError(f"unknown job kind {job.kind!r}")


def _parse_strategy(name: str) -> Strategy:
    try:
        return Strategy.from_name(name)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None


def create_app(workspace_root: str | Path, ui_dir: str | Path | None = None) -> FastAPI:
    svc = Service(workspace_root)
    app = FastAPI(title="valuescope", docs_url=None, redoc_url=None)
    app.state.svc = svc

    def envelope(data, strategy=None, model_digest=None):
        return {
            "lexicon_hash": svc.workspace.lexicon.version_hash,
            "strategy": str(strategy) if strategy else None,
            "model_digest": model_digest,
            "data": data,
        }

    def corpus_or_404(corpus_id: str):
        try:
            return svc.workspace.corpus(corpus_id)
        except WorkspaceError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from None

    def slice_or_error(corpus_id: str):
        """Load a slice's vectors, mapping absence to 404 and staleness to 409."""
        corpus_or_404(corpus_id)
        try:
            vectors, meta = slice_vectors(svc.workspace, corpus_id)
        except MissingArtifactError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from None
        if not model_is_current(svc.workspace, meta):
            raise HTTPException(
                status_code=409,
                detail=(
                    f"slice model for {corpus_id!r} is stale; re-request after "
                    "a training job completes"
                ),
            )
        return vectors, meta

    @app.get("/corpora")
    def get_corpora():
        rows = []
        for cid, corpus in svc.workspace.corpora.items():
            stats = corpus_stats(corpus)
            rows.append(
                {
                    "id": cid,
                    "texts": stats.text_count,
                    "symbols": stats.symbol_count,
                    "words": stats.word_count,
                }
            )
        return envelope(rows)

    @app.get("/corpora/{corpus_id}/texts")
    def get_corpus_texts(corpus_id: str):
        corpus = corpus_or_404(corpus_id)
        rows = [
            {"id": f"{corpus_id}/{text.id}", "title": text.title}
            for text in corpus.texts
        ]
        return envelope(rows)

    @app.get("/texts/{text_id:path}")
    def get_text(text_id: str, strategy: str = "snowball"):
        strat = _parse_strategy(strategy)
        try:
            text = svc.workspace.text(text_id)
        except WorkspaceError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from None
        annotation_set = annotations_for(svc.workspace, text.corpus_id, strat)
        spans = [
            {
                "token_index": a.token_index,
                "surface": a.surface,
                "stem": a.stem,
                "label": a.label,
                "value": a.value.value,
                "start": a.start,
                "end": a.end,
            }
            for a in annotation_set.per_text().get(text.id, [])
        ]
        data = {
            "id": f"{text.corpus_id}/{text.id}",
            "corpus_id": text.corpus_id,
            "title": text.title,
            "raw": text.raw,
            "annotations": spans,
        }
        return envelope(data, strategy=strat)

    @app.get("/lexicon")
    def get_lexicon():
        lexicon = svc.workspace.lexicon
        data = {
            "text": serialize_lexicon(lexicon),
            "hash": lexicon.version_hash,
            "groups": [
                {
                    "label": g.label,
                    "synonyms": list(g.synonyms),
                    "value": g.value.value,
                }
                for g in lexicon.groups
            ],
        }
        return envelope(data)

    @app.put("/lexicon")
    def put_lexicon(payload: dict = Body(...), strategy: str = "snowball"):
        strat = _parse_strategy(strategy)
        text = payload.get("text")
        if not isinstance(text, str):
            raise HTTPException(
                status_code=400, detail="body must be {'text': '<lexicon file>'}"
            )
        try:
            lexicon = parse_lexicon(text)
            compile_lexicon(lexicon, strat)  # surface stem collisions now, not in jobs
        except LexiconError as exc:
            return JSONResponse(
                status_code=400,
                content={"errors": [{"line": exc.line, "message": str(exc)}]},
            )
        with svc.write_lock:
            svc.workspace = save_lexicon(svc.workspace, lexicon)
        return envelope({"hash": lexicon.version_hash, "groups": len(lexicon.groups)})

    @app.get("/heatmap")
    def get_heatmap(
        strategy: str = "snowball", group_by: str = "label", per: str = "text"
    ):
        strat = _parse_strategy(strategy)
        try:
            table = heatmap(svc.workspace, strat, group_by, per)
        except WorkspaceError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        data = {
            "group_by": table.group_by,
            "per": table.per,
            "rows": list(table.rows),
            "cols": list(table.cols),
            "counts": [list(row) for row in table.counts],
        }
        return envelope(data, strategy=strat)

    @app.get("/venn")
    def get_venn(strategy: str = "snowball"):
        strat = _parse_strategy(strategy)
        return envelope(venn(svc.workspace, strat), strategy=strat)

    @app.post("/jobs/annotate")
    def post_annotate_job(payload: dict = Body(default={})):
        _parse_strategy(payload.get("strategy", "snowball"))
        job = svc.submit("annotate", payload)
        return envelope({"id": job.id, "status": job.status})

    @app.post("/jobs/train")
    def post_train_job(payload: dict = Body(default={})):
        _parse_strategy(payload.get("strategy", "snowball"))
        try:
            Hyperparams(**payload.get("hyperparams", {}))
        except (TypeError, ValueError) as exc:
            raise HTTPException(
                status_code=400, detail=f"hyperparams: {exc}"
            ) from None
        job = svc.submit("train", payload)
        return envelope({"id": job.id, "status": job.status})

    @app.get("/jobs/{job_id}")
    def get_job(job_id: str):
        job = svc.jobs.get(job_id)
        if job is None:
            raise HTTPException(status_code=404, detail=f"unknown job {job_id!r}")
        data = {
            "id": job.id,
            "kind": job.kind,
            "status": job.status,
            "log": job.log[-20:],
            "error": job.error,
        }
        return envelope(data)

    @app.get("/similarity")
    def get_similarity(corpus: str, a: str, b: str):
        vectors, meta = slice_or_error(corpus)
        try:
            value = cosine(vectors, a, b)
        except KeyError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        data = {"corpus": corpus, "a": a, "b": b, "cosine": value}
        return envelope(data, strategy=meta["strategy"], model_digest=meta_digest(meta))

    @app.get("/clusters")
    def get_clusters(corpus: str, k: int = 2, theta: float = 0.5):
        slice_or_error(corpus)
        try:
            graph, meta = slice_graph(svc.workspace, corpus, theta)
            community_set, _ = clusters(svc.workspace, corpus, k, theta)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        data = {
            "graph": graph_json(graph),
            "communities": communities_json(community_set),
        }
        return envelope(data, strategy=meta["strategy"], model_digest=meta_digest(meta))

    @app.get("/clusters/compare")
    def get_clusters_compare(seed: str, k: int = 2, theta: float = 0.5):
        community_sets = []
        metas = []
        for cid in svc.workspace.corpora:
            slice_or_error(cid)
            try:
                community_set, meta = clusters(svc.workspace, cid, k, theta)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from None
            community_sets.append(community_set)
            metas.append(meta)
        digest = meta_digest({"slices": [meta_digest(m) for m in metas]})
        return envelope(
            compare_json(community_sets, seed),
            strategy=metas[0]["strategy"] if metas else None,
            model_digest=digest,
        )

    if ui_dir and Path(ui_dir).is_dir():
        # declared last so every API route above wins the match
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def app_from_env() -> FastAPI:
    """Factory for ``uvicorn --factory valuescope.service:app_from_env``.

    Reads VALUESCOPE_WORKSPACE (required) and VALUESCOPE_UI_DIR (optional).
    """
    import os

    root = os.environ.get("VALUESCOPE_WORKSPACE")
    if not root:
        raise RuntimeError("VALUESCOPE_WORKSPACE is not set")
    return create_app(root, os.environ.get("VALUESCOPE_UI_DIR"))


def run(workspace_root: str | Path, host: str, port: int) -> None:
    import os

    import uvicorn

    ui_dir = os.environ.get("VALUESCOPE_UI_DIR")
    if ui_dir is None:
        bundled = Path.cwd() / "frontend" / "dist"
        ui_dir = bundled if bundled.is_dir() else None
    uvicorn.run(create_app(workspace_root, ui_dir), host=host, port=port)
