"""Workspace layout, annotation cache, lexicon history, and the model store."""

import json
import shutil
from pathlib import Path

import pytest

from valuescope.embedding.model import Hyperparams, load_compass
from valuescope.generalize import Strategy
from valuescope.lexicon import parse_lexicon
from valuescope.workspace import (
    MissingArtifactError,
    WorkspaceError,
    annotations_for,
    clusters,
    compass_meta,
    heatmap,
    model_is_current,
    open_workspace,
    save_lexicon,
    slice_vectors,
    sweep,
    train_models,
    union_digest,
    venn,
)

MINI = Path(__file__).parent.parent / "workspaces" / "mini"

TINY = Hyperparams(
    dimension=8, window=2, epochs_compass=2, epochs_slice=2, min_count=2, rng_seed=5
)


@pytest.fixture()
def ws(tmp_path):
    shutil.copytree(MINI, tmp_path / "mini")
    return open_workspace(tmp_path / "mini")


def test_open_loads_sorted_corpora_and_lexicon(ws):
    assert list(ws.corpora) == ["alpha", "beta", "gamma"]
    assert len(ws.lexicon.groups) == 29


def test_open_missing_root_is_filesystem_error(tmp_path):
    with pytest.raises(MissingArtifactError):
        open_workspace(tmp_path / "absent")
    # the same exception doubles as FileNotFoundError for generic handlers
    with pytest.raises(FileNotFoundError):
        open_workspace(tmp_path / "absent")


def test_open_without_lexicon_uses_default(tmp_path, ws):
    (ws.root / "lexicon.txt").unlink()
    again = open_workspace(ws.root)
    assert again.lexicon.version_hash == ws.lexicon.version_hash


def test_unknown_corpus_and_text(ws):
    with pytest.raises(WorkspaceError, match="delta"):
        ws.corpus("delta")
    with pytest.raises(WorkspaceError, match="corpus_id/text_id"):
        ws.text("the-lantern-keeper")
    text = ws.text("alpha/the-lantern-keeper")
    assert text.title == "The Lantern Keeper"


def test_annotation_cache_round_trip(ws):
    first = annotations_for(ws, "alpha", Strategy.SNOWBALL)
    cache_dir = ws.root / "cache" / "annotations"
    files = list(cache_dir.glob("alpha.*.snowball.jsonl"))
    assert len(files) == 1
    # tamper check: the second call must come from the file, not recompute
    second = annotations_for(ws, "alpha", Strategy.SNOWBALL)
    assert second == first
    files[0].write_text("", encoding="utf-8")
    assert annotations_for(ws, "alpha", Strategy.SNOWBALL).annotations == ()


def test_cache_keys_differ_by_strategy_and_lexicon(ws):
    annotations_for(ws, "alpha", Strategy.SNOWBALL)
    annotations_for(ws, "alpha", Strategy.LANCASTER)
    cache_dir = ws.root / "cache" / "annotations"
    assert len(list(cache_dir.glob("alpha.*.jsonl"))) == 2
    smaller = parse_lexicon("mother,mother;father,Benevolence\n")
    ws2 = save_lexicon(ws, smaller)
    annotations_for(ws2, "alpha", Strategy.SNOWBALL)
    assert len(list(cache_dir.glob("alpha.*.snowball.jsonl"))) == 2


def test_lexicon_history_numbering(ws):
    first = parse_lexicon("mother,mother,Benevolence\n")
    second = parse_lexicon("mother,mother;father,Benevolence\n")
    ws = save_lexicon(ws, first)
    ws = save_lexicon(ws, second)
    history = sorted((ws.root / "lexicon_history").glob("*.txt"))
    assert [p.name for p in history] == ["0001.txt", "0002.txt"]
    # 0002 holds the version replaced second, i.e. `first`
    assert parse_lexicon(history[1].read_text()).version_hash == first.version_hash
    assert (
        parse_lexicon((ws.root / "lexicon.txt").read_text()).version_hash
        == second.version_hash
    )


def test_heatmap_per_text_uses_qualified_columns(ws):
    table = heatmap(ws, Strategy.SNOWBALL, "label", "text")
    assert len(table.cols) == 15
    assert all("/" in c for c in table.cols)
    assert table.cols[0].startswith("alpha/")
    per_corpus = heatmap(ws, Strategy.SNOWBALL, "label", "corpus")
    assert table.total() == per_corpus.total() == 418
    with pytest.raises(WorkspaceError, match="group_by"):
        heatmap(ws, Strategy.SNOWBALL, "lemma", "text")


def test_venn_consistent_with_service_shape(ws):
    payload = venn(ws, Strategy.SNOWBALL)
    assert payload["corpora"] == ["alpha", "beta", "gamma"]
    assert payload["regions"]["7"] == ["love", "mother"]


def test_train_all_then_slice_only(ws):
    result = train_models(ws, Strategy.SNOWBALL, TINY)
    assert set(result["slices"]) == {"alpha", "beta", "gamma"}
    meta = compass_meta(ws)
    assert meta["corpus_digest"] == union_digest(ws)
    assert model_is_current(ws, meta)
    # retrain one slice from the on-disk compass
    again = train_models(ws, Strategy.SNOWBALL, TINY, role="slice", corpus_id="beta")
    assert list(again["slices"]) == ["beta"]
    assert again["slices"]["beta"]["frozen_c_digest"] == meta["frozen_c_digest"]


def test_compass_reload_is_lossless(ws):
    train_models(ws, Strategy.SNOWBALL, TINY, role="compass")
    loaded = load_compass(ws.root / "models")
    meta = compass_meta(ws)
    from valuescope.embedding.model import matrix_digest

    assert matrix_digest(loaded.vocab.tokens, loaded.C) == meta["frozen_c_digest"]
    assert not loaded.U.flags.writeable


def test_slice_requires_compass(ws):
    with pytest.raises(MissingArtifactError, match="compass"):
        train_models(ws, Strategy.SNOWBALL, TINY, role="slice")
    with pytest.raises(MissingArtifactError, match="training"):
        slice_vectors(ws, "alpha")


def test_model_staleness_on_lexicon_change(ws):
    train_models(ws, Strategy.SNOWBALL, TINY)
    _, meta = slice_vectors(ws, "alpha")
    assert model_is_current(ws, meta)
    ws2 = save_lexicon(ws, parse_lexicon("mother,mother,Benevolence\n"))
    assert not model_is_current(ws2, meta)
    assert not model_is_current(ws2, compass_meta(ws2))


def test_clusters_and_sweep_run_on_stored_slices(ws):
    train_models(ws, Strategy.SNOWBALL, TINY)
    community_set, meta = clusters(ws, "alpha", 2, -1.0)
    assert meta["corpus_id"] == "alpha"
    # complete graph at theta = -1: every present label in one community
    assert len(community_set.communities) == 1
    points = sweep(ws, "alpha", [-1.0, 1.0])
    assert points[0].edge_count >= points[1].edge_count
    with pytest.raises(WorkspaceError, match="delta"):
        clusters(ws, "delta", 2, 0.5)


def test_train_rejects_bad_role(ws):
    with pytest.raises(WorkspaceError, match="role"):
        train_models(ws, Strategy.SNOWBALL, TINY, role="everything")


def test_compass_meta_records_inputs(ws):
    train_models(ws, Strategy.SNOWBALL, TINY, role="compass")
    meta = json.loads((ws.root / "models" / "compass.meta.json").read_text())
    assert meta["strategy"] == "snowball"
    assert meta["lexicon_hash"] == ws.lexicon.version_hash
    assert meta["hyperparams"]["rng_seed"] == 5
    assert meta["mode"] == "deterministic"
