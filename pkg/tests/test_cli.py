"""Command line contract: exit codes, one-line errors, golden artifacts."""

import json
import re
import shutil
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from tests.conftest import GOLDEN, MINI_WORKSPACE, run_cli

ERROR_LINE = re.compile(r"^(validation|io|internal): \S.*$")


def relative_files(root: Path) -> list[Path]:
    return sorted(p.relative_to(root) for p in root.rglob("*") if p.is_file())


class TestGoldens:
    def test_out_artifacts_byte_identical(self, cli_pipeline):
        _, out, _ = cli_pipeline
        golden = GOLDEN / "out"
        assert relative_files(out) == relative_files(golden)
        for rel in relative_files(golden):
            assert (out / rel).read_bytes() == (golden / rel).read_bytes(), str(rel)

    def test_model_files_byte_identical(self, cli_pipeline):
        ws, _, _ = cli_pipeline
        golden = GOLDEN / "models"
        produced = ws / "models"
        assert relative_files(produced) == relative_files(golden)
        for rel in relative_files(golden):
            assert (produced / rel).read_bytes() == (golden / rel).read_bytes(), str(
                rel
            )

    def test_pipeline_under_three_minutes(self, cli_pipeline):
        _, _, elapsed = cli_pipeline
        assert elapsed < 180.0

    def test_service_serves_same_report_artifacts(self, cli_pipeline):
        # the JSON documents behind /venn and /clusters must match the CLI
        # files byte for byte once serialized by the shared writer
        ws, _, _ = cli_pipeline
        from valuescope.cli import _json_text
        from valuescope.service import create_app

        client = TestClient(create_app(ws))
        venn_data = client.get("/venn", params={"strategy": "snowball"}).json()["data"]
        golden_venn = (GOLDEN / "out" / "venn.json").read_bytes()
        assert _json_text(venn_data).encode() == golden_venn
        for cid in ("alpha", "beta", "gamma"):
            payload = client.get(
                "/clusters", params={"corpus": cid, "k": 2, "theta": 0.6}
            ).json()["data"]
            graph = (GOLDEN / "out" / "graphs" / f"{cid}.json").read_bytes()
            communities = (
                GOLDEN / "out" / "communities" / f"{cid}.json"
            ).read_bytes()
            assert _json_text(payload["graph"]).encode() == graph
            assert _json_text(payload["communities"]).encode() == communities


class TestExitCodes:
    def test_success_is_zero(self, tmp_path):
        result = run_cli("stats", MINI_WORKSPACE, "--out", tmp_path)
        assert result.returncode == 0
        assert "alpha,5,6162,1152" in result.stdout

    def test_missing_workspace_is_io(self, tmp_path):
        result = run_cli("stats", tmp_path / "absent")
        assert result.returncode == 3
        assert result.stderr.startswith("io: ")

    def test_bad_strategy_is_validation(self, tmp_path):
        result = run_cli("annotate", MINI_WORKSPACE, "--strategy", "porter9",
                         "--out", tmp_path)
        assert result.returncode == 2
        assert "porter9" in result.stderr

    def test_unknown_corpus_is_validation(self, tmp_path):
        result = run_cli("variation", MINI_WORKSPACE, "--corpus", "delta",
                         "--out", tmp_path)
        assert result.returncode == 2

    def test_models_missing_is_io(self, tmp_path):
        ws = tmp_path / "mini"
        shutil.copytree(MINI_WORKSPACE, ws)
        result = run_cli("variation", ws, "--out", tmp_path / "out")
        assert result.returncode == 3
        assert "compass" in result.stderr or "training" in result.stderr

    def test_bad_hyperparameter_is_validation(self, tmp_path):
        result = run_cli("train", MINI_WORKSPACE, "--dimension", "0",
                         "--out", tmp_path)
        assert result.returncode == 2

    def test_bad_theta_grid_is_validation(self, tmp_path):
        result = run_cli("sweep", MINI_WORKSPACE, "--theta-grid", "a,b",
                         "--out", tmp_path)
        assert result.returncode == 2
        assert "theta grid" in result.stderr

    def test_bad_bind_address_is_validation(self):
        result = run_cli("serve", MINI_WORKSPACE, "--bind", "nonsense")
        assert result.returncode == 2

    def test_errors_are_one_machine_parseable_line(self, tmp_path):
        failures = [
            ("stats", tmp_path / "absent"),
            ("annotate", MINI_WORKSPACE, "--strategy", "porter9", "--out", tmp_path),
            ("sweep", MINI_WORKSPACE, "--theta-grid", "a", "--out", tmp_path),
        ]
        for argv in failures:
            result = run_cli(*argv)
            lines = result.stderr.splitlines()
            assert len(lines) == 1, argv
            assert ERROR_LINE.match(lines[0]), lines[0]


class TestExport:
    def test_csv_export_matches_annotate_artifacts(self, cli_pipeline, tmp_path):
        ws, out, _ = cli_pipeline
        result = run_cli("export", ws, "--format", "csv", "--theta", "0.6",
                         "--k", "2", "--out", tmp_path)
        assert result.returncode == 0
        assert (tmp_path / "counts.csv").read_bytes() == (
            out / "counts.csv"
        ).read_bytes()
        assert (tmp_path / "graphs" / "alpha.json").read_bytes() == (
            out / "graphs" / "alpha.json"
        ).read_bytes()

    def test_json_export_shape(self, cli_pipeline, tmp_path):
        ws, _, _ = cli_pipeline
        result = run_cli("export", ws, "--format", "json", "--out", tmp_path)
        assert result.returncode == 0
        stats = json.loads((tmp_path / "stats.json").read_text())
        assert stats[0] == {
            "corpus": "alpha", "texts": 5, "symbols": 6162, "words": 1152
        }
        counts = json.loads((tmp_path / "counts.json").read_text())
        assert counts["per"] == "text"
        assert len(counts["cols"]) == 15

    def test_export_without_models_skips_graphs(self, tmp_path):
        ws = tmp_path / "mini"
        shutil.copytree(MINI_WORKSPACE, ws)
        result = run_cli("export", ws, "--format", "csv", "--out", tmp_path / "out")
        assert result.returncode == 0
        assert not (tmp_path / "out" / "graphs").exists()
        assert (tmp_path / "out" / "venn.json").exists()


def test_deterministic_seed_changes_vectors(tmp_path):
    # same flags, different seed: a different model, proving --seed is honored
    ws = tmp_path / "mini"
    shutil.copytree(MINI_WORKSPACE, ws)
    flags = ["--dimension", "8", "--window", "2", "--epochs-compass", "2",
             "--epochs-slice", "2", "--deterministic", "--role", "compass"]
    run_cli("train", ws, *flags, "--seed", "1", "--out", tmp_path / "o1")
    first = (ws / "models" / "compass.vectors.txt").read_bytes()
    run_cli("train", ws, *flags, "--seed", "2", "--out", tmp_path / "o2")
    second = (ws / "models" / "compass.vectors.txt").read_bytes()
    assert first != second
