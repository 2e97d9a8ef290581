"""Shared fixtures. The deterministic CLI pipeline is session-scoped because
training the mini models takes ~15s and several test modules compare against
the same run."""

import shutil
import subprocess
import sys
import time
from pathlib import Path

import pytest

MINI_WORKSPACE = Path(__file__).parent.parent / "workspaces" / "mini"
GOLDEN = Path(__file__).parent / "golden" / "mini"

# the profile the committed goldens were produced with
MINI_TRAIN_FLAGS = [
    "--strategy", "snowball",
    "--dimension", "24",
    "--window", "3",
    "--epochs-compass", "60",
    "--epochs-slice", "60",
    "--subsample", "0.01",
    "--seed", "7",
    "--deterministic",
]


def run_cli(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "valuescope.cli", *map(str, args)],
        capture_output=True,
        text=True,
    )


@pytest.fixture(scope="session")
def cli_pipeline(tmp_path_factory):
    """Full deterministic pipeline on a copy of the mini workspace.

    Returns (workspace_dir, out_dir, elapsed_seconds)."""
    root = tmp_path_factory.mktemp("cli-pipeline")
    ws = root / "mini"
    out = root / "out"
    shutil.copytree(MINI_WORKSPACE, ws)
    steps = [
        ["stats", ws, "--out", out],
        ["annotate", ws, "--strategy", "snowball", "--out", out],
        ["train", ws, *MINI_TRAIN_FLAGS, "--out", out],
        ["variation", ws, "--theta", "0.6", "--k", "2", "--seed-label", "mother",
         "--out", out],
        ["sweep", ws, "--theta-grid=-1,0,0.5,0.9", "--out", out],
    ]
    started = time.monotonic()
    for argv in steps:
        result = run_cli(*argv)
        assert result.returncode == 0, (argv[0], result.stderr)
    elapsed = time.monotonic() - started
    return ws, out, elapsed
