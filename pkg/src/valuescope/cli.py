"""Batch pipeline driver.

Every subcommand takes a workspace root and writes its artifacts under
``--out`` (default ``<workspace>/out``). Errors print one line to
stderr, ``<class>: <message>`` with class in {validation, io,
internal}, and exit 2/3/4 respectively.
"""

import argparse
import json
import sys
from pathlib import Path

from .corpus import CorpusError, stats_csv
from .embedding.model import Hyperparams
from .generalize import Strategy
from .lexicon import LexiconError
from .variation import communities_json, compare_json, graph_json
from .workspace import (
    Workspace,
    WorkspaceError,
    all_annotations,
    annotations_for,
    clusters,
    heatmap,
    open_workspace,
    slice_graph,
    sweep,
    train_models,
    venn,
)
from .annotate import annotations_jsonl

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IO = 3
EXIT_INTERNAL = 4


def _strategy(name: str) -> Strategy:
    return Strategy.from_name(name)


def _out_dir(args) -> Path:
    out = Path(args.out) if args.out else Path(args.workspace) / "out"
    out.mkdir(parents=True, exist_ok=True)
    return out


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path}")


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def cmd_stats(args) -> int:
    ws = open_workspace(args.workspace)
    csv = stats_csv([ws.corpora[cid] for cid in ws.corpora])
    sys.stdout.write(csv)
    if args.out:
        _write(_out_dir(args) / "stats.csv", csv)
    return EXIT_OK


def cmd_annotate(args) -> int:
    ws = open_workspace(args.workspace)
    strategy = _strategy(args.strategy)
    out = _out_dir(args)
    sets = all_annotations(ws, strategy)
    for annotation_set in sets:
        print(f"{annotation_set.corpus_id}: {len(annotation_set.annotations)} annotations")
        _write(
            out / "annotations" / f"{annotation_set.corpus_id}.jsonl",
            annotations_jsonl(annotation_set),
        )
    _write(out / "counts.csv", heatmap(ws, strategy, "label", "text").to_csv())
    _write(out / "venn.json", _json_text(venn(ws, strategy)))
    return EXIT_OK


def _hyperparams(args) -> Hyperparams:
    overrides = {
        "dimension": args.dimension,
        "window": args.window,
        "negatives": args.negatives,
        "epochs_compass": args.epochs_compass,
        "epochs_slice": args.epochs_slice,
        "min_count": args.min_count,
        "learning_rate": args.learning_rate,
        "subsample": args.subsample,
        "architecture": args.architecture,
        "rng_seed": args.seed,
        "deterministic": args.deterministic,
    }
    return Hyperparams(**{k: v for k, v in overrides.items() if v is not None})


def cmd_train(args) -> int:
    ws = open_workspace(args.workspace)
    strategy = _strategy(args.strategy)
    result = train_models(
        ws,
        strategy,
        _hyperparams(args),
        role=args.role,
        corpus_id=args.corpus,
        log=print,
    )
    if "compass" in result:
        print(f"compass context digest {result['compass']['frozen_c_digest'][:16]}")
    for cid, meta in result.get("slices", {}).items():
        print(f"slice {cid} against context {meta['frozen_c_digest'][:16]}")
    return EXIT_OK


def cmd_variation(args) -> int:
    ws = open_workspace(args.workspace)
    out = _out_dir(args)
    targets = [args.corpus] if args.corpus else list(ws.corpora)
    community_sets = []
    for cid in targets:
        graph, _ = slice_graph(ws, cid, args.theta)
        community_set, _ = clusters(ws, cid, args.k, args.theta)
        community_sets.append(community_set)
        _write(out / "graphs" / f"{cid}.json", _json_text(graph_json(graph)))
        _write(
            out / "communities" / f"{cid}.json",
            _json_text(communities_json(community_set)),
        )
        summary = " | ".join(",".join(sorted(c)) for c in community_set.communities)
        print(f"{cid}: {len(community_set.communities)} communities  {summary}")
    if args.seed_label:
        payload = compare_json(community_sets, args.seed_label)
        _write(out / f"compare.{args.seed_label}.json", _json_text(payload))
    return EXIT_OK


def cmd_sweep(args) -> int:
    ws = open_workspace(args.workspace)
    out = _out_dir(args)
    try:
        grid = [float(x) for x in args.theta_grid.split(",") if x.strip()]
    except ValueError:
        raise ValueError(f"bad theta grid {args.theta_grid!r}; expected a,b,c floats")
    targets = [args.corpus] if args.corpus else list(ws.corpora)
    lines = ["corpus,theta,edge_count,component_count"]
    for cid in targets:
        for point in sweep(ws, cid, grid):
            lines.append(
                f"{cid},{point.theta},{point.edge_count},{point.component_count}"
            )
    _write(out / "sweep.csv", "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_export(args) -> int:
    ws = open_workspace(args.workspace)
    strategy = _strategy(args.strategy)
    out = _out_dir(args)
    table = heatmap(ws, strategy, "label", "text")
    if args.format == "csv":
        _write(out / "stats.csv", stats_csv([ws.corpora[cid] for cid in ws.corpora]))
        _write(out / "counts.csv", table.to_csv())
    else:
        rows = [
            {
                "corpus": c.id,
                "texts": s.text_count,
                "symbols": s.symbol_count,
                "words": s.word_count,
            }
            for c, s in ((ws.corpora[cid], _stats_of(ws, cid)) for cid in ws.corpora)
        ]
        _write(out / "stats.json", _json_text(rows))
        _write(
            out / "counts.json",
            _json_text(
                {
                    "group_by": table.group_by,
                    "per": table.per,
                    "rows": list(table.rows),
                    "cols": list(table.cols),
                    "counts": [list(r) for r in table.counts],
                }
            ),
        )
    for annotation_set in all_annotations(ws, strategy):
        _write(
            out / "annotations" / f"{annotation_set.corpus_id}.jsonl",
            annotations_jsonl(annotation_set),
        )
    _write(out / "venn.json", _json_text(venn(ws, strategy)))
    models = Path(args.workspace) / "models" / "slices"
    if models.is_dir() and any(models.glob("*.vectors.txt")):
        for cid in ws.corpora:
            graph, _ = slice_graph(ws, cid, args.theta)
            community_set, _ = clusters(ws, cid, args.k, args.theta)
            _write(out / "graphs" / f"{cid}.json", _json_text(graph_json(graph)))
            _write(
                out / "communities" / f"{cid}.json",
                _json_text(communities_json(community_set)),
            )
    else:
        print("no slice models on disk; skipping graph/community artifacts")
    return EXIT_OK


def _stats_of(ws: Workspace, corpus_id: str):
    from .corpus import corpus_stats

    return corpus_stats(ws.corpora[corpus_id])


def cmd_serve(args) -> int:
    from .service import run as run_service

    host, _, port = args.bind.rpartition(":")
    if not host or not port.isdigit():
        raise ValueError(f"bad bind address {args.bind!r}; expected host:port")
    run_service(args.workspace, host, int(port))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="valuescope",
        description="Value annotation and semantic variation pipeline.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, strategy: bool = False) -> None:
        p.add_argument("workspace", help="workspace root directory")
        p.add_argument("--out", help="output directory (default <workspace>/out)")
        if strategy:
            p.add_argument(
                "--strategy",
                default="snowball",
                help="generalization strategy (default snowball)",
            )

    p = sub.add_parser("stats", help="corpus size table")
    common(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("annotate", help="annotate all corpora; counts and regions")
    common(p, strategy=True)
    p.set_defaults(func=cmd_annotate)

    p = sub.add_parser("train", help="train compass and slice embeddings")
    common(p, strategy=True)
    p.add_argument("--role", choices=("compass", "slice", "all"), default="all")
    p.add_argument("--corpus", help="restrict slice training to one corpus")
    p.add_argument("--dimension", type=int)
    p.add_argument("--window", type=int)
    p.add_argument("--negatives", type=int)
    p.add_argument("--epochs-compass", type=int)
    p.add_argument("--epochs-slice", type=int)
    p.add_argument("--min-count", type=int)
    p.add_argument("--learning-rate", type=float)
    p.add_argument("--subsample", type=float)
    p.add_argument("--architecture", choices=("cbow", "skipgram"))
    p.add_argument("--seed", type=int)
    p.add_argument(
        "--deterministic",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="record deterministic mode (default on)",
    )
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("variation", help="label graphs and communities per corpus")
    common(p)
    p.add_argument("--theta", type=float, default=0.5)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--corpus", help="restrict to one corpus")
    p.add_argument("--seed-label", help="emit the cross-corpus region partition")
    p.set_defaults(func=cmd_variation)

    p = sub.add_parser("sweep", help="edge/component counts across thresholds")
    common(p)
    p.add_argument("--theta-grid", required=True, help="comma-separated thresholds")
    p.add_argument("--corpus", help="restrict to one corpus")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("export", help="all report artifacts in one pass")
    common(p, strategy=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--theta", type=float, default=0.5)
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("serve", help="run the HTTP service")
    common(p, strategy=True)
    p.add_argument("--bind", default="127.0.0.1:8000", help="host:port")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, UnicodeDecodeError, CorpusError) as exc:
        print(f"io: {_one_line(exc)}", file=sys.stderr)
        return EXIT_IO
    except (LexiconError, WorkspaceError, ValueError, KeyError) as exc:
        print(f"validation: {_one_line(exc)}", file=sys.stderr)
        return EXIT_VALIDATION
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal: {type(exc).__name__}: {_one_line(exc)}", file=sys.stderr)
        return EXIT_INTERNAL


def _one_line(exc: BaseException) -> str:
    return " ".join(str(exc).split())


if __name__ == "__main__":
    sys.exit(main())
