"""Co-clustering stability across training seeds.

Communities on a small corpus shift with the training seed, so any single
run's cluster memberships are weak evidence. The stability sweep retrains
the whole model stack once per seed and tabulates, for chosen
(corpus, companion) pairs, in how many runs the companion landed in the
same community as the seed label. A pair that co-clusters in 9 of 10 seeds
is a property of the corpus; one that appears in 2 of 10 is noise.

Retraining is deliberate: reusing one compass across seeds would correlate
the runs and overstate stability.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Mapping, Sequence

from .annotate import marked_documents
from .embedding.model import Hyperparams
from .embedding.train import train_compass, train_slice
from .generalize import Strategy
from .variation import clique_percolation, community_of, label_graph
from .workspace import Workspace, annotations_for


@dataclass(frozen=True)
class StabilityReport:
    seed_label: str
    theta: float
    k: int
    strategy: str
    seeds: tuple[int, ...]
    corpora: tuple[str, ...]
    probes: tuple[str, ...]
    # counts[corpus][probe] = seeds in which probe co-clustered with seed_label
    counts: Mapping[str, Mapping[str, int]]
    # companions[corpus][seed] = every co-member observed in that run
    companions: Mapping[str, Mapping[int, tuple[str, ...]]]

    def frequency(self, corpus_id: str, probe: str) -> float:
        return self.counts[corpus_id][probe] / len(self.seeds)


def seed_stability(
    workspace: Workspace,
    strategy: Strategy,
    hyperparams: Hyperparams,
    seeds: Sequence[int],
    theta: float = 0.5,
    k: int = 2,
    seed_label: str = "mother",
    probes: Sequence[str] | None = None,
    log: Callable[[str], None] | None = None,
) -> StabilityReport:
    """Retrain per seed and count co-cluster events for each probe label."""
    if not seeds:
        raise ValueError("seeds must be non-empty")
    say = log or (lambda message: None)
    docs = {
        cid: marked_documents(
            workspace.corpora[cid], annotations_for(workspace, cid, strategy)
        )
        for cid in workspace.corpora
    }
    union_docs = [doc for cid in workspace.corpora for doc in docs[cid]]
    companions: dict[str, dict[int, tuple[str, ...]]] = {
        cid: {} for cid in workspace.corpora
    }
    for seed in seeds:
        hp = replace(hyperparams, rng_seed=seed, deterministic=True)
        say(f"seed {seed}: training compass")
        compass = train_compass(union_docs, hp)
        for cid in workspace.corpora:
            slice_model = train_slice(compass, docs[cid], cid, hp)
            labels = sorted(
                group.label
                for group in workspace.lexicon.groups
                if group.label in slice_model.vocab.index
            )
            if seed_label not in labels:
                companions[cid][seed] = ()
                continue
            graph = label_graph(slice_model, labels, theta)
            community_set = clique_percolation(graph, k)
            members: set[str] = set()
            for community in community_of(community_set, seed_label):
                members |= community
            members.discard(seed_label)
            companions[cid][seed] = tuple(sorted(members))
        say(f"seed {seed}: done")
    if probes is None:
        observed: set[str] = set()
        for per_corpus in companions.values():
            for run in per_corpus.values():
                observed |= set(run)
        probes = sorted(observed)
    counts = {
        cid: {
            probe: sum(probe in companions[cid][seed] for seed in seeds)
            for probe in probes
        }
        for cid in workspace.corpora
    }
    return StabilityReport(
        seed_label=seed_label,
        theta=theta,
        k=k,
        strategy=str(strategy),
        seeds=tuple(seeds),
        corpora=tuple(workspace.corpora),
        probes=tuple(probes),
        counts=counts,
        companions=companions,
    )


def report_csv(report: StabilityReport) -> str:
    lines = ["corpus,probe,co_cluster_runs,total_runs,frequency"]
    for cid in report.corpora:
        for probe in report.probes:
            hits = report.counts[cid][probe]
            lines.append(
                f"{cid},{probe},{hits},{len(report.seeds)},"
                f"{hits / len(report.seeds):.2f}"
            )
    return "\n".join(lines) + "\n"


def report_markdown(report: StabilityReport) -> str:
    """Human-readable stability table plus the raw per-seed memberships."""
    n = len(report.seeds)
    out = [
        f"# Co-clustering stability for `{report.seed_label}`",
        "",
        f"- strategy: {report.strategy}",
        f"- theta: {report.theta}",
        f"- k: {report.k}",
        f"- seeds: {', '.join(str(s) for s in report.seeds)}",
        "",
        f"Cell = runs (out of {n}) in which the probe label shared a"
        f" community with `{report.seed_label}`.",
        "",
        "| probe | " + " | ".join(report.corpora) + " |",
        "|---" * (len(report.corpora) + 1) + "|",
    ]
    for probe in report.probes:
        cells = " | ".join(f"{report.counts[cid][probe]}/{n}" for cid in report.corpora)
        out.append(f"| {probe} | {cells} |")
    out += ["", "## Per-seed community members", ""]
    for cid in report.corpora:
        out.append(f"### {cid}")
        out.append("")
        for seed in report.seeds:
            members = ", ".join(report.companions[cid][seed]) or "(none)"
            out.append(f"- seed {seed}: {members}")
        out.append("")
    return "\n".join(out)
