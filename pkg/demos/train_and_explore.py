"""
Training aligned embeddings and exploring semantic variation
============================================================

The second half of the pipeline: train one shared-context model over the
union of all corpora, fine-tune a slice per corpus against its frozen
context matrix, then compare a label's neighborhood across slices. Takes
about 15 seconds. Run from the repository root:

    python3 demos/train_and_explore.py
"""

import shutil
import tempfile
from pathlib import Path

from valuescope.embedding.model import Hyperparams, nearest
from valuescope.generalize import Strategy
from valuescope.variation import compare_across
from valuescope.workspace import (
    clusters,
    open_workspace,
    slice_graph,
    slice_vectors,
    sweep,
    train_models,
)

# work on a throwaway copy: training writes model files into the workspace
source = Path(__file__).parent.parent / "workspaces" / "mini"
scratch = Path(tempfile.mkdtemp(prefix="valuescope-demo-")) / "mini"
shutil.copytree(source, scratch)
workspace = open_workspace(scratch)

profile = Hyperparams(
    dimension=24, window=3, epochs_compass=60, epochs_slice=60,
    min_count=2, subsample=0.01, rng_seed=7, deterministic=True,
)
print("training compass and slices (deterministic, seed 7)...")
train_models(workspace, Strategy.SNOWBALL, profile)

# slices share coordinates, so the same query is comparable across corpora
for cid in workspace.corpora:
    vectors, _ = slice_vectors(workspace, cid)
    neighbors = ", ".join(f"{t} {w:.2f}" for t, w in nearest(vectors, "mother", 3))
    print(f"{cid}: mother -> {neighbors}")

# the similarity graph keeps only label pairs above the cosine threshold;
# communities are its k-clique percolations
print("\ncommunities at theta=0.6, k=2:")
for cid in workspace.corpora:
    community_set, _ = clusters(workspace, cid, 2, 0.6)
    rendered = " | ".join(
        ",".join(sorted(c)) for c in sorted(community_set.communities, key=sorted)
    )
    print(f"  {cid}: {rendered or '(none)'}")

# where does 'mother' sit across corpora? the comparison assigns each
# co-member to the region of corpora whose communities contain it
graphs = {cid: slice_graph(workspace, cid, 0.6)[0] for cid in workspace.corpora}
community_sets = {cid: clusters(workspace, cid, 2, 0.6)[0] for cid in workspace.corpora}
regions = compare_across(list(community_sets.values()), "mother")
print("\nco-members of 'mother' by corpus region (bitmask over corpus order):")
for mask, labels in sorted(regions.items()):
    print(f"  region {mask}: {', '.join(sorted(labels))}")

# picking theta is empirical; the sweep shows how the graph thins out
print("\nedge counts while raising the threshold (alpha slice):")
for point in sweep(workspace, "alpha", [-1.0, 0.0, 0.5, 0.9]):
    print(f"  theta {point.theta:>5}: {point.edge_count:>3} edges,"
          f" {point.component_count} components")

shutil.rmtree(scratch.parent)
