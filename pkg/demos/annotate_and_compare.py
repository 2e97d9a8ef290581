"""
Annotating a workspace and comparing label footprints
=====================================================

Walks the bundled mini workspace end to end on the lexical side: load,
annotate under a stemming strategy, look at per-corpus counts, then the
cross-corpus presence partition. Run from the repository root:

    python3 demos/annotate_and_compare.py
"""

from pathlib import Path

from valuescope.generalize import Strategy
from valuescope.workspace import annotations_for, heatmap, open_workspace, venn

workspace = open_workspace(Path(__file__).parent.parent / "workspaces" / "mini")
print(f"corpora: {', '.join(workspace.corpora)}")
print(f"lexicon: {len(workspace.lexicon.groups)} groups,"
      f" hash {workspace.lexicon.version_hash[:12]}")

# annotations are cached per (corpus digest, lexicon hash, strategy), so a
# second run of this demo reads files instead of re-annotating
for cid in workspace.corpora:
    annotation_set = annotations_for(workspace, cid, Strategy.SNOWBALL)
    print(f"{cid}: {len(annotation_set.annotations)} annotations")

# a few concordance lines: each annotation knows its surface form and span
alpha = annotations_for(workspace, "alpha", Strategy.SNOWBALL)
text = workspace.text(f"alpha/{alpha.annotations[0].text_id}")
print(f"\nfirst matches in {text.title!r}:")
for annotation in alpha.annotations[:5]:
    if annotation.text_id != text.id:
        break
    left = max(0, annotation.start - 25)
    window = text.raw[left : annotation.end + 25].replace("\n", " ")
    print(f"  [{annotation.label:>10} -> {annotation.value.name:<12}] ...{window}...")

# label-by-corpus counts, the table behind the heatmap view
table = heatmap(workspace, Strategy.SNOWBALL, "label", "corpus")
print("\nlabel counts per corpus:")
print(f"  {'label':<12}" + "".join(f"{c:>8}" for c in table.cols))
for label, row in zip(table.rows, table.counts):
    print(f"  {label:<12}" + "".join(f"{n:>8}" for n in row))

# the presence partition: which labels appear only in one corpus, which in
# every corpus, and so on; region keys are bitmasks over the corpus list
payload = venn(workspace, Strategy.SNOWBALL)
names = payload["corpora"]
print("\npresence regions:")
for region, labels in sorted(payload["regions"].items(), key=lambda kv: int(kv[0])):
    mask = int(region)
    members = [names[i] for i in range(len(names)) if mask & (1 << i)]
    print(f"  {' + '.join(members):<22} {', '.join(labels)}")
