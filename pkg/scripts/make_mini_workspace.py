#!/usr/bin/env python3
"""Regenerate the bundled synthetic mini workspace.

Three tiny corpora built from sentence templates. Two synonym pairs are
planted by filling the same template slot uniformly at random, so their
context distributions match and embeddings must recover the pairing.
Corpus-flavored sentences give each corpus its own lexicon footprint
(alpha leans on king/queen/treasure, beta on justice, gamma on
curiosity/evidence/truth) so region partitions and per-corpus clusters
have structure worth testing.

Deterministic: one seed drives slot fills and sentence order. The
committed workspace under workspaces/mini/ is this script's output;
rerun it only when changing the fixture on purpose.
"""

import json
import random
from pathlib import Path

SEED = 20240601

LIGHT = ("lantern", "lamp")
WATER = ("river", "brook")

LIGHT_SENTENCES = [
    "the {light} glowed in the dark tower",
    "she carried the {light} down the winding stair",
    "the {light} flickered beside the narrow window",
]

WATER_SENTENCES = [
    "the {water} ran cold beneath the willow",
    "they crossed the {water} at grey dawn",
    "the {water} murmured beyond the long meadow",
]

FILLER_SENTENCES = [
    "snow fell soft on the quiet roofs",
    "a grey wolf watched from the pines",
    "the miller ground his corn at noon",
    "stars turned slow above the sleeping town",
    "an apple tree stood by the gate",
]

CORPUS_SENTENCES = {
    "alpha": [
        "the mother and the brother walked to the village",
        "the mother told the brother a tale of the old wood",
        "the king kept the law of the land",
        "the queen gave the treasure to the king",
        "the mother sang of love by the fire",
        "the wedding of the wife and the husband lasted three days",
        "the sister waited for the mother at the gate",
    ],
    "beta": [
        "the mother and the brother walked to the village",
        "the mother wanted to know the way home",
        "the judge spoke of justice in the hall",
        "the sister married a good husband in spring",
        "the mother sang of love by the fire",
        "the mother came to know the brother of the miller",
    ],
    "gamma": [
        "the mother wanted to know the way home",
        "the curious child found the evidence at last",
        "the truth of the tale was plain to know",
        "knowledge came to the wise woman of the wood",
        "the mother sang of love by the fire",
        "the mother would know the truth at last",
    ],
}

TITLES = {
    "alpha": [
        "The Lantern Keeper",
        "The Kings Road",
        "A Winter Wedding",
        "The Treasure of the Mill",
        "The Brothers Path",
    ],
    "beta": [
        "The Judges Hall",
        "The Sisters Vow",
        "A Walk to the Village",
        "The Mill by the Brook",
        "The Long Morning",
    ],
    "gamma": [
        "The Curious Child",
        "The Way of Truth",
        "The Wise Woman",
        "The Evidence of Snow",
        "The Quiet Tower",
    ],
}


def cycle_take(items, n, offset=0):
    return [items[(offset + i) % len(items)] for i in range(n)]


def build_text(rng, corpus_id, text_index):
    sentences = []
    sentences += cycle_take(LIGHT_SENTENCES, 6, text_index)
    sentences += cycle_take(WATER_SENTENCES, 6, text_index)
    sentences += cycle_take(FILLER_SENTENCES, 5, text_index)
    sentences += cycle_take(CORPUS_SENTENCES[corpus_id], 12, text_index)
    rng.shuffle(sentences)
    filled = []
    for s in sentences:
        s = s.replace("{light}", rng.choice(LIGHT))
        s = s.replace("{water}", rng.choice(WATER))
        filled.append(s.capitalize() + ".")
    # short paragraphs read more like a tale than one wall of text
    paragraphs = [" ".join(filled[i : i + 5]) for i in range(0, len(filled), 5)]
    return "\n\n".join(paragraphs) + "\n"


def main():
    root = Path(__file__).resolve().parent.parent / "workspaces" / "mini"
    rng = random.Random(SEED)
    for corpus_id in sorted(CORPUS_SENTENCES):
        corpus_dir = root / "corpora" / corpus_id
        corpus_dir.mkdir(parents=True, exist_ok=True)
        for i, title in enumerate(TITLES[corpus_id]):
            (corpus_dir / f"{title}.txt").write_text(
                build_text(rng, corpus_id, i), encoding="utf-8"
            )
    default_lexicon = (
        Path(__file__).resolve().parent.parent
        / "src"
        / "valuescope"
        / "data"
        / "default_lexicon.txt"
    )
    (root / "lexicon.txt").write_text(
        default_lexicon.read_text(encoding="utf-8"), encoding="utf-8"
    )
    manifest = {
        "seed": SEED,
        "planted_pairs": [list(LIGHT), list(WATER)],
        "corpora": sorted(CORPUS_SENTENCES),
    }
    (root / "planted.json").write_text(
        json.dumps(manifest, indent=2) + "\n", encoding="utf-8"
    )
    print(f"wrote {root}")


if __name__ == "__main__":
    main()
