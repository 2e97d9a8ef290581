#!/usr/bin/env python3
"""Fetch the three public-domain tale collections and build a workspace.

Downloads each collection named in scripts/corpora_manifest.json, verifies
it (title marker always; sha256 when pinned), carves out the manifest's
tale list, and writes a workspace:

    python3 scripts/fetch_corpora.py workspaces/reference

First run on a fresh clone prints the computed sha256 of any unpinned
source; rerun with --record to write those pins back into the manifest and
commit them. Downloads are cached under <workspace>/.sources so reruns work
offline. Exits 1 if any manifest tale cannot be found in its source, so a
wrong edition fails loudly instead of producing a thin corpus.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from valuescope.fetch import build_workspace

DEFAULT_MANIFEST = Path(__file__).parent / "corpora_manifest.json"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("workspace", type=Path)
    parser.add_argument("--manifest", type=Path, default=DEFAULT_MANIFEST)
    parser.add_argument("--record", action="store_true",
                        help="write computed sha256 pins back into the manifest")
    args = parser.parse_args()
    try:
        missing = build_workspace(
            args.manifest,
            args.workspace,
            cache_dir=args.workspace / ".sources",
            record=args.record,
        )
    except ValueError as error:
        print(f"error: {error}", file=sys.stderr)
        return 1
    lexicon = args.workspace / "lexicon.txt"
    if not lexicon.exists():
        from valuescope.lexicon import default_lexicon, serialize_lexicon

        lexicon.write_text(serialize_lexicon(default_lexicon()), encoding="utf-8")
        print(f"wrote {lexicon}")
    if any(missing.values()):
        print("error: some tales were not found; see MISSING lines above",
              file=sys.stderr)
        return 1
    print(f"workspace ready at {args.workspace}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
