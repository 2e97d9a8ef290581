"""Build a workspace from published tale collections.

Each collection is one large plain-text ebook holding many tales. A manifest
names, per corpus, the source URL, a title substring that must appear in the
download (guards against a wrong ebook id), an optional pinned sha256, and
the list of tale titles to carve out. Carving slices each wanted tale from
its heading line to the next heading, skipping tables of contents by keeping
the last occurrence of a duplicated heading.

Checksums: a manifest with a recorded sha256 fails hard on any byte change.
An empty sha256 means "not yet pinned"; the fetch then prints the computed
digest so it can be committed, or records it in place with record=True.
"""

from __future__ import annotations

import hashlib
import json
import re
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Mapping, Sequence
from urllib.request import Request, urlopen

from .corpus import slugify


@dataclass(frozen=True)
class SourceSpec:
    corpus_id: str
    url: str
    title_marker: str  # substring the download must contain
    sha256: str  # empty until pinned
    tales: tuple[str, ...]


def load_manifest(path: Path) -> list[SourceSpec]:
    data = json.loads(path.read_text(encoding="utf-8"))
    specs = []
    for entry in data["sources"]:
        specs.append(
            SourceSpec(
                corpus_id=entry["corpus_id"],
                url=entry["url"],
                title_marker=entry["title_marker"],
                sha256=entry.get("sha256", ""),
                tales=tuple(entry["tales"]),
            )
        )
    return specs


def normalize_heading(line: str) -> str:
    """Fold a heading to a comparison key: letters and digits only, upper.

    Collections differ in punctuation (Snow-White-Fire-Red), numbering
    (XII. THE CISTERN), and capitalization; all of that is noise here.
    """
    text = unicodedata.normalize("NFKD", line)
    text = "".join(c for c in text if not unicodedata.combining(c))
    text = re.sub(r"^[ \t]*[IVXLC]+\.", "", text)  # leading roman numeral
    text = re.sub(r"^[ \t]*\d+\.", "", text)
    text = re.sub(r"[^A-Za-z0-9]+", " ", text)
    return " ".join(text.upper().split())


HEADING_SHAPE = re.compile(r"^[^a-z]*$")


def looks_like_heading(line: str) -> bool:
    """A short line with no lowercase letters, e.g. 'XII. THE CISTERN.'"""
    stripped = line.strip()
    if not stripped or len(stripped) > 90:
        return False
    if not HEADING_SHAPE.match(stripped):
        return False
    return bool(re.search(r"[A-Z]", stripped))


def carve(source_text: str, titles: Sequence[str]) -> tuple[dict[str, str], list[str]]:
    """Slice each titled tale out of a collection.

    Returns (title -> body, missing titles). The body runs from the line
    after the heading to the next heading-shaped line. When a title appears
    several times (contents page, then the tale), the last occurrence wins.
    """
    lines = source_text.splitlines()
    wanted = {normalize_heading(t): t for t in titles}
    starts: dict[str, int] = {}
    heading_lines = []
    for i, line in enumerate(lines):
        if not looks_like_heading(line):
            continue
        heading_lines.append(i)
        key = normalize_heading(line)
        if key in wanted:
            starts[key] = i  # later occurrences overwrite: skip the contents
    carved: dict[str, str] = {}
    for key, start in starts.items():
        end = len(lines)
        for j in heading_lines:
            if j > start:
                end = j
                break
        body = "\n".join(lines[start + 1 : end]).strip("\n")
        carved[wanted[key]] = body + "\n"
    missing = [t for k, t in wanted.items() if k not in starts]
    return carved, sorted(missing)


def sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def fetch_source(spec: SourceSpec, cache_dir: Path) -> bytes:
    """Download with a local cache so reruns are offline."""
    cache_dir.mkdir(parents=True, exist_ok=True)
    cached = cache_dir / f"{spec.corpus_id}.txt"
    if cached.exists():
        return cached.read_bytes()
    request = Request(spec.url, headers={"User-Agent": "valuescope-fetch/1.0"})
    with urlopen(request, timeout=120) as response:
        data = response.read()
    cached.write_bytes(data)
    return data


def build_workspace(
    manifest_path: Path,
    workspace_root: Path,
    cache_dir: Path,
    record: bool = False,
    log: Callable[[str], None] = print,
    fetcher: Callable[[SourceSpec, Path], bytes] = fetch_source,
) -> Mapping[str, list[str]]:
    """Fetch, verify, carve, and write corpora/<id>/<slug>.txt files.

    Returns {corpus_id: missing titles}; empty lists mean a complete corpus.
    Raises ValueError on checksum or title-marker mismatch.
    """
    specs = load_manifest(manifest_path)
    recorded = {}
    missing_report: dict[str, list[str]] = {}
    for spec in specs:
        log(f"{spec.corpus_id}: fetching {spec.url}")
        data = fetcher(spec, cache_dir)
        digest = sha256_hex(data)
        if spec.sha256 and digest != spec.sha256:
            raise ValueError(
                f"{spec.corpus_id}: sha256 mismatch: expected {spec.sha256},"
                f" got {digest}"
            )
        if not spec.sha256:
            log(f"{spec.corpus_id}: unpinned source; sha256 is {digest}")
            recorded[spec.corpus_id] = digest
        text = data.decode("utf-8-sig", errors="replace")
        if spec.title_marker.lower() not in text.lower():
            raise ValueError(
                f"{spec.corpus_id}: downloaded file does not mention"
                f" {spec.title_marker!r}; wrong source?"
            )
        carved, missing = carve(text, spec.tales)
        out = workspace_root / "corpora" / spec.corpus_id
        out.mkdir(parents=True, exist_ok=True)
        for title, body in carved.items():
            (out / f"{slugify(title)}.txt").write_text(body, encoding="utf-8")
        log(f"{spec.corpus_id}: wrote {len(carved)} tales, {len(missing)} missing")
        for title in missing:
            log(f"{spec.corpus_id}: MISSING {title}")
        missing_report[spec.corpus_id] = missing
    if record and recorded:
        data = json.loads(manifest_path.read_text(encoding="utf-8"))
        for entry in data["sources"]:
            if entry["corpus_id"] in recorded:
                entry["sha256"] = recorded[entry["corpus_id"]]
        manifest_path.write_text(
            json.dumps(data, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
        )
        log(f"recorded {len(recorded)} checksum(s) into {manifest_path}")
    return missing_report
