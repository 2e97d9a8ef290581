/**
 * Text browser: corpus and text pickers plus the annotated reading pane.
 * Markers are wrapped in <mark> elements colored by the value of their
 * group; every occurrence of a label carries a sequential anchor id so the
 * heatmap and the occurrence list can deep-link into the prose.
 */

import type { AnnotationSpan, CorpusRow, TextRow, TextPayload } from "../api.js";
import { colorOf } from "../palette.js";
import { escapeHtml, segmentText, textName } from "../format.js";

export function occurrenceAnchor(label: string, n: number): string {
  return `occ-${label}-${n}`;
}

export function firstOccurrenceAnchor(label: string): string {
  return occurrenceAnchor(label, 0);
}

export function renderCorpusPicker(rows: CorpusRow[], selected: string | null): string {
  const options = rows
    .map((row) => {
      const flag = row.id === selected ? " selected" : "";
      return `<option value="${escapeHtml(row.id)}"${flag}>${escapeHtml(row.id)} (${row.texts} texts, ${row.words} words)</option>`;
    })
    .join("");
  return `<select id="corpus-picker" data-action="pick-corpus">${options}</select>`;
}

export function renderTextList(rows: TextRow[], selected: string | null): string {
  const items = rows
    .map((row) => {
      const current = row.id === selected ? ' class="current"' : "";
      return `<li${current}><a href="#" data-action="pick-text" data-text="${escapeHtml(row.id)}">${escapeHtml(row.title)}</a></li>`;
    })
    .join("");
  return `<ul class="text-list">${items}</ul>`;
}

export function renderAnnotatedText(payload: TextPayload, focusLabel: string | null): string {
  const segments = segmentText(payload.raw, payload.annotations);
  const perLabel = new Map<string, number>();
  const parts: string[] = [];
  for (const segment of segments) {
    if (segment.span === null) {
      parts.push(escapeHtml(segment.text));
      continue;
    }
    const span = segment.span;
    const n = perLabel.get(span.label) ?? 0;
    perLabel.set(span.label, n + 1);
    const focus = span.label === focusLabel ? " focus" : "";
    parts.push(
      `<mark id="${occurrenceAnchor(span.label, n)}" class="marker${focus}" ` +
        `style="background:${colorOf(span.value)}" data-action="token" ` +
        `data-label="${escapeHtml(span.label)}" data-value="${escapeHtml(span.value)}" ` +
        `title="${escapeHtml(span.label)} (${escapeHtml(span.value)}), stem ${escapeHtml(span.stem)}">` +
        `${escapeHtml(segment.text)}</mark>`,
    );
  }
  const count = payload.annotations.length;
  return (
    `<article class="reading-pane">` +
    `<h2>${escapeHtml(payload.title)}</h2>` +
    `<p class="meta">${escapeHtml(textName(payload.id))} in ${escapeHtml(payload.corpus_id)}, ${count} markers</p>` +
    `<div class="prose">${parts.join("")}</div>` +
    `</article>`
  );
}

/** One row of the occurrence list: a text and its count for the label. */
export interface OccurrenceEntry {
  textId: string;
  title: string;
  count: number;
}

/**
 * Occurrences of a label across the corpus. Counts are heatmap cells
 * verbatim; for the open text each occurrence links to its anchor in the
 * prose.
 */
export function renderOccurrences(
  label: string,
  entries: OccurrenceEntry[],
  currentTextId: string | null,
  currentSpans: AnnotationSpan[],
): string {
  const rows = entries
    .map((entry) => {
      if (entry.textId === currentTextId) {
        const links = currentSpans
          .filter((span) => span.label === label)
          .map(
            (span, n) =>
              `<a href="#" data-action="occurrence" data-target="${occurrenceAnchor(label, n)}">` +
              `${escapeHtml(span.surface)}</a>`,
          )
          .join(" ");
        return (
          `<li class="current">${escapeHtml(entry.title)} (${entry.count})` +
          `<div class="occurrence-links">${links}</div></li>`
        );
      }
      return (
        `<li><a href="#" data-action="pick-text" data-text="${escapeHtml(entry.textId)}" ` +
        `data-focus="${escapeHtml(label)}">${escapeHtml(entry.title)}</a> (${entry.count})</li>`
      );
    })
    .join("");
  return (
    `<aside class="occurrences">` +
    `<h3>"${escapeHtml(label)}" across the corpus</h3>` +
    `<button data-action="clear-focus">close</button>` +
    `<ul>${rows || "<li>no occurrences</li>"}</ul>` +
    `</aside>`
  );
}

export function renderBrowse(
  corpora: CorpusRow[],
  texts: TextRow[],
  payload: TextPayload | null,
  corpusId: string | null,
  textId: string | null,
  focusLabel: string | null,
  occurrences: OccurrenceEntry[] | null,
): string {
  const pane = payload === null ? `<p class="hint">Pick a text to read it.</p>` : renderAnnotatedText(payload, focusLabel);
  const panel =
    focusLabel !== null && occurrences !== null
      ? renderOccurrences(focusLabel, occurrences, textId, payload?.annotations ?? [])
      : "";
  return (
    `<div class="browse-layout${panel ? " with-panel" : ""}">` +
    `<aside>` +
    renderCorpusPicker(corpora, corpusId) +
    renderTextList(texts, textId) +
    `</aside>` +
    `<section>${pane}</section>` +
    panel +
    `</div>`
  );
}
