/**
 * Lexicon editor. The textarea holds a draft that is only ever replaced by
 * an explicit save or discard; save errors from the service are rendered
 * next to their line numbers so the offending entry is easy to find.
 */

import type { LexiconPayload, LexiconLineError, JobPayload } from "../api.js";
import { colorOf } from "../palette.js";
import { escapeHtml } from "../format.js";

export function renderLineErrors(errors: LexiconLineError[]): string {
  if (errors.length === 0) {
    return "";
  }
  const items = errors
    .map(
      (err) =>
        `<li><span class="line-no">line ${err.line}</span> ${escapeHtml(err.message)}</li>`,
    )
    .join("");
  return `<ul class="lexicon-errors">${items}</ul>`;
}

export function renderJobStatus(job: JobPayload | null): string {
  if (job === null) {
    return "";
  }
  const lines = job.log ?? [];
  const log = lines.length > 0 ? `<pre class="job-log">${escapeHtml(lines.join("\n"))}</pre>` : "";
  const error = job.error ? `<p class="job-error">${escapeHtml(job.error)}</p>` : "";
  return (
    `<div class="job-status status-${job.status}" data-job="${escapeHtml(job.id)}">` +
    `<strong>${escapeHtml(job.kind ?? "annotate")} job ${escapeHtml(job.id)}: ${escapeHtml(job.status)}</strong>` +
    log +
    error +
    `</div>`
  );
}

export function renderGroupTable(payload: LexiconPayload): string {
  const rows = payload.groups
    .map(
      (group) =>
        `<tr><td><span class="swatch" style="background:${colorOf(group.value)}"></span>` +
        `${escapeHtml(group.label)}</td>` +
        `<td>${escapeHtml(group.value)}</td>` +
        `<td>${group.synonyms.map(escapeHtml).join(", ")}</td></tr>`,
    )
    .join("");
  return (
    `<div class="table-scroll"><table class="group-table">` +
    `<thead><tr><th>label</th><th>value</th><th>synonyms</th></tr></thead>` +
    `<tbody>${rows}</tbody>` +
    `</table></div>`
  );
}

export function renderLexicon(
  payload: LexiconPayload,
  draft: string | null,
  errors: LexiconLineError[],
  job: JobPayload | null,
): string {
  const text = draft ?? payload.text;
  const dirty = draft !== null && draft !== payload.text;
  const badge = dirty ? `<span class="dirty-badge">unsaved changes</span>` : "";
  return (
    `<div class="lexicon-layout">` +
    `<section class="editor">` +
    `<div class="editor-bar">` +
    `<code class="hash">lexicon ${escapeHtml(payload.hash)}</code>` +
    badge +
    `<button data-action="lexicon-save">save</button>` +
    `<button data-action="lexicon-discard"${dirty ? "" : " disabled"}>discard</button>` +
    `</div>` +
    renderLineErrors(errors) +
    `<textarea id="lexicon-editor" spellcheck="false" rows="24">${escapeHtml(text)}</textarea>` +
    renderJobStatus(job) +
    `</section>` +
    `<section class="groups">` +
    `<h2>Groups (${payload.groups.length})</h2>` +
    renderGroupTable(payload) +
    `</section>` +
    `</div>`
  );
}
