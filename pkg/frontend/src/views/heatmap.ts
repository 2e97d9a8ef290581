/**
 * Marker count heatmap. Rows are group labels, columns corpora or texts;
 * every cell shows the service's count verbatim and carries data attributes
 * so a click can route to the column's text at the label's first occurrence.
 */

import type { HeatmapPayload } from "../api.js";
import { escapeHtml } from "../format.js";

/** Opacity step for a cell, relative to the table's largest count. */
export function cellLevel(count: number, max: number): number {
  if (count <= 0 || max <= 0) {
    return 0;
  }
  return Math.max(1, Math.ceil((count / max) * 4));
}

export function renderHeatmap(payload: HeatmapPayload, groupBy: string, per: string): string {
  const max = Math.max(0, ...payload.counts.flat());
  const header = payload.cols
    .map((col) => `<th scope="col">${escapeHtml(col)}</th>`)
    .join("");
  const body = payload.rows
    .map((row, i) => {
      const cells = payload.counts[i]
        .map((count, j) => {
          const col = payload.cols[j];
          return (
            `<td class="cell level-${cellLevel(count, max)}" data-action="cell" ` +
            `data-row="${escapeHtml(row)}" data-col="${escapeHtml(col)}">${count}</td>`
          );
        })
        .join("");
      return `<tr><th scope="row">${escapeHtml(row)}</th>${cells}</tr>`;
    })
    .join("");
  const groupOptions = ["label", "value"]
    .map((name) => `<option value="${name}"${name === groupBy ? " selected" : ""}>${name}</option>`)
    .join("");
  const perOptions = ["corpus", "text"]
    .map((name) => `<option value="${name}"${name === per ? " selected" : ""}>${name}</option>`)
    .join("");
  return (
    `<div class="heatmap-controls">` +
    `<label>rows <select id="heatmap-group" data-action="heatmap-group">${groupOptions}</select></label>` +
    `<label>columns <select id="heatmap-per" data-action="heatmap-per">${perOptions}</select></label>` +
    `<span class="hint">click a cell to open the text at the first occurrence</span>` +
    `</div>` +
    `<div class="table-scroll"><table class="heatmap">` +
    `<thead><tr><th></th>${header}</tr></thead>` +
    `<tbody>${body}</tbody>` +
    `</table></div>`
  );
}
