/**
 * Venn membership view: which stems appear in which combination of corpora.
 * Region keys are bitmasks over the payload's corpora order; decoding a mask
 * into names is presentation, the stems themselves come verbatim from the
 * service.
 */

import type { VennPayload } from "../api.js";
import { colorOf } from "../palette.js";
import { escapeHtml } from "../format.js";

export function regionName(mask: number, corpora: string[]): string {
  const members = corpora.filter((_, i) => (mask & (1 << i)) !== 0);
  if (members.length === 0) {
    return "none";
  }
  if (members.length === 1) {
    return `${members[0]} only`;
  }
  return members.join(" + ");
}

/** Sort region masks by member count then by mask so exclusives come first. */
export function sortedMasks(regions: Record<string, string[]>): number[] {
  const bits = (mask: number): number => {
    let n = 0;
    for (let m = mask; m > 0; m >>= 1) {
      n += m & 1;
    }
    return n;
  };
  return Object.keys(regions)
    .map((key) => Number(key))
    .sort((a, b) => bits(a) - bits(b) || a - b);
}

function circles(corpora: string[]): string {
  const spots = [
    { cx: 130, cy: 105, lx: 60, ly: 40 },
    { cx: 210, cy: 105, lx: 280, ly: 40 },
    { cx: 170, cy: 170, lx: 170, ly: 245 },
  ];
  const shapes = corpora
    .map((id, i) => {
      const spot = spots[i];
      return (
        `<circle cx="${spot.cx}" cy="${spot.cy}" r="75" class="venn-circle c${i}"></circle>` +
        `<text x="${spot.lx}" y="${spot.ly}" text-anchor="middle">${escapeHtml(id)}</text>`
      );
    })
    .join("");
  return `<svg viewBox="0 0 340 260" class="venn-sketch" role="img">${shapes}</svg>`;
}

/** The lexicon group a stem belongs to, read off an annotation span. */
export interface StemOwner {
  label: string;
  value: string;
}

/**
 * Detail panel for a clicked region: each stem with its owning group.
 * Owners come from annotation spans of a corpus in the region, fetched by
 * the caller; null means that scan is still in flight.
 */
export function renderRegionDetail(
  mask: number,
  payload: VennPayload,
  owners: Record<string, StemOwner> | null,
): string {
  const stems = payload.regions[String(mask)] ?? [];
  if (stems.length === 0) {
    return `<div class="region-detail"><p class="hint">nothing in this region</p></div>`;
  }
  if (owners === null) {
    return `<div class="region-detail"><p class="hint">looking up owning groups…</p></div>`;
  }
  const rows = stems
    .map((stem) => {
      const owner = owners[stem];
      const group =
        owner === undefined
          ? `<span class="hint">group unknown</span>`
          : `<span class="swatch" style="background:${colorOf(owner.value)}"></span>` +
            `${escapeHtml(owner.label)} (${escapeHtml(owner.value)})`;
      return `<tr><td><span class="chip">${escapeHtml(stem)}</span></td><td>${group}</td></tr>`;
    })
    .join("");
  return (
    `<div class="region-detail">` +
    `<h3>${escapeHtml(regionName(mask, payload.corpora))}</h3>` +
    `<div class="table-scroll"><table>` +
    `<thead><tr><th>stem</th><th>owning group</th></tr></thead>` +
    `<tbody>${rows}</tbody>` +
    `</table></div>` +
    `</div>`
  );
}

export function renderVenn(
  payload: VennPayload,
  selectedMask: number | null,
  owners: Record<string, StemOwner> | null,
): string {
  const rows = sortedMasks(payload.regions)
    .map((mask) => {
      const stems = payload.regions[String(mask)] ?? [];
      const chips = stems
        .map((stem) => `<span class="chip">${escapeHtml(stem)}</span>`)
        .join("");
      const selected = mask === selectedMask ? ' class="selected"' : "";
      return (
        `<tr${selected}><th scope="row"><a href="#" data-action="region" data-mask="${mask}">` +
        `${escapeHtml(regionName(mask, payload.corpora))}</a></th>` +
        `<td>${chips || '<span class="hint">empty</span>'}</td></tr>`
      );
    })
    .join("");
  const sketch = payload.corpora.length === 3 ? circles(payload.corpora) : "";
  const detail = selectedMask === null ? "" : renderRegionDetail(selectedMask, payload, owners);
  return (
    sketch +
    `<div class="table-scroll"><table class="venn-table">` +
    `<thead><tr><th>region</th><th>stems</th></tr></thead>` +
    `<tbody>${rows}</tbody>` +
    `</table></div>` +
    detail
  );
}
