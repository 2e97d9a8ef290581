/**
 * Cluster explorer: similarity graph edges and k-clique communities for one
 * corpus, plus the cross-corpus community comparison keyed by a seed label.
 */

import type { ClustersPayload, ComparePayload } from "../api.js";
import { escapeHtml } from "../format.js";
import { regionName, sortedMasks } from "./venn.js";

export interface ClusterControls {
  corpusId: string;
  theta: string;
  k: string;
  seedLabel: string;
}

export function renderClusterControls(corpora: string[], controls: ClusterControls): string {
  const options = corpora
    .map(
      (id) =>
        `<option value="${escapeHtml(id)}"${id === controls.corpusId ? " selected" : ""}>${escapeHtml(id)}</option>`,
    )
    .join("");
  return (
    `<form class="cluster-controls" data-action="cluster-form">` +
    `<label>corpus <select name="corpus">${options}</select></label>` +
    `<label>theta <input name="theta" value="${escapeHtml(controls.theta)}" size="5"></label>` +
    `<label>k <input name="k" value="${escapeHtml(controls.k)}" size="3"></label>` +
    `<label>seed label <input name="seed" value="${escapeHtml(controls.seedLabel)}" size="10"></label>` +
    `<button type="submit">refresh</button>` +
    `</form>`
  );
}

export function renderCommunities(payload: ClustersPayload): string {
  const communities = payload.communities.communities;
  const blocks = communities
    .map((members, i) => {
      const chips = members
        .map((label) => `<span class="chip">${escapeHtml(label)}</span>`)
        .join("");
      return `<div class="community"><h3>community ${i + 1}</h3>${chips}</div>`;
    })
    .join("");
  const edges = payload.graph.edges
    .map(
      (edge) =>
        `<tr><td>${escapeHtml(edge.a)}</td><td>${escapeHtml(edge.b)}</td>` +
        `<td>${edge.weight.toFixed(4)}</td></tr>`,
    )
    .join("");
  const empty = `<p class="hint">no communities at these settings</p>`;
  return (
    `<section class="communities">` +
    `<h2>${escapeHtml(payload.communities.corpus_id)}: k=${payload.communities.k}, theta=${payload.communities.theta}</h2>` +
    (blocks || empty) +
    `</section>` +
    `<section class="edges">` +
    `<h2>Edges above theta (${payload.graph.edges.length})</h2>` +
    `<div class="table-scroll"><table class="edge-table">` +
    `<thead><tr><th>a</th><th>b</th><th>cosine</th></tr></thead>` +
    `<tbody>${edges}</tbody>` +
    `</table></div>` +
    `</section>`
  );
}

export function renderCompare(payload: ComparePayload, seedLabel: string): string {
  const rows = sortedMasks(payload.regions)
    .map((mask) => {
      const members = payload.regions[String(mask)] ?? [];
      const chips = members
        .map((label) => `<span class="chip">${escapeHtml(label)}</span>`)
        .join("");
      return (
        `<tr><th scope="row">${escapeHtml(regionName(mask, payload.corpora))}</th>` +
        `<td>${chips || '<span class="hint">empty</span>'}</td></tr>`
      );
    })
    .join("");
  return (
    `<section class="compare">` +
    `<h2>Companions of "${escapeHtml(seedLabel)}" across corpora</h2>` +
    `<div class="table-scroll"><table class="venn-table">` +
    `<thead><tr><th>clustered together in</th><th>labels</th></tr></thead>` +
    `<tbody>${rows}</tbody>` +
    `</table></div>` +
    `</section>`
  );
}

export function renderClusters(
  corpora: string[],
  controls: ClusterControls,
  clusters: ClustersPayload | null,
  compare: ComparePayload | null,
  problem: string | null,
): string {
  const body =
    clusters === null
      ? `<p class="hint">Train models first, then refresh.</p>`
      : renderCommunities(clusters);
  const comparison = compare === null ? "" : renderCompare(compare, controls.seedLabel);
  const notice = problem === null ? "" : `<p class="problem">${escapeHtml(problem)}</p>`;
  return renderClusterControls(corpora, controls) + notice + body + comparison;
}
