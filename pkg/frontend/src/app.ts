/**
 * Application shell: owns the view state, fetches payloads through the
 * typed client, renders the active view, and wires events. All rendering
 * is innerHTML replacement from pure string builders; events are delegated
 * from the root so re-renders never re-attach listeners.
 */

import {
  Api,
  ApiError,
  type ClustersPayload,
  type ComparePayload,
  type CorpusRow,
  type Envelope,
  type HeatmapPayload,
  type JobPayload,
  type LexiconLineError,
  type LexiconPayload,
  type TextPayload,
  type TextRow,
  type VennPayload,
} from "./api.js";
import {
  type ViewName,
  type ViewState,
  discardDraft,
  editDraft,
  hasUnsavedDraft,
  initialState,
  isStale,
  markRendered,
  observeHash,
  selectCorpus,
  selectText,
  setStrategy,
  switchView,
} from "./state.js";
import { escapeHtml } from "./format.js";
import {
  type OccurrenceEntry,
  firstOccurrenceAnchor,
  renderBrowse,
} from "./views/browse.js";
import { renderHeatmap } from "./views/heatmap.js";
import { type StemOwner, renderVenn } from "./views/venn.js";
import { renderLexicon } from "./views/lexicon.js";
import { renderClusters, type ClusterControls } from "./views/clusters.js";

const STRATEGIES = ["exact", "porter", "snowball", "lancaster", "snowball2"];
const VIEWS: { name: ViewName; title: string }[] = [
  { name: "browse", title: "Texts" },
  { name: "heatmap", title: "Heatmap" },
  { name: "venn", title: "Overlap" },
  { name: "lexicon", title: "Lexicon" },
  { name: "clusters", title: "Clusters" },
];
const JOB_POLL_MS = 300;

interface Caches {
  corpora: CorpusRow[];
  texts: TextRow[];
  text: TextPayload | null;
  heatmap: HeatmapPayload | null;
  heatmapGroupBy: string;
  heatmapPer: string;
  /** label×text counts backing the occurrence list, fetched on demand */
  labelByText: HeatmapPayload | null;
  venn: VennPayload | null;
  vennSelection: number | null;
  /** stem -> owning group, scanned from one corpus's annotation spans */
  stemOwners: { key: string; map: Record<string, StemOwner> } | null;
  lexicon: LexiconPayload | null;
  lexiconErrors: LexiconLineError[];
  job: JobPayload | null;
  clusters: ClustersPayload | null;
  compare: ComparePayload | null;
  clusterControls: ClusterControls;
  clusterProblem: string | null;
  notice: string | null;
}

export class App {
  state: ViewState = initialState();
  private readonly caches: Caches = {
    corpora: [],
    texts: [],
    text: null,
    heatmap: null,
    heatmapGroupBy: "label",
    heatmapPer: "text",
    labelByText: null,
    venn: null,
    vennSelection: null,
    stemOwners: null,
    lexicon: null,
    lexiconErrors: [],
    job: null,
    clusters: null,
    compare: null,
    clusterControls: { corpusId: "", theta: "0.5", k: "2", seedLabel: "mother" },
    clusterProblem: null,
    notice: null,
  };
  private pollTimer: number | null = null;

  constructor(
    private readonly api: Api,
    private readonly root: HTMLElement,
  ) {}

  async start(): Promise<void> {
    this.root.addEventListener("click", (event) => void this.onClick(event));
    this.root.addEventListener("change", (event) => void this.onChange(event));
    this.root.addEventListener("input", (event) => this.onInput(event));
    this.root.addEventListener("submit", (event) => void this.onSubmit(event));
    const corpora = this.observe(await this.api.corpora());
    this.caches.corpora = corpora;
    if (corpora.length > 0) {
      this.state = selectCorpus(this.state, corpora[0].id);
      this.caches.clusterControls.corpusId = corpora[0].id;
      this.caches.texts = this.observe(await this.api.texts(corpora[0].id));
    }
    this.state = markRendered(this.state, "browse");
    this.render();
  }

  /** Record the envelope's lexicon hash, then hand back the payload. */
  private observe<T>(envelope: Envelope<T>): T {
    this.state = observeHash(this.state, envelope.lexicon_hash);
    return envelope.data;
  }

  private setNotice(message: string | null): void {
    this.caches.notice = message;
  }

  // ------------------------------------------------------------- fetching

  private async refresh(view: ViewName): Promise<void> {
    this.setNotice(null);
    try {
      if (view === "browse") {
        if (this.state.corpusId !== null) {
          this.caches.texts = this.observe(await this.api.texts(this.state.corpusId));
        }
        this.caches.text =
          this.state.textId === null
            ? null
            : this.observe(await this.api.text(this.state.textId, this.state.strategy));
      } else if (view === "heatmap") {
        this.caches.heatmap = this.observe(
          await this.api.heatmap(
            this.state.strategy,
            this.caches.heatmapGroupBy,
            this.caches.heatmapPer,
          ),
        );
      } else if (view === "venn") {
        this.caches.venn = this.observe(await this.api.venn(this.state.strategy));
      } else if (view === "lexicon") {
        this.caches.lexicon = this.observe(await this.api.lexicon());
      } else {
        await this.refreshClusters();
      }
      this.state = markRendered(this.state, view);
    } catch (error) {
      this.setNotice(describe(error));
    }
    this.render();
  }

  private async refreshClusters(): Promise<void> {
    const controls = this.caches.clusterControls;
    const k = Number(controls.k);
    const theta = Number(controls.theta);
    this.caches.clusterProblem = null;
    if (!Number.isFinite(k) || !Number.isFinite(theta)) {
      this.caches.clusterProblem = "k and theta must be numbers";
      return;
    }
    try {
      this.caches.clusters = this.observe(
        await this.api.clusters(controls.corpusId, k, theta),
      );
      this.caches.compare = this.observe(
        await this.api.compare(controls.seedLabel, k, theta),
      );
    } catch (error) {
      this.caches.clusters = null;
      this.caches.compare = null;
      this.caches.clusterProblem = describe(error);
    }
  }

  // ------------------------------------------------------------ rendering

  render(): void {
    const tabs = VIEWS.map(({ name, title }) => {
      const current = name === this.state.view ? " current" : "";
      const stale = isStale(this.state, name) ? `<sup class="stale-dot" title="rendered from an older lexicon">*</sup>` : "";
      const draft = name === "lexicon" && hasUnsavedDraft(this.state) ? `<sup class="draft-dot" title="unsaved draft">d</sup>` : "";
      return `<button class="tab${current}" data-action="tab" data-view="${name}">${title}${stale}${draft}</button>`;
    }).join("");
    const strategyOptions = STRATEGIES.map(
      (name) => `<option value="${name}"${name === this.state.strategy ? " selected" : ""}>${name}</option>`,
    ).join("");
    const staleBanner = isStale(this.state, this.state.view)
      ? `<div class="stale-banner">showing results for an older lexicon ` +
        `<button data-action="refresh-view">refresh</button></div>`
      : "";
    const notice = this.caches.notice
      ? `<div class="notice">${escapeHtml(this.caches.notice)}</div>`
      : "";
    this.root.innerHTML =
      `<header>` +
      `<h1>valuescope</h1>` +
      `<nav>${tabs}</nav>` +
      `<label class="strategy">strategy ` +
      `<select id="strategy-picker" data-action="strategy">${strategyOptions}</select>` +
      `</label>` +
      `</header>` +
      staleBanner +
      notice +
      `<main id="view">${this.renderView()}</main>`;
    this.afterRender();
  }

  private renderView(): string {
    const c = this.caches;
    switch (this.state.view) {
      case "browse":
        return renderBrowse(
          c.corpora,
          c.texts,
          c.text,
          this.state.corpusId,
          this.state.textId,
          this.state.focusLabel,
          this.occurrenceEntries(),
        );
      case "heatmap":
        return c.heatmap === null
          ? `<p class="hint">loading…</p>`
          : renderHeatmap(c.heatmap, c.heatmapGroupBy, c.heatmapPer);
      case "venn":
        return c.venn === null
          ? `<p class="hint">loading…</p>`
          : renderVenn(c.venn, c.vennSelection, this.ownersForSelection());
      case "lexicon":
        return c.lexicon === null
          ? `<p class="hint">loading…</p>`
          : renderLexicon(c.lexicon, this.state.lexiconDraft, c.lexiconErrors, c.job);
      case "clusters":
        return renderClusters(
          c.corpora.map((row) => row.id),
          c.clusterControls,
          c.clusters,
          c.compare,
          c.clusterProblem,
        );
    }
  }

  private afterRender(): void {
    if (this.state.view === "browse" && this.state.focusLabel !== null) {
      const anchor = document.getElementById(firstOccurrenceAnchor(this.state.focusLabel));
      anchor?.scrollIntoView({ block: "center" });
    }
  }

  /**
   * Occurrence list rows for the focused label: the corpus's texts with a
   * non-zero heatmap cell, counts verbatim.
   */
  private occurrenceEntries(): OccurrenceEntry[] | null {
    const label = this.state.focusLabel;
    const table = this.caches.labelByText;
    const corpusId = this.state.corpusId;
    if (label === null || table === null || corpusId === null) {
      return null;
    }
    const row = table.rows.indexOf(label);
    if (row < 0) {
      return [];
    }
    const titles = new Map(this.caches.texts.map((t) => [t.id, t.title]));
    const entries: OccurrenceEntry[] = [];
    table.cols.forEach((col, j) => {
      const count = table.counts[row][j];
      if (col.startsWith(`${corpusId}/`) && count > 0) {
        entries.push({ textId: col, title: titles.get(col) ?? col, count });
      }
    });
    return entries;
  }

  private ownersKey(corpusId: string): string {
    return `${corpusId}|${this.state.strategy}|${this.state.currentHash ?? ""}`;
  }

  private ownersForSelection(): Record<string, StemOwner> | null {
    const mask = this.caches.vennSelection;
    const venn = this.caches.venn;
    const owners = this.caches.stemOwners;
    if (mask === null || venn === null || owners === null) {
      return null;
    }
    const corpusId = venn.corpora.find((_, i) => (mask & (1 << i)) !== 0);
    if (corpusId === undefined || owners.key !== this.ownersKey(corpusId)) {
      return null;
    }
    return owners.map;
  }

  /** Read stem -> owning group off one corpus's annotation spans. */
  private async scanStemOwners(corpusId: string): Promise<void> {
    const key = this.ownersKey(corpusId);
    if (this.caches.stemOwners?.key === key) {
      return;
    }
    const map: Record<string, StemOwner> = {};
    const texts = this.observe(await this.api.texts(corpusId));
    for (const row of texts) {
      const payload = this.observe(await this.api.text(row.id, this.state.strategy));
      for (const span of payload.annotations) {
        map[span.stem] = { label: span.label, value: span.value };
      }
    }
    this.caches.stemOwners = { key, map };
  }

  // --------------------------------------------------------------- events

  private async onClick(event: Event): Promise<void> {
    const target = (event.target as HTMLElement).closest("[data-action]");
    if (!(target instanceof HTMLElement)) return;
    const action = target.dataset.action;
    if (action === "tab") {
      event.preventDefault();
      await this.showView(target.dataset.view as ViewName);
    } else if (action === "refresh-view") {
      await this.refresh(this.state.view);
    } else if (action === "pick-text") {
      event.preventDefault();
      this.state = selectText(this.state, target.dataset.text ?? "", target.dataset.focus ?? null);
      await this.refresh("browse");
    } else if (action === "cell") {
      await this.onHeatmapCell(target.dataset.row ?? "", target.dataset.col ?? "");
    } else if (action === "token") {
      await this.onTokenClick(target.dataset.label ?? "");
    } else if (action === "occurrence") {
      event.preventDefault();
      document.getElementById(target.dataset.target ?? "")?.scrollIntoView({ block: "center" });
    } else if (action === "clear-focus") {
      this.state = { ...this.state, focusLabel: null };
      this.render();
    } else if (action === "region") {
      event.preventDefault();
      await this.onRegionClick(Number(target.dataset.mask));
    } else if (action === "lexicon-save") {
      await this.saveLexicon();
    } else if (action === "lexicon-discard") {
      this.state = discardDraft(this.state);
      this.caches.lexiconErrors = [];
      this.render();
    }
  }

  private async onChange(event: Event): Promise<void> {
    const target = event.target;
    if (!(target instanceof HTMLSelectElement)) return;
    const action = target.dataset.action;
    if (action === "strategy") {
      this.state = setStrategy(this.state, target.value);
      // strategy changes invalidate everything fetched under the old one
      this.caches.heatmap = null;
      this.caches.venn = null;
      this.caches.labelByText = null;
      this.caches.stemOwners = null;
      await this.refresh(this.state.view);
    } else if (action === "pick-corpus") {
      this.state = selectCorpus(this.state, target.value);
      this.caches.text = null;
      await this.refresh("browse");
    } else if (action === "heatmap-group") {
      this.caches.heatmapGroupBy = target.value;
      await this.refresh("heatmap");
    } else if (action === "heatmap-per") {
      this.caches.heatmapPer = target.value;
      await this.refresh("heatmap");
    }
  }

  private onInput(event: Event): void {
    const target = event.target;
    if (target instanceof HTMLTextAreaElement && target.id === "lexicon-editor") {
      this.state = editDraft(this.state, target.value);
      // no re-render: replacing the textarea mid-keystroke would drop the caret
    }
  }

  private async onSubmit(event: Event): Promise<void> {
    const form = event.target;
    if (!(form instanceof HTMLFormElement)) return;
    event.preventDefault();
    if (form.dataset.action === "cluster-form") {
      const data = new FormData(form);
      this.caches.clusterControls = {
        corpusId: String(data.get("corpus") ?? ""),
        theta: String(data.get("theta") ?? "0.5"),
        k: String(data.get("k") ?? "2"),
        seedLabel: String(data.get("seed") ?? "mother"),
      };
      await this.refresh("clusters");
    }
  }

  private async showView(view: ViewName): Promise<void> {
    this.state = switchView(this.state, view);
    const needsFirstLoad =
      (view === "heatmap" && this.caches.heatmap === null) ||
      (view === "venn" && this.caches.venn === null) ||
      (view === "lexicon" && this.caches.lexicon === null) ||
      (view === "clusters" && this.caches.clusters === null && this.caches.clusterProblem === null);
    if (needsFirstLoad || isStale(this.state, view)) {
      await this.refresh(view);
    } else {
      this.render();
    }
  }

  private async onTokenClick(label: string): Promise<void> {
    this.state = { ...this.state, focusLabel: label };
    if (this.caches.labelByText === null) {
      try {
        this.caches.labelByText = this.observe(
          await this.api.heatmap(this.state.strategy, "label", "text"),
        );
      } catch (error) {
        this.setNotice(describe(error));
      }
    }
    this.render();
  }

  private async onRegionClick(mask: number): Promise<void> {
    this.caches.vennSelection = Number.isFinite(mask) ? mask : null;
    this.render(); // show the selection (and its loading hint) immediately
    const venn = this.caches.venn;
    if (this.caches.vennSelection === null || venn === null) {
      return;
    }
    const corpusId = venn.corpora.find((_, i) => (mask & (1 << i)) !== 0);
    if (corpusId === undefined) {
      return;
    }
    try {
      await this.scanStemOwners(corpusId);
    } catch (error) {
      this.setNotice(describe(error));
    }
    this.render();
  }

  private async onHeatmapCell(row: string, col: string): Promise<void> {
    const per = this.caches.heatmap?.per ?? this.caches.heatmapPer;
    if (per === "corpus") {
      // drill down: show the same rows per text before navigating
      this.caches.heatmapPer = "text";
      await this.refresh("heatmap");
      return;
    }
    const focusLabel = await this.resolveFocusLabel(row, col);
    this.state = selectText(this.state, col, focusLabel);
    await this.refresh("browse");
  }

  /**
   * Heatmap rows are labels or values depending on grouping; the browse
   * anchors are per label, so a value row resolves to the first annotated
   * label carrying that value in the target text.
   */
  private async resolveFocusLabel(row: string, col: string): Promise<string | null> {
    if ((this.caches.heatmap?.group_by ?? this.caches.heatmapGroupBy) === "label") {
      return row;
    }
    try {
      const payload = this.observe(await this.api.text(col, this.state.strategy));
      const span = payload.annotations.find((a) => a.value === row);
      return span?.label ?? null;
    } catch {
      return null;
    }
  }

  // -------------------------------------------------------------- lexicon

  private async saveLexicon(): Promise<void> {
    if (this.state.lexiconDraft === null) {
      this.setNotice("nothing to save: the editor matches the server");
      this.render();
      return;
    }
    try {
      this.observe(await this.api.saveLexicon(this.state.lexiconDraft, this.state.strategy));
    } catch (error) {
      if (error instanceof ApiError && error.lineErrors.length > 0) {
        this.caches.lexiconErrors = error.lineErrors;
      } else {
        this.setNotice(describe(error));
      }
      this.render();
      return;
    }
    this.caches.lexiconErrors = [];
    this.state = discardDraft(this.state);
    this.caches.lexicon = this.observe(await this.api.lexicon());
    this.state = markRendered(this.state, "lexicon");
    await this.startAnnotateJob();
  }

  private async startAnnotateJob(): Promise<void> {
    try {
      this.caches.job = this.observe(await this.api.submitAnnotateJob(this.state.strategy));
    } catch (error) {
      this.setNotice(describe(error));
      this.render();
      return;
    }
    this.render();
    this.pollJob(this.caches.job.id);
  }

  private pollJob(jobId: string): void {
    if (this.pollTimer !== null) {
      window.clearTimeout(this.pollTimer);
    }
    this.pollTimer = window.setTimeout(() => void this.checkJob(jobId), JOB_POLL_MS);
  }

  private async checkJob(jobId: string): Promise<void> {
    let job: JobPayload;
    try {
      job = this.observe(await this.api.job(jobId));
    } catch (error) {
      this.setNotice(describe(error));
      this.render();
      return;
    }
    this.caches.job = job;
    if (job.status === "queued" || job.status === "running") {
      this.render();
      this.pollJob(jobId);
      return;
    }
    // finished: counts views must reflect the new annotations
    if (job.status === "done") {
      this.caches.heatmap = null;
      this.caches.venn = null;
      this.caches.text = null;
      this.caches.labelByText = null;
      this.caches.stemOwners = null;
      if (this.state.view === "heatmap" || this.state.view === "venn" || this.state.view === "browse") {
        await this.refresh(this.state.view);
        return;
      }
    }
    this.render();
  }
}

function describe(error: unknown): string {
  if (error instanceof ApiError) {
    return `request failed (${error.status}): ${error.message}`;
  }
  return error instanceof Error ? error.message : String(error);
}

const rootElement = document.getElementById("app");
if (rootElement !== null) {
  const app = new App(new Api(), rootElement);
  void app.start();
}
