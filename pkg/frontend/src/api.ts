/**
 * Typed client for the annotation service.
 *
 * Every successful response arrives in the same envelope; `data` is the
 * payload and the other fields identify which lexicon, strategy, and model
 * state produced it. The client never computes domain numbers: it fetches,
 * types, and reports errors.
 */

export interface Envelope<T> {
  lexicon_hash: string;
  strategy: string | null;
  model_digest: string | null;
  data: T;
}

export interface CorpusRow {
  id: string;
  texts: number;
  symbols: number;
  words: number;
}

export interface TextRow {
  id: string; // qualified "corpus/text"
  title: string;
}

export interface AnnotationSpan {
  token_index: number;
  surface: string;
  stem: string;
  label: string;
  value: string;
  start: number;
  end: number;
}

export interface TextPayload {
  id: string;
  corpus_id: string;
  title: string;
  raw: string;
  annotations: AnnotationSpan[];
}

export interface LexiconGroup {
  label: string;
  synonyms: string[];
  value: string;
}

export interface LexiconPayload {
  text: string;
  hash: string;
  groups: LexiconGroup[];
}

export interface HeatmapPayload {
  group_by: string;
  per: string;
  rows: string[];
  cols: string[];
  counts: number[][];
}

export interface VennPayload {
  corpora: string[];
  regions: Record<string, string[]>;
}

export interface JobPayload {
  id: string;
  kind?: string;
  status: "queued" | "running" | "done" | "failed";
  log?: string[];
  error?: string | null;
}

export interface GraphPayload {
  corpus_id: string;
  theta: number;
  nodes: string[];
  edges: { a: string; b: string; weight: number }[];
}

export interface CommunitiesPayload {
  corpus_id: string;
  k: number;
  theta: number;
  communities: string[][];
}

export interface ClustersPayload {
  graph: GraphPayload;
  communities: CommunitiesPayload;
}

export interface ComparePayload {
  seed: string;
  k: number;
  theta: number;
  corpora: string[];
  regions: Record<string, string[]>;
}

export interface LexiconLineError {
  line: number | null;
  message: string;
}

/** A non-2xx response, keeping the server's own words. */
export class ApiError extends Error {
  readonly status: number;
  readonly lineErrors: LexiconLineError[];

  constructor(status: number, message: string, lineErrors: LexiconLineError[] = []) {
    super(message);
    this.status = status;
    this.lineErrors = lineErrors;
  }
}

async function toApiError(response: Response): Promise<ApiError> {
  let message = `${response.status}`;
  let lineErrors: LexiconLineError[] = [];
  try {
    const body = await response.json();
    if (Array.isArray(body?.errors)) {
      lineErrors = body.errors as LexiconLineError[];
      message = lineErrors.map((e) => e.message).join("; ");
    } else if (typeof body?.detail === "string") {
      message = body.detail;
    }
  } catch {
    // non-JSON error body: keep the status code message
  }
  return new ApiError(response.status, message, lineErrors);
}

export function qualify(params: Record<string, string | number>): string {
  const q = new URLSearchParams();
  for (const [key, value] of Object.entries(params)) q.set(key, String(value));
  const rendered = q.toString();
  return rendered ? `?${rendered}` : "";
}

export class Api {
  constructor(private readonly base: string = "") {}

  private async getJson<T>(path: string): Promise<Envelope<T>> {
    const response = await fetch(this.base + path);
    if (!response.ok) throw await toApiError(response);
    return (await response.json()) as Envelope<T>;
  }

  corpora(): Promise<Envelope<CorpusRow[]>> {
    return this.getJson("/corpora");
  }

  texts(corpusId: string): Promise<Envelope<TextRow[]>> {
    return this.getJson(`/corpora/${encodeURIComponent(corpusId)}/texts`);
  }

  text(qualifiedId: string, strategy: string): Promise<Envelope<TextPayload>> {
    return this.getJson(`/texts/${qualifiedId}${qualify({ strategy })}`);
  }

  lexicon(): Promise<Envelope<LexiconPayload>> {
    return this.getJson("/lexicon");
  }

  async saveLexicon(text: string, strategy: string): Promise<Envelope<{ hash: string }>> {
    const response = await fetch(`${this.base}/lexicon${qualify({ strategy })}`, {
      method: "PUT",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ text }),
    });
    if (!response.ok) throw await toApiError(response);
    return (await response.json()) as Envelope<{ hash: string }>;
  }

  heatmap(strategy: string, groupBy: string, per: string): Promise<Envelope<HeatmapPayload>> {
    return this.getJson(`/heatmap${qualify({ strategy, group_by: groupBy, per })}`);
  }

  venn(strategy: string): Promise<Envelope<VennPayload>> {
    return this.getJson(`/venn${qualify({ strategy })}`);
  }

  async submitAnnotateJob(strategy: string): Promise<Envelope<JobPayload>> {
    const response = await fetch(`${this.base}/jobs/annotate`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ strategy }),
    });
    if (!response.ok) throw await toApiError(response);
    return (await response.json()) as Envelope<JobPayload>;
  }

  job(id: string): Promise<Envelope<JobPayload>> {
    return this.getJson(`/jobs/${encodeURIComponent(id)}`);
  }

  clusters(corpus: string, k: number, theta: number): Promise<Envelope<ClustersPayload>> {
    return this.getJson(`/clusters${qualify({ corpus, k, theta })}`);
  }

  compare(seed: string, k: number, theta: number): Promise<Envelope<ComparePayload>> {
    return this.getJson(`/clusters/compare${qualify({ seed, k, theta })}`);
  }
}
