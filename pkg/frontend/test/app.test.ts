// @vitest-environment happy-dom
//
// Drives the application shell against a faked service: the four review
// behaviors (live re-highlighting, heatmap navigation, rejected lexicon
// edits, accepted edits triggering a visible re-annotation job) must work
// end to end without a page reload.

import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { Api } from "../src/api.js";
import { App } from "../src/app.js";
import { firstOccurrenceAnchor } from "../src/views/browse.js";

interface FakeState {
  hash: string;
  jobPolls: number;
  motherCount: number;
  savedText: string | null;
  rejectNextSave: boolean;
  requests: string[];
}

function makeFakeFetch(state: FakeState): typeof fetch {
  const envelope = (data: unknown) =>
    new Response(
      JSON.stringify({ lexicon_hash: state.hash, strategy: "snowball", model_digest: null, data }),
      { status: 200, headers: { "Content-Type": "application/json" } },
    );

  return async (input: RequestInfo | URL, init?: RequestInit): Promise<Response> => {
    const url = new URL(String(input), "http://service");
    const path = url.pathname;
    const strategy = url.searchParams.get("strategy") ?? "snowball";
    state.requests.push(`${init?.method ?? "GET"} ${path}?${url.searchParams}`);

    if (path === "/corpora") {
      return envelope([{ id: "alpha", texts: 2, symbols: 100, words: 20 }]);
    }
    if (path === "/corpora/alpha/texts") {
      return envelope([
        { id: "alpha/one", title: "Tale One" },
        { id: "alpha/two", title: "Tale Two" },
      ]);
    }
    if (path.startsWith("/texts/")) {
      // exact finds one marker, snowball both: enough to see re-highlighting
      const all = [
        { token_index: 1, surface: "mother", stem: "mother", label: "mother", value: "Benevolence", start: 4, end: 10 },
        { token_index: 3, surface: "mothers", stem: "mother", label: "mother", value: "Benevolence", start: 15, end: 22 },
      ];
      const annotations = strategy === "exact" ? all.slice(0, 1) : all;
      return envelope({
        id: "alpha/one",
        corpus_id: "alpha",
        title: "Tale One",
        raw: "the mother and mothers spoke",
        annotations,
      });
    }
    if (path === "/heatmap") {
      return envelope({
        group_by: "label",
        per: "text",
        rows: ["mother"],
        cols: ["alpha/one", "alpha/two"],
        counts: [[state.motherCount, 1]],
      });
    }
    if (path === "/venn") {
      return envelope({ corpora: ["alpha"], regions: { "1": ["mother"] } });
    }
    if (path === "/lexicon" && (init?.method ?? "GET") === "GET") {
      return envelope({
        text: state.savedText ?? "mother | Benevolence | mother",
        hash: state.hash,
        groups: [{ label: "mother", synonyms: ["mother"], value: "Benevolence" }],
      });
    }
    if (path === "/lexicon" && init?.method === "PUT") {
      if (state.rejectNextSave) {
        return new Response(
          JSON.stringify({ errors: [{ line: 3, message: "expected 'label | value | synonyms'" }] }),
          { status: 400, headers: { "Content-Type": "application/json" } },
        );
      }
      state.savedText = (JSON.parse(String(init?.body)) as { text: string }).text;
      state.hash = "hash-2";
      return envelope({ hash: state.hash, groups: 1 });
    }
    if (path === "/jobs/annotate" && init?.method === "POST") {
      return envelope({ id: "job-0001", status: "queued" });
    }
    if (path === "/jobs/job-0001") {
      state.jobPolls += 1;
      if (state.jobPolls < 2) {
        return envelope({ id: "job-0001", kind: "annotate", status: "running", log: ["alpha: 3 annotations"], error: null });
      }
      state.motherCount = 9; // the re-annotation changed the counts
      return envelope({ id: "job-0001", kind: "annotate", status: "done", log: ["alpha: 9 annotations"], error: null });
    }
    throw new Error(`unrouted request: ${path}`);
  };
}

async function settle(ms = 30): Promise<void> {
  await new Promise((resolve) => setTimeout(resolve, ms));
}

let state: FakeState;
let root: HTMLElement;
let app: App;

beforeEach(async () => {
  state = {
    hash: "hash-1",
    jobPolls: 0,
    motherCount: 4,
    savedText: null,
    rejectNextSave: false,
    requests: [],
  };
  vi.stubGlobal("fetch", makeFakeFetch(state));
  document.body.innerHTML = '<div id="app"></div>';
  root = document.getElementById("app") as HTMLElement;
  app = new App(new Api(), root);
  await app.start();
  await settle();
});

afterEach(() => {
  vi.unstubAllGlobals();
});

function click(selector: string): void {
  const element = root.querySelector(selector);
  if (element === null) throw new Error(`nothing matches ${selector}`);
  element.dispatchEvent(new Event("click", { bubbles: true, cancelable: true }));
}

describe("strategy switching", () => {
  it("re-highlights the open text without a reload", async () => {
    click('[data-action="pick-text"][data-text="alpha/one"]');
    await settle();
    expect(root.querySelectorAll("mark.marker")).toHaveLength(2);

    const picker = root.querySelector("#strategy-picker") as HTMLSelectElement;
    picker.value = "exact";
    picker.dispatchEvent(new Event("change", { bubbles: true }));
    await settle();

    expect(root.querySelectorAll("mark.marker")).toHaveLength(1);
    expect(state.requests.some((r) => r.includes("/texts/alpha/one?strategy=exact"))).toBe(true);
  });
});

describe("heatmap navigation", () => {
  it("opens the clicked column's text at the label's first occurrence", async () => {
    click('[data-view="heatmap"]');
    await settle();
    click('td.cell[data-row="mother"][data-col="alpha/one"]');
    await settle();

    expect(app.state.view).toBe("browse");
    expect(app.state.textId).toBe("alpha/one");
    const anchor = root.querySelector(`#${firstOccurrenceAnchor("mother")}`);
    expect(anchor).not.toBeNull();
    expect(anchor?.textContent).toBe("mother");
  });
});

describe("token occurrences", () => {
  it("lists per-text counts from the heatmap when a marker is clicked", async () => {
    click('[data-action="pick-text"][data-text="alpha/one"]');
    await settle();
    click("mark.marker");
    await settle();

    const panel = root.querySelector(".occurrences");
    expect(panel).not.toBeNull();
    expect(panel?.textContent).toContain("Tale One (4)");
    expect(panel?.textContent).toContain("Tale Two");
    expect(panel?.querySelectorAll('[data-action="occurrence"]')).toHaveLength(2);
    expect(state.requests.some((r) => r.includes("group_by=label") && r.includes("per=text"))).toBe(true);
  });
});

describe("venn regions", () => {
  it("resolves owning groups from annotation spans on region click", async () => {
    click('[data-view="venn"]');
    await settle();
    click('[data-action="region"][data-mask="1"]');
    await settle();

    const detail = root.querySelector(".region-detail");
    expect(detail).not.toBeNull();
    expect(detail?.textContent).toContain("mother (Benevolence)");
  });
});

describe("lexicon editing", () => {
  function editAndSave(text: string): void {
    const editor = root.querySelector("#lexicon-editor") as HTMLTextAreaElement;
    editor.value = text;
    editor.dispatchEvent(new Event("input", { bubbles: true }));
    click('[data-action="lexicon-save"]');
  }

  it("shows the server's line-numbered rejection and keeps the draft", async () => {
    click('[data-view="lexicon"]');
    await settle();
    state.rejectNextSave = true;
    editAndSave("broken draft");
    await settle();

    const errors = root.querySelector(".lexicon-errors");
    expect(errors?.textContent).toContain("line 3");
    expect(errors?.textContent).toContain("expected 'label | value | synonyms'");
    const editor = root.querySelector("#lexicon-editor") as HTMLTextAreaElement;
    expect(editor.value).toBe("broken draft");
    expect(state.savedText).toBeNull();
  });

  it("runs a visible re-annotation job and refreshes the counts", async () => {
    click('[data-view="heatmap"]');
    await settle();
    expect(root.querySelector("td.cell")?.textContent).toBe("4");

    click('[data-view="lexicon"]');
    await settle();
    editAndSave("mother | Benevolence | mother, mama");
    await settle();
    expect(state.savedText).toBe("mother | Benevolence | mother, mama");
    expect(root.querySelector(".job-status")?.textContent).toContain("job-0001");

    await settle(700); // two poll rounds at 300ms
    expect(root.querySelector(".job-status")?.textContent).toContain("done");

    const heatmapTab = root.querySelector('[data-view="heatmap"]');
    expect(heatmapTab?.innerHTML).toContain("stale-dot");
    click('[data-view="heatmap"]');
    await settle();
    expect(root.querySelector("td.cell")?.textContent).toBe("9");
  });
});
