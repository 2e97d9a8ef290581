/**
 * Client view state and its transition rules.
 *
 * Kept framework-free so the rules are unit-testable: every mutation goes
 * through a named transition function that returns a new state. Two
 * invariants live here and nowhere else:
 *
 * - an unsaved lexicon draft is never silently discarded: leaving the
 *   editor keeps the draft, and only an explicit discard or a successful
 *   save clears it;
 * - a view rendered under one lexicon hash is flagged stale as soon as a
 *   response arrives with a different hash, and the flag survives until
 *   that view re-renders.
 */

export type ViewName = "browse" | "heatmap" | "venn" | "lexicon" | "clusters";

export interface ViewState {
  view: ViewName;
  strategy: string;
  corpusId: string | null;
  textId: string | null; // qualified "corpus/text"
  /** label to scroll to / filter by in the browse view */
  focusLabel: string | null;
  /** unsaved editor content; null when the editor mirrors the server */
  lexiconDraft: string | null;
  /** lexicon hash each view was last rendered under */
  renderedHash: Partial<Record<ViewName, string>>;
  /** latest lexicon hash seen in any response envelope */
  currentHash: string | null;
}

export function initialState(): ViewState {
  return {
    view: "browse",
    strategy: "snowball",
    corpusId: null,
    textId: null,
    focusLabel: null,
    lexiconDraft: null,
    renderedHash: {},
    currentHash: null,
  };
}

export function switchView(state: ViewState, view: ViewName): ViewState {
  // the draft rides along untouched: only discardDraft/saveDraft clear it
  return { ...state, view };
}

export function selectCorpus(state: ViewState, corpusId: string): ViewState {
  return { ...state, corpusId, textId: null, focusLabel: null };
}

export function selectText(
  state: ViewState,
  textId: string,
  focusLabel: string | null = null,
): ViewState {
  const corpusId = textId.split("/")[0] ?? state.corpusId;
  return { ...state, view: "browse", corpusId, textId, focusLabel };
}

export function setStrategy(state: ViewState, strategy: string): ViewState {
  return { ...state, strategy };
}

export function editDraft(state: ViewState, draft: string): ViewState {
  return { ...state, lexiconDraft: draft };
}

export function discardDraft(state: ViewState): ViewState {
  return { ...state, lexiconDraft: null };
}

/** Called with every response envelope's lexicon hash. */
export function observeHash(state: ViewState, hash: string): ViewState {
  return { ...state, currentHash: hash };
}

/** Called after a view has rendered from fresh data. */
export function markRendered(state: ViewState, view: ViewName): ViewState {
  if (state.currentHash === null) return state;
  return {
    ...state,
    renderedHash: { ...state.renderedHash, [view]: state.currentHash },
  };
}

/** True when the view shows data from an older lexicon than the server's. */
export function isStale(state: ViewState, view: ViewName): boolean {
  const rendered = state.renderedHash[view];
  return (
    rendered !== undefined &&
    state.currentHash !== null &&
    rendered !== state.currentHash
  );
}

export function hasUnsavedDraft(state: ViewState): boolean {
  return state.lexiconDraft !== null;
}
