/**
 * Pure text-to-markup helpers shared by the views. No DOM access here so
 * everything is unit-testable as plain string functions.
 */

import type { AnnotationSpan } from "./api.js";

export function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}

export interface Segment {
  text: string;
  span: AnnotationSpan | null;
}

/**
 * Split raw text into alternating plain and annotated segments using the
 * spans' character offsets. Spans are assumed sorted and non-overlapping
 * (the service guarantees both); anything violating that is dropped rather
 * than corrupting the rendering.
 */
export function segmentText(raw: string, spans: AnnotationSpan[]): Segment[] {
  const segments: Segment[] = [];
  let cursor = 0;
  for (const span of spans) {
    if (span.start < cursor || span.end > raw.length || span.end <= span.start) {
      continue;
    }
    if (span.start > cursor) {
      segments.push({ text: raw.slice(cursor, span.start), span: null });
    }
    segments.push({ text: raw.slice(span.start, span.end), span });
    cursor = span.end;
  }
  if (cursor < raw.length) {
    segments.push({ text: raw.slice(cursor), span: null });
  }
  return segments;
}

/** "alpha/the-lantern-keeper" -> "the-lantern-keeper" */
export function textName(qualifiedId: string): string {
  const slash = qualifiedId.indexOf("/");
  return slash < 0 ? qualifiedId : qualifiedId.slice(slash + 1);
}
