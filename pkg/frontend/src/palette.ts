/**
 * The value-to-color mapping used by every view.
 *
 * One entry per value, fixed here and nowhere else, so a label is painted
 * identically in the browse highlights, the heatmap rows, the region
 * listings, and the cluster chips. Colors are mid-saturation so black text
 * stays readable on top of them.
 */

export const VALUE_COLORS: Record<string, string> = {
  Security: "#7f9fc4",
  Tradition: "#b08968",
  Conformity: "#8f8f5a",
  "Self-Direction": "#c48fbf",
  Stimulation: "#e0a04e",
  Hedonism: "#d97d7d",
  Achievement: "#c9b458",
  Power: "#a98ad4",
  Benevolence: "#72b377",
  Universalism: "#5fb3b3",
};

export const VALUE_NAMES: string[] = Object.keys(VALUE_COLORS);

/** Unknown values fall back to grey instead of crashing a render. */
export function colorOf(value: string): string {
  return VALUE_COLORS[value] ?? "#999999";
}
