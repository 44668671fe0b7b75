/** File-level entry point: read a comparison CSV, write one SVG per panel. */

import { readFileSync, writeFileSync } from "node:fs";
import { basename, extname } from "node:path";

import { buildChartModel, renderSvg } from "./chart.js";
import { parseComparisonCsv } from "./csv.js";

export type Panel = "small" | "large" | "both";

export interface PlotSpec {
  /** Comparison CSV for the small panel (and the only one unless panel=both). */
  csv: string;
  /** Comparison CSV for the large panel; required when panel is "both". */
  csvLarge?: string;
  out: string;
  panel: Panel;
}

function suffixed(out: string, suffix: string): string {
  const ext = extname(out);
  return out.slice(0, out.length - ext.length) + "-" + suffix + ext;
}

function renderOne(csvPath: string, outPath: string, label: string): string {
  const table = parseComparisonCsv(readFileSync(csvPath, "utf8"));
  const model = buildChartModel(table, label);
  model.subtitle += ` | ${basename(csvPath)}`;
  writeFileSync(outPath, renderSvg(model));
  return outPath;
}

/**
 * Render the requested panels; returns the written file paths.
 *
 * Output is SVG markup regardless of the output extension; the chart is
 * vector-native and tests read semantics from its data attributes.
 */
export function renderComparison(spec: PlotSpec): string[] {
  if (spec.panel === "both") {
    if (!spec.csvLarge) {
      throw new Error("panel 'both' needs --csv-large with the large-scale CSV");
    }
    return [
      renderOne(spec.csv, suffixed(spec.out, "small"), "small"),
      renderOne(spec.csvLarge, suffixed(spec.out, "large"), "large"),
    ];
  }
  const csv = spec.panel === "large" && spec.csvLarge ? spec.csvLarge : spec.csv;
  return [renderOne(csv, spec.out, spec.panel)];
}
