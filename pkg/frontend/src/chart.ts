/**
 * Chart model and SVG rendering for the proposed-vs-baseline comparison.
 *
 * Two metric groups (admission rate, total cost), two bars per group.
 * Everything is normalized by the baseline, so baseline bars sit exactly
 * at 1.0 and carry no error bar; proposed bars show the mean across seeds
 * with the per-seed sample standard deviation as a symmetric error bar.
 */

import { ComparisonTable } from "./csv.js";
import { mean, sampleStd } from "./stats.js";

export interface BarGroup {
  metric: string;
  baseline: number;
  proposed: number;
  /** Sample standard deviation of the per-seed normalized values. */
  error: number;
}

export interface ChartModel {
  title: string;
  subtitle: string;
  groups: BarGroup[];
}

export function buildChartModel(table: ComparisonTable, panelLabel: string): ChartModel {
  const adm = table.rows.map((r) => r.normAdmission);
  const cost = table.rows.map((r) => r.normCost);
  const seeds = table.rows.map((r) => r.seed).join(", ");
  const policy = table.rows[0].policy;
  const jobs = table.rows[0].total;
  return {
    title: "Proposed vs baseline (normalized)",
    subtitle: `${panelLabel} panel | policy ${policy} | ${jobs} jobs | seeds ${seeds}`,
    groups: [
      { metric: "admission_rate", baseline: 1.0, proposed: mean(adm), error: sampleStd(adm) },
      { metric: "total_cost", baseline: 1.0, proposed: mean(cost), error: sampleStd(cost) },
    ],
  };
}

const WIDTH = 640;
const HEIGHT = 420;
const MARGIN = { top: 64, right: 24, bottom: 56, left: 56 };
const BASELINE_FILL = "#9aa0a6";
const PROPOSED_FILL = "#3b6fb6";

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/**
 * Render the model as a standalone SVG document.
 *
 * Each bar carries data-metric / data-series / data-value attributes and
 * each error bar data-err, so tests can read chart semantics back out of
 * the file instead of comparing pixels.
 */
export function renderSvg(model: ChartModel): string {
  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const yMax = Math.max(
    1.2,
    ...model.groups.map((g) => Math.max(g.baseline, g.proposed + g.error) * 1.1),
  );
  const yPix = (v: number) => MARGIN.top + plotH * (1 - v / yMax);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
      `viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif">`,
    `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`,
    `<text x="${WIDTH / 2}" y="24" text-anchor="middle" font-size="16">` +
      `${esc(model.title)}</text>`,
    `<text x="${WIDTH / 2}" y="44" text-anchor="middle" font-size="11" fill="#555">` +
      `${esc(model.subtitle)}</text>`,
  );

  // horizontal grid lines and axis labels at a fixed 0.2 step
  for (let v = 0; v <= yMax + 1e-9; v += 0.2) {
    const y = yPix(v);
    parts.push(
      `<line x1="${MARGIN.left}" y1="${y}" x2="${WIDTH - MARGIN.right}" y2="${y}" ` +
        `stroke="#ddd" stroke-width="1"/>`,
      `<text x="${MARGIN.left - 8}" y="${y + 4}" text-anchor="end" font-size="11">` +
        `${v.toFixed(1)}</text>`,
    );
  }
  // emphasize the y = 1 reference line
  parts.push(
    `<line x1="${MARGIN.left}" y1="${yPix(1)}" x2="${WIDTH - MARGIN.right}" ` +
      `y2="${yPix(1)}" stroke="#888" stroke-width="1" stroke-dasharray="4 3"/>`,
  );

  const groupW = plotW / model.groups.length;
  const barW = groupW * 0.28;
  model.groups.forEach((g, i) => {
    const cx = MARGIN.left + groupW * (i + 0.5);
    const bars: Array<[string, number, string]> = [
      ["baseline", g.baseline, BASELINE_FILL],
      ["proposed", g.proposed, PROPOSED_FILL],
    ];
    bars.forEach(([series, value, fill], k) => {
      const x = cx + (k === 0 ? -barW - 4 : 4);
      parts.push(
        `<rect data-metric="${g.metric}" data-series="${series}" ` +
          `data-value="${value}" x="${x}" y="${yPix(value)}" ` +
          `width="${barW}" height="${yPix(0) - yPix(value)}" fill="${fill}"/>`,
      );
    });
    // error bar on the proposed series only
    const ex = cx + 4 + barW / 2;
    const yLo = yPix(g.proposed - g.error);
    const yHi = yPix(g.proposed + g.error);
    parts.push(
      `<g data-metric="${g.metric}" data-err="${g.error}" stroke="black" stroke-width="1.5">` +
        `<line x1="${ex}" y1="${yLo}" x2="${ex}" y2="${yHi}"/>` +
        `<line x1="${ex - 6}" y1="${yLo}" x2="${ex + 6}" y2="${yLo}"/>` +
        `<line x1="${ex - 6}" y1="${yHi}" x2="${ex + 6}" y2="${yHi}"/>` +
        `</g>`,
    );
    parts.push(
      `<text x="${cx}" y="${HEIGHT - MARGIN.bottom + 20}" text-anchor="middle" ` +
        `font-size="12">${esc(g.metric.replace("_", " "))}</text>`,
    );
  });

  // legend
  const lx = WIDTH - MARGIN.right - 150;
  parts.push(
    `<rect x="${lx}" y="${MARGIN.top - 10}" width="12" height="12" fill="${BASELINE_FILL}"/>`,
    `<text x="${lx + 18}" y="${MARGIN.top}" font-size="11">baseline</text>`,
    `<rect x="${lx + 80}" y="${MARGIN.top - 10}" width="12" height="12" fill="${PROPOSED_FILL}"/>`,
    `<text x="${lx + 98}" y="${MARGIN.top}" font-size="11">proposed</text>`,
  );

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
