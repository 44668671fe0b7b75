import { readFileSync } from "node:fs";

import { describe, expect, it } from "vitest";

import { buildChartModel, renderSvg } from "../src/chart.js";
import { parseComparisonCsv } from "../src/csv.js";

const load = (name: string) =>
  parseComparisonCsv(readFileSync(new URL(`../fixtures/${name}`, import.meta.url), "utf8"));

describe("buildChartModel", () => {
  it("pins baseline bars at exactly 1.0", () => {
    const model = buildChartModel(load("comparison_s20_j200.csv"), "small");
    for (const group of model.groups) {
      expect(group.baseline).toBe(1.0);
    }
  });

  it("has one group per metric with the seed list in the subtitle", () => {
    const model = buildChartModel(load("comparison_s20_j200.csv"), "small");
    expect(model.groups.map((g) => g.metric)).toEqual(["admission_rate", "total_cost"]);
    expect(model.subtitle).toContain("seeds 0, 1, 2, 3, 4");
    expect(model.subtitle).toContain("small panel");
    expect(model.subtitle).toContain("200 jobs");
  });

  it("renders a baseline-only CSV with every bar at 1.0", () => {
    const model = buildChartModel(load("baseline_only.csv"), "small");
    for (const group of model.groups) {
      expect(group.baseline).toBe(1.0);
      expect(group.proposed).toBe(1.0);
      expect(group.error).toBe(0);
    }
  });
});

describe("renderSvg", () => {
  it("emits readable data attributes for every bar and error bar", () => {
    const model = buildChartModel(load("comparison_s20_j200.csv"), "small");
    const svg = renderSvg(model);
    for (const group of model.groups) {
      expect(svg).toContain(
        `data-metric="${group.metric}" data-series="baseline" data-value="1"`,
      );
      expect(svg).toContain(
        `data-metric="${group.metric}" data-series="proposed" data-value="${group.proposed}"`,
      );
      expect(svg).toContain(`data-metric="${group.metric}" data-err="${group.error}"`);
    }
  });

  it("is deterministic", () => {
    const model = buildChartModel(load("comparison_s20_j200.csv"), "small");
    expect(renderSvg(model)).toBe(renderSvg(model));
  });
});
