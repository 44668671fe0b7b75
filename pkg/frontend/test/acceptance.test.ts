/**
 * Acceptance check for the comparison chart.
 *
 * The fixture is a real five-seed 20-site / 200-job comparison CSV produced
 * by the scheduler's experiment command. The expected means and sample
 * standard deviations below were computed by hand from the per-seed
 * norm_admission and norm_cost columns of that file.
 */

import { mkdtempSync, readFileSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { fileURLToPath } from "node:url";
import { join } from "node:path";

import { afterAll, describe, expect, it } from "vitest";

import { renderComparison } from "../src/render.js";

const FIXTURE = fileURLToPath(new URL("../fixtures/comparison_s20_j200.csv", import.meta.url));
const FIXTURE_LARGE = fileURLToPath(new URL("../fixtures/comparison_s40_j400.csv", import.meta.url));

const HAND_COMPUTED = {
  admission: { mean: 1.0073139966181204, std: 0.004692824555222531 },
  cost: { mean: 0.9839555888637086, std: 0.007682183499557763 },
};

const workDir = mkdtempSync(join(tmpdir(), "render-"));
afterAll(() => rmSync(workDir, { recursive: true, force: true }));

function attr(svg: string, selector: string, name: string): number {
  const element = svg.split("\n").find((line) => line.includes(selector));
  expect(element, `no element matching ${selector}`).toBeDefined();
  const match = element!.match(new RegExp(`${name}="([^"]+)"`));
  expect(match, `no ${name} on ${selector}`).not.toBeNull();
  return Number(match![1]);
}

describe("render acceptance", () => {
  it("draws a two-group chart with baseline at 1.0 and hand-checked error bars", () => {
    const out = join(workDir, "fig.png");
    const written = renderComparison({ csv: FIXTURE, out, panel: "small" });
    expect(written).toEqual([out]);
    const svg = readFileSync(out, "utf8");

    for (const metric of ["admission_rate", "total_cost"]) {
      expect(
        attr(svg, `data-metric="${metric}" data-series="baseline"`, "data-value"),
      ).toBe(1.0);
    }
    expect(
      attr(svg, 'data-metric="admission_rate" data-series="proposed"', "data-value"),
    ).toBeCloseTo(HAND_COMPUTED.admission.mean, 12);
    expect(
      attr(svg, 'data-metric="total_cost" data-series="proposed"', "data-value"),
    ).toBeCloseTo(HAND_COMPUTED.cost.mean, 12);
    expect(
      attr(svg, 'data-metric="admission_rate" data-err', "data-err"),
    ).toBeCloseTo(HAND_COMPUTED.admission.std, 12);
    expect(
      attr(svg, 'data-metric="total_cost" data-err', "data-err"),
    ).toBeCloseTo(HAND_COMPUTED.cost.std, 12);
  });

  it("writes one image per panel under --panel both", () => {
    const out = join(workDir, "pair.svg");
    const written = renderComparison({
      csv: FIXTURE,
      csvLarge: FIXTURE_LARGE,
      out,
      panel: "both",
    });
    expect(written).toEqual([join(workDir, "pair-small.svg"), join(workDir, "pair-large.svg")]);
    expect(readFileSync(written[0], "utf8")).toContain("small panel");
    expect(readFileSync(written[1], "utf8")).toContain("large panel");
  });

  it("is idempotent over the same CSV bytes", () => {
    const outA = join(workDir, "a.svg");
    const outB = join(workDir, "b.svg");
    renderComparison({ csv: FIXTURE, out: outA, panel: "small" });
    renderComparison({ csv: FIXTURE, out: outB, panel: "small" });
    expect(readFileSync(outA, "utf8")).toBe(readFileSync(outB, "utf8"));
  });

  it("fails loudly when the large CSV is missing under --panel both", () => {
    expect(() =>
      renderComparison({ csv: FIXTURE, out: join(workDir, "x.svg"), panel: "both" }),
    ).toThrow(/csv-large/);
  });
});
