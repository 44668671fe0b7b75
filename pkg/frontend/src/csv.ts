/**
 * Strict reader for the scheduler's comparison CSV.
 *
 * The header is a fixed contract; anything else is a hard error that names
 * the offending column. The trailing "mean" row the experiment driver
 * appends is split off so stats are always computed from per-seed rows.
 */

export const EXPECTED_HEADER = [
  "seed",
  "policy",
  "admitted",
  "total",
  "admission_rate",
  "energy_cost",
  "network_cost",
  "total_cost",
  "norm_admission",
  "norm_cost",
  "wall_time_s",
] as const;

export interface ComparisonRow {
  seed: string;
  policy: string;
  admitted: number;
  total: number;
  admissionRate: number;
  energyCost: number;
  networkCost: number;
  totalCost: number;
  normAdmission: number;
  normCost: number;
  wallTimeS: number;
}

export interface ComparisonTable {
  /** Per-seed rows, in file order. */
  rows: ComparisonRow[];
  /** The aggregate row (seed column = "mean"), when present. */
  meanRow: ComparisonRow | null;
}

export class CsvFormatError extends Error {}

function parseNumber(field: string, value: string, line: number): number {
  const n = Number(value);
  if (value.trim() === "" || Number.isNaN(n)) {
    throw new CsvFormatError(
      `line ${line}: column ${field} is not a number: ${JSON.stringify(value)}`,
    );
  }
  return n;
}

export function parseComparisonCsv(text: string): ComparisonTable {
  const lines = text.split(/\r?\n/).filter((l) => l.trim() !== "");
  if (lines.length === 0) {
    throw new CsvFormatError("empty CSV: no header row");
  }
  const header = lines[0].split(",").map((h) => h.trim());
  const missing = EXPECTED_HEADER.filter((h) => !header.includes(h));
  if (missing.length > 0) {
    throw new CsvFormatError(`missing columns: ${missing.join(", ")}`);
  }
  const extra = header.filter((h) => !(EXPECTED_HEADER as readonly string[]).includes(h));
  if (extra.length > 0) {
    throw new CsvFormatError(`unknown columns: ${extra.join(", ")}`);
  }
  if (lines.length === 1) {
    throw new CsvFormatError("empty CSV: header but no data rows");
  }

  const col = (fields: string[], name: string) => fields[header.indexOf(name)];
  const rows: ComparisonRow[] = [];
  let meanRow: ComparisonRow | null = null;
  for (let i = 1; i < lines.length; i++) {
    const fields = lines[i].split(",");
    if (fields.length !== header.length) {
      throw new CsvFormatError(
        `line ${i + 1}: expected ${header.length} fields, got ${fields.length}`,
      );
    }
    const row: ComparisonRow = {
      seed: col(fields, "seed"),
      policy: col(fields, "policy"),
      admitted: parseNumber("admitted", col(fields, "admitted"), i + 1),
      total: parseNumber("total", col(fields, "total"), i + 1),
      admissionRate: parseNumber("admission_rate", col(fields, "admission_rate"), i + 1),
      energyCost: parseNumber("energy_cost", col(fields, "energy_cost"), i + 1),
      networkCost: parseNumber("network_cost", col(fields, "network_cost"), i + 1),
      totalCost: parseNumber("total_cost", col(fields, "total_cost"), i + 1),
      normAdmission: parseNumber("norm_admission", col(fields, "norm_admission"), i + 1),
      normCost: parseNumber("norm_cost", col(fields, "norm_cost"), i + 1),
      wallTimeS: parseNumber("wall_time_s", col(fields, "wall_time_s"), i + 1),
    };
    if (row.seed === "mean") {
      meanRow = row;
    } else {
      rows.push(row);
    }
  }
  if (rows.length === 0) {
    throw new CsvFormatError("no per-seed data rows (only a mean row)");
  }
  return { rows, meanRow };
}
