/**
 * Sweep-CSV reader for the casphere output schema.
 *
 * Files carry `# key: value` metadata lines, then a header row, then
 * data rows. Floats round-trip exactly (the producer writes shortest
 * repr); `converged` is true/false.
 */

import { readFileSync } from "fs";

export interface SweepRow {
  t: number;
  d_over_a: number;
  model: string;
  beta_F: number;
  beta_F_t: number;
  beta_F_m0: number;
  Y: number;
  terms_used: number;
  converged: boolean;
}

export interface SweepFile {
  path: string;
  meta: Record<string, string>;
  rows: SweepRow[];
}

export const REQUIRED_COLUMNS = [
  "t", "d_over_a", "model", "beta_F", "beta_F_t", "beta_F_m0",
  "Y", "terms_used", "converged",
] as const;

export class CsvError extends Error {}

export function parseSweepCsv(path: string, text: string): SweepFile {
  const meta: Record<string, string> = {};
  const lines = text.split(/\r?\n/).filter((ln) => ln.length > 0);
  const dataLines: string[] = [];
  for (const ln of lines) {
    if (ln.startsWith("#")) {
      const m = ln.match(/^#\s*([^:]+):\s*(.*)$/);
      if (m) meta[m[1]!.trim()] = m[2]!.trim();
    } else {
      dataLines.push(ln);
    }
  }
  if (dataLines.length === 0) {
    throw new CsvError(`${path}: no header row`);
  }
  const cols = dataLines[0]!.split(",");
  for (const need of REQUIRED_COLUMNS) {
    if (!cols.includes(need)) {
      throw new CsvError(`${path}: missing required column '${need}'`);
    }
  }
  if (dataLines.length === 1) {
    throw new CsvError(`${path}: no data rows`);
  }
  const idx = (name: string) => cols.indexOf(name);
  const rows: SweepRow[] = [];
  for (const ln of dataLines.slice(1)) {
    const parts = ln.split(",");
    if (parts.length !== cols.length) {
      throw new CsvError(`${path}: ragged row '${ln}'`);
    }
    rows.push({
      t: Number(parts[idx("t")]),
      d_over_a: Number(parts[idx("d_over_a")]),
      model: parts[idx("model")]!,
      beta_F: Number(parts[idx("beta_F")]),
      beta_F_t: Number(parts[idx("beta_F_t")]),
      beta_F_m0: Number(parts[idx("beta_F_m0")]),
      Y: Number(parts[idx("Y")]),
      terms_used: Number(parts[idx("terms_used")]),
      converged: parts[idx("converged")] === "true",
    });
  }
  return { path, meta, rows };
}

export function readSweepCsv(path: string): SweepFile {
  return parseSweepCsv(path, readFileSync(path, "utf-8"));
}
