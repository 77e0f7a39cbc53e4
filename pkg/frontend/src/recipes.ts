/**
 * The six standard figure recipes.
 *
 * Log transforms are applied here from the raw CSV columns, so one
 * width sweep serves both the beta_F_t and beta_F representations.
 * Unconverged rows become gaps and are counted in a figure note.
 */

import { SweepFile, SweepRow } from "./csv.js";
import { SeriesIn, buildFigure, FigureModel } from "./figure.js";

export type FigureId = "fig2" | "fig3" | "fig4" | "fig5" | "fig6" | "fig7";

export const FIGURE_IDS: FigureId[] = ["fig2", "fig3", "fig4", "fig5", "fig6", "fig7"];

interface RecipeSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  x(row: SweepRow): number;
  y(row: SweepRow): number | null;
  curveLabel(file: SweepFile): string;
}

function log10OfMinus(v: number): number | null {
  return v < 0 ? Math.log10(-v) : null;
}

function labelByT(file: SweepFile): string {
  const t = file.rows[0]?.t;
  return `t = ${t}`;
}

function labelByWidth(file: SweepFile): string {
  const d = file.rows[0]?.d_over_a;
  return `d/a = ${Number(d?.toPrecision(3))}`;
}

const RECIPES: Record<FigureId, RecipeSpec> = {
  fig2: {
    title: "Free energy vs relative width (n = 1.1)",
    xLabel: "d/a",
    yLabel: "log10(-beta F t)",
    x: (r) => r.d_over_a,
    y: (r) => log10OfMinus(r.beta_F_t),
    curveLabel: labelByT,
  },
  fig3: {
    title: "Free energy vs relative width (n = 1.1)",
    xLabel: "d/a",
    yLabel: "log10(-beta F)",
    x: (r) => r.d_over_a,
    y: (r) => log10OfMinus(r.beta_F),
    curveLabel: labelByT,
  },
  fig4: {
    title: "Free energy vs temperature (n = 1.1)",
    xLabel: "log10 t",
    yLabel: "log10(-beta F t)",
    x: (r) => Math.log10(r.t),
    y: (r) => log10OfMinus(r.beta_F_t),
    curveLabel: labelByWidth,
  },
  fig5: {
    title: "Free energy vs temperature (n = 2)",
    xLabel: "log10 t",
    yLabel: "log10(-beta F t)",
    x: (r) => Math.log10(r.t),
    y: (r) => log10OfMinus(r.beta_F_t),
    curveLabel: labelByWidth,
  },
  fig6: {
    title: "Free energy vs temperature (ideal metal, static mode doubled)",
    xLabel: "log10 t",
    yLabel: "log10(-beta F t)",
    x: (r) => Math.log10(r.t),
    y: (r) => log10OfMinus(r.beta_F_t),
    curveLabel: labelByWidth,
  },
  fig7: {
    title: "Static-term weight Y vs temperature (n = 1.1)",
    xLabel: "log10 t",
    yLabel: "Y",
    x: (r) => Math.log10(r.t),
    y: (r) => (Number.isFinite(r.Y) ? r.Y : null),
    curveLabel: labelByWidth,
  },
};

export function buildRecipeFigure(id: FigureId, files: SweepFile[]): FigureModel {
  const spec = RECIPES[id];
  if (!spec) {
    throw new Error(`unknown figure id '${id}'`);
  }
  if (files.length === 0) {
    throw new Error("no input data files");
  }
  let dropped = 0;
  const series: SeriesIn[] = files.map((f) => ({
    label: spec.curveLabel(f),
    points: f.rows.map((row) => {
      if (!row.converged) {
        dropped += 1;
        return null;
      }
      const y = spec.y(row);
      if (y === null) {
        dropped += 1;
        return null;
      }
      return { x: spec.x(row), y };
    }),
  }));
  const notes = dropped > 0
    ? [`${dropped} unconverged/undefined point(s) omitted`]
    : [];
  return buildFigure(spec.title, spec.xLabel, spec.yLabel, series, notes);
}
