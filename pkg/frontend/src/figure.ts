/**
 * Backend-independent figure model: scaled curves in pixel space plus
 * axis/tick/legend geometry. Both the SVG and the PNG backends draw
 * exactly this, so their contents agree.
 */

import { Scale, linearScale, tickLabel } from "./scale.js";

export interface Pt {
  x: number;
  y: number;
}

export interface Curve {
  label: string;
  color: string;
  /** polyline segments; a new segment starts after a data gap */
  segments: Pt[][];
}

export interface FigureModel {
  width: number;
  height: number;
  plot: { x0: number; y0: number; x1: number; y1: number };
  title: string;
  xLabel: string;
  yLabel: string;
  xScale: Scale;
  yScale: Scale;
  xTicks: { px: number; label: string }[];
  yTicks: { px: number; label: string }[];
  curves: Curve[];
  notes: string[];
}

export const PALETTE = [
  "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
  "#8c564b", "#17becf", "#7f7f7f",
];

export interface SeriesIn {
  label: string;
  /** null marks a gap (unconverged or undefined value) */
  points: (Pt | null)[];
}

export function buildFigure(title: string, xLabel: string, yLabel: string,
                            series: SeriesIn[], notes: string[]): FigureModel {
  const width = 720;
  const height = 520;
  const plot = { x0: 80, y0: 48, x1: width - 24, y1: height - 64 };

  const xs: number[] = [];
  const ys: number[] = [];
  for (const s of series) {
    for (const p of s.points) {
      if (p) {
        xs.push(p.x);
        ys.push(p.y);
      }
    }
  }
  if (xs.length === 0) {
    throw new Error("nothing to plot: every point is a gap");
  }
  const xScale = linearScale(Math.min(...xs), Math.max(...xs), plot.x0, plot.x1);
  // y axis: pad 5% and draw top-down
  let yMin = Math.min(...ys);
  let yMax = Math.max(...ys);
  const pad = yMax > yMin ? 0.05 * (yMax - yMin) : 0;
  const yScale = linearScale(yMin - pad, yMax + pad, plot.y1, plot.y0);

  const curves: Curve[] = series.map((s, i) => {
    const segments: Pt[][] = [];
    let current: Pt[] = [];
    for (const p of s.points) {
      if (p === null) {
        if (current.length > 0) segments.push(current);
        current = [];
      } else {
        current.push({ x: xScale.px(p.x), y: yScale.px(p.y) });
      }
    }
    if (current.length > 0) segments.push(current);
    return { label: s.label, color: PALETTE[i % PALETTE.length]!, segments };
  });

  return {
    width,
    height,
    plot,
    title,
    xLabel,
    yLabel,
    xScale,
    yScale,
    xTicks: xScale.ticks.map((v) => ({ px: xScale.px(v), label: tickLabel(v) })),
    yTicks: yScale.ticks.map((v) => ({ px: yScale.px(v), label: tickLabel(v) })),
    curves,
    notes,
  };
}
