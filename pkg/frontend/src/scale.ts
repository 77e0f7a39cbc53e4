/** Linear axis scaling with tick selection on round steps. */

export interface Scale {
  min: number;
  max: number;
  /** data value -> pixel coordinate */
  px(v: number): number;
  ticks: number[];
}

const TICK_STEPS = [1, 2, 2.5, 5, 10];

export function niceTicks(min: number, max: number, target = 6): number[] {
  if (!(max > min)) return [min];
  const span = max - min;
  const rawStep = span / target;
  const mag = Math.pow(10, Math.floor(Math.log10(rawStep)));
  let step = 10 * mag;
  for (const s of TICK_STEPS) {
    if (s * mag >= rawStep) {
      step = s * mag;
      break;
    }
  }
  const ticks: number[] = [];
  let v = Math.ceil(min / step) * step;
  // snap near-zero rounding residue
  for (; v <= max + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

export function linearScale(min: number, max: number,
                            pxLo: number, pxHi: number): Scale {
  if (!(max > min)) {
    // degenerate range: widen symmetrically so a flat curve still plots
    const pad = Math.abs(min) > 0 ? Math.abs(min) * 0.05 : 0.5;
    min -= pad;
    max += pad;
  }
  const span = max - min;
  return {
    min,
    max,
    px: (v: number) => pxLo + ((v - min) / span) * (pxHi - pxLo),
    ticks: niceTicks(min, max),
  };
}

/** Format a tick label compactly and deterministically. */
export function tickLabel(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-3) {
    return v.toExponential(0).replace("e+", "e");
  }
  const s = v.toPrecision(4);
  return s.includes(".") ? s.replace(/\.?0+$/, "") : s;
}
