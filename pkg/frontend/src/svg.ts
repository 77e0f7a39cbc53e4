/**
 * SVG backend: hand-built markup, two-decimal coordinates, no
 * timestamps or random ids, so identical input bytes give identical
 * output bytes.
 */

import { FigureModel } from "./figure.js";

const FONT = "font-family=\"Helvetica, Arial, sans-serif\"";

function n(v: number): string {
  return v.toFixed(2);
}

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderSvg(fig: FigureModel): string {
  const { plot } = fig;
  const out: string[] = [];
  out.push(`<svg xmlns="http://www.w3.org/2000/svg" width="${fig.width}" ` +
           `height="${fig.height}" viewBox="0 0 ${fig.width} ${fig.height}">`);
  out.push(`<rect x="0" y="0" width="${fig.width}" height="${fig.height}" fill="#ffffff"/>`);
  out.push(`<text x="${n(fig.width / 2)}" y="28" text-anchor="middle" ${FONT} ` +
           `font-size="16">${esc(fig.title)}</text>`);

  // grid + ticks
  for (const t of fig.xTicks) {
    out.push(`<line x1="${n(t.px)}" y1="${n(plot.y0)}" x2="${n(t.px)}" ` +
             `y2="${n(plot.y1)}" stroke="#dddddd" stroke-width="1"/>`);
    out.push(`<line x1="${n(t.px)}" y1="${n(plot.y1)}" x2="${n(t.px)}" ` +
             `y2="${n(plot.y1 + 5)}" stroke="#000000" stroke-width="1"/>`);
    out.push(`<text x="${n(t.px)}" y="${n(plot.y1 + 20)}" text-anchor="middle" ` +
             `${FONT} font-size="12">${esc(t.label)}</text>`);
  }
  for (const t of fig.yTicks) {
    out.push(`<line x1="${n(plot.x0)}" y1="${n(t.px)}" x2="${n(plot.x1)}" ` +
             `y2="${n(t.px)}" stroke="#dddddd" stroke-width="1"/>`);
    out.push(`<line x1="${n(plot.x0 - 5)}" y1="${n(t.px)}" x2="${n(plot.x0)}" ` +
             `y2="${n(t.px)}" stroke="#000000" stroke-width="1"/>`);
    out.push(`<text x="${n(plot.x0 - 9)}" y="${n(t.px + 4)}" text-anchor="end" ` +
             `${FONT} font-size="12">${esc(t.label)}</text>`);
  }

  // frame
  out.push(`<rect x="${n(plot.x0)}" y="${n(plot.y0)}" width="${n(plot.x1 - plot.x0)}" ` +
           `height="${n(plot.y1 - plot.y0)}" fill="none" stroke="#000000" stroke-width="1"/>`);

  // curves
  for (const c of fig.curves) {
    for (const seg of c.segments) {
      if (seg.length === 1) {
        out.push(`<circle cx="${n(seg[0]!.x)}" cy="${n(seg[0]!.y)}" r="2.5" fill="${c.color}"/>`);
        continue;
      }
      const pts = seg.map((p) => `${n(p.x)},${n(p.y)}`).join(" ");
      out.push(`<polyline points="${pts}" fill="none" stroke="${c.color}" stroke-width="2"/>`);
    }
  }

  // axis labels
  out.push(`<text x="${n((plot.x0 + plot.x1) / 2)}" y="${n(fig.height - 28)}" ` +
           `text-anchor="middle" ${FONT} font-size="14">${esc(fig.xLabel)}</text>`);
  out.push(`<text x="20" y="${n((plot.y0 + plot.y1) / 2)}" text-anchor="middle" ` +
           `${FONT} font-size="14" transform="rotate(-90 20 ${n((plot.y0 + plot.y1) / 2)})">` +
           `${esc(fig.yLabel)}</text>`);

  // legend
  let ly = plot.y0 + 12;
  for (const c of fig.curves) {
    out.push(`<line x1="${n(plot.x0 + 12)}" y1="${n(ly)}" x2="${n(plot.x0 + 40)}" ` +
             `y2="${n(ly)}" stroke="${c.color}" stroke-width="2"/>`);
    out.push(`<text x="${n(plot.x0 + 46)}" y="${n(ly + 4)}" ${FONT} font-size="12">` +
             `${esc(c.label)}</text>`);
    ly += 16;
  }
  for (const note of fig.notes) {
    out.push(`<text x="${n(plot.x0 + 12)}" y="${n(ly + 4)}" ${FONT} font-size="11" ` +
             `fill="#aa3333">${esc(note)}</text>`);
    ly += 15;
  }

  out.push("</svg>");
  return out.join("\n") + "\n";
}
