/** File-level entry: read sweep CSVs, build a recipe, write SVG + PNG. */

import { writeFileSync } from "fs";

import { readSweepCsv } from "./csv.js";
import { FigureModel } from "./figure.js";
import { renderPng } from "./png.js";
import { FigureId, buildRecipeFigure } from "./recipes.js";
import { renderSvg } from "./svg.js";

export interface RenderResult {
  svgPath: string;
  pngPath: string;
  figure: FigureModel;
}

/**
 * Render one recipe. outPath may end in .svg (the .png lands next to
 * it) or be an extensionless stem.
 */
export function render(id: FigureId, dataPaths: string[], outPath: string): RenderResult {
  const files = dataPaths.map(readSweepCsv);
  const figure = buildRecipeFigure(id, files);
  const stem = outPath.replace(/\.(svg|png)$/, "");
  const svgPath = `${stem}.svg`;
  const pngPath = `${stem}.png`;
  writeFileSync(svgPath, renderSvg(figure));
  writeFileSync(pngPath, renderPng(figure));
  return { svgPath, pngPath, figure };
}
