export { parseSweepCsv, readSweepCsv, CsvError, SweepFile, SweepRow } from "./csv.js";
export { buildFigure, FigureModel, Curve, PALETTE } from "./figure.js";
export { encodePng, renderPng, Canvas } from "./png.js";
export { FIGURE_IDS, FigureId, buildRecipeFigure } from "./recipes.js";
export { render, RenderResult } from "./render.js";
export { renderSvg } from "./svg.js";
export { linearScale, niceTicks, tickLabel } from "./scale.js";
