#!/usr/bin/env node
/**
 * figplots <figure_id> --data <csv...> --out <path>
 *
 * Renders one of the six standard figures (fig2..fig7) from casphere
 * sweep CSVs into deterministic SVG and PNG files.
 */

import { CsvError } from "./csv.js";
import { FIGURE_IDS, FigureId } from "./recipes.js";
import { render } from "./render.js";

function usage(): string {
  return `usage: figplots <${FIGURE_IDS.join("|")}> --data <csv...> --out <path>`;
}

export function main(argv: string[]): number {
  const args = [...argv];
  const id = args.shift();
  if (!id || id === "--help" || id === "-h") {
    console.error(usage());
    return id ? 0 : 1;
  }
  if (!FIGURE_IDS.includes(id as FigureId)) {
    console.error(`error: unknown figure id '${id}'\n${usage()}`);
    return 1;
  }
  const data: string[] = [];
  let out: string | undefined;
  for (let i = 0; i < args.length; i++) {
    const a = args[i]!;
    if (a === "--data") {
      while (i + 1 < args.length && !args[i + 1]!.startsWith("--")) {
        data.push(args[++i]!);
      }
    } else if (a === "--out") {
      out = args[++i];
    } else {
      console.error(`error: unknown argument '${a}'\n${usage()}`);
      return 1;
    }
  }
  if (data.length === 0 || !out) {
    console.error(`error: --data and --out are required\n${usage()}`);
    return 1;
  }
  try {
    const result = render(id as FigureId, data, out);
    console.log(`wrote ${result.svgPath} and ${result.pngPath}`);
    return 0;
  } catch (err) {
    if (err instanceof CsvError || err instanceof Error) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    throw err;
  }
}

// invoked directly (not imported by tests)
if (import.meta.url === `file://${process.argv[1]}`) {
  process.exit(main(process.argv.slice(2)));
}
