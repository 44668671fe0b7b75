#!/usr/bin/env node
import { pathToFileURL } from "node:url";

import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { CsvFormatError } from "./csv.js";
import { Panel, renderComparison } from "./render.js";

export async function main(argv: string[]): Promise<number> {
  const args = await yargs(argv)
    .scriptName("render")
    .option("csv", {
      type: "string",
      demandOption: true,
      describe: "comparison CSV (small panel input)",
    })
    .option("csv-large", {
      type: "string",
      describe: "comparison CSV for the large panel (required with --panel both)",
    })
    .option("out", {
      type: "string",
      demandOption: true,
      describe: "output image path",
    })
    .option("panel", {
      choices: ["small", "large", "both"] as const,
      default: "small" as Panel,
    })
    .strict()
    .help()
    .parse();

  try {
    const written = renderComparison({
      csv: args.csv,
      csvLarge: args["csv-large"],
      out: args.out,
      panel: args.panel as Panel,
    });
    for (const path of written) {
      console.log(`wrote ${path}`);
    }
    return 0;
  } catch (err) {
    if (err instanceof CsvFormatError || err instanceof Error) {
      console.error(`error: ${err.message}`);
      return 2;
    }
    throw err;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === pathToFileURL(process.argv[1]).href;
if (invokedDirectly) {
  main(hideBin(process.argv)).then((code) => {
    process.exitCode = code;
  });
}
