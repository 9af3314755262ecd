/**
 * Typed access to the shared contract fixture exported by the pipeline.
 *
 * The fixture is the drift alarm between the two implementations: the
 * pipeline wrote down what its normalizer and scorer produced, and these
 * tests replay ours against it. Regenerate with
 * scripts/export_contract_fixture.py at the repository root.
 */

import { readFileSync } from "node:fs";
import type { AtlasBundle } from "../src/types.js";

export interface TokenizeExample {
  text: string;
  stems: Record<string, number>;
  order: string[];
}

export interface QueryVector {
  variant_id: string;
  text: string;
  raw_scores: number[];
  display_scores: number[];
  /** all researcher ids, best raw score first, ties by id ascending */
  ranking: string[];
  matched: string[];
  unmatched: string[];
}

export interface Contract {
  normalizer_version: string;
  stopwords: string[];
  stem_vectors: Record<string, string>;
  tokenize_examples: TokenizeExample[];
  scoring: {
    bundle: AtlasBundle;
    queries: QueryVector[];
  };
}

let cached: Contract | null = null;

export function loadContract(): Contract {
  if (cached === null) {
    const url = new URL(
      "../src/generated/pipeline-contract.json",
      import.meta.url,
    );
    cached = JSON.parse(readFileSync(url, "utf-8")) as Contract;
  }
  return cached;
}

/** structural deep copy for tests that need to tamper with the bundle */
export function copyBundle(bundle: AtlasBundle): AtlasBundle {
  return JSON.parse(JSON.stringify(bundle)) as AtlasBundle;
}
