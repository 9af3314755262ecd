/**
 * Client-side query scoring against a variant's serialized index.
 *
 * Replays the pipeline's scoring arithmetic on the sparse unit-L2
 * columns shipped in the bundle: stem the query, weight stem counts by
 * the stored idf, L2-normalize, then take cosine similarity with every
 * researcher column. Accumulation runs over each column's stored rows in
 * ascending order, the same order the pipeline's sparse product uses, so
 * rankings agree with the CLI and not just up to a tolerance.
 */

import { tokenCounts } from "./normalize.js";
import type { AtlasBundle, SerializedQueryIndex, Variant } from "./types.js";

export interface QueryScores {
  researcherIds: string[];
  /** cosine similarity per researcher, in [0, 1] */
  raw: number[];
  /** min-max rescaled for color ramps; never reorders */
  display: number[];
  /** query stems found in the variant vocabulary, ascending */
  matched: string[];
  /** query stems with no corpus support, ascending */
  unmatched: string[];
}

/** stem -> local row in the variant's term space */
export function localTermIndex(
  bundle: AtlasBundle,
  variant: Variant,
): Map<string, number> {
  const index = new Map<string, number>();
  variant.query_index.term_ids.forEach((globalId, row) => {
    index.set(bundle.vocabulary[globalId], row);
  });
  return index;
}

function rawScores(
  index: SerializedQueryIndex,
  vector: Map<number, number>,
  norm: number,
): number[] {
  const q = new Map<number, number>();
  vector.forEach((value, row) => q.set(row, value / norm));
  return index.columns.map((column) => {
    let s = 0;
    for (let j = 0; j < column.ids.length; j++) {
      const qv = q.get(column.ids[j]);
      if (qv !== undefined) {
        s += column.weights[j] * qv;
      }
    }
    return Math.min(Math.max(s, 0), 1);
  });
}

/**
 * Min-max rescale to [0, 1] for display. All-equal scores collapse:
 * everything 0 when the common value is 0, everything 1 otherwise.
 */
export function rescaleScores(raw: number[]): number[] {
  if (raw.length === 0) {
    return [];
  }
  const low = Math.min(...raw);
  const high = Math.max(...raw);
  if (high === 0) {
    return raw.map(() => 0);
  }
  if (high === low) {
    return raw.map(() => 1);
  }
  return raw.map((s) => (s - low) / (high - low));
}

/**
 * Score one free-text query against every researcher of a variant.
 * Stems outside the vocabulary are reported, not scored; a query with no
 * matched stems scores 0 for everyone.
 */
export function scoreQuery(
  bundle: AtlasBundle,
  variantId: string,
  text: string,
): QueryScores {
  const variant = bundle.variants[variantId];
  if (variant === undefined) {
    throw new Error(`unknown variant '${variantId}'`);
  }
  const termIndex = localTermIndex(bundle, variant);
  const counts = tokenCounts(text);

  const matched: string[] = [];
  const unmatched: string[] = [];
  const vector = new Map<number, number>();
  for (const term of [...counts.keys()].sort()) {
    const row = termIndex.get(term);
    if (row === undefined) {
      unmatched.push(term);
    } else {
      matched.push(term);
      vector.set(row, counts.get(term)! * variant.query_index.idf[row]);
    }
  }

  let sq = 0;
  vector.forEach((value) => {
    sq += value * value;
  });
  const norm = Math.sqrt(sq);

  const researcherIds = bundle.researchers.map((r) => r.id);
  const raw =
    norm === 0
      ? researcherIds.map(() => 0)
      : rawScores(variant.query_index, vector, norm);

  return {
    researcherIds,
    raw,
    display: rescaleScores(raw),
    matched,
    unmatched,
  };
}

/**
 * Best k researchers as [id, raw score], score descending, ties broken by
 * researcher id ascending. Returns fewer when there are fewer.
 */
export function topK(scores: QueryScores, k: number): [string, number][] {
  if (k < 1) {
    throw new Error(`k must be >= 1, got ${k}`);
  }
  const order = scores.researcherIds.map((_, i) => i);
  order.sort((a, b) => {
    if (scores.raw[a] !== scores.raw[b]) {
      return scores.raw[b] - scores.raw[a];
    }
    return scores.researcherIds[a] < scores.researcherIds[b] ? -1 : 1;
  });
  return order
    .slice(0, k)
    .map((i) => [scores.researcherIds[i], scores.raw[i]]);
}
