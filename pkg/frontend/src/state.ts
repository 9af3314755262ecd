/**
 * UI state and its transitions.
 *
 * All transitions are pure (state in, state out) and validated against
 * the loaded bundle: variant_id and k always reference entries that
 * exist. Nothing in this module can touch the network; every lookup
 * resolves from the in-memory bundle.
 */

import type { AtlasBundle, Clustering, Variant } from "./types.js";

export interface ViewState {
  variantId: string;
  k: number;
  showDistributions: boolean;
  showNames: boolean;
  queryText: string;
  hoveredResearcher: string | null;
  selectedResearcher: string | null;
}

/** canonical variant order: emphasis sweep crossed with publication set */
export const VARIANT_ORDER = [
  "none-most_cited",
  "none-most_recent",
  "normal-most_cited",
  "normal-most_recent",
  "high-most_cited",
  "high-most_recent",
];

export function variantIds(bundle: AtlasBundle): string[] {
  const known = VARIANT_ORDER.filter((id) => id in bundle.variants);
  const extra = Object.keys(bundle.variants)
    .filter((id) => !VARIANT_ORDER.includes(id))
    .sort();
  return [...known, ...extra];
}

export function getVariant(bundle: AtlasBundle, variantId: string): Variant {
  const variant = bundle.variants[variantId];
  if (variant === undefined) {
    throw new Error(`unknown variant '${variantId}'`);
  }
  return variant;
}

/** the K values precomputed for a variant, ascending */
export function kValues(bundle: AtlasBundle, variantId: string): number[] {
  return getVariant(bundle, variantId).clusterings.map((c) => c.k);
}

export function getClustering(
  bundle: AtlasBundle,
  variantId: string,
  k: number,
): Clustering {
  const clustering = getVariant(bundle, variantId).clusterings.find(
    (c) => c.k === k,
  );
  if (clustering === undefined) {
    throw new Error(`variant '${variantId}' has no clustering for k=${k}`);
  }
  return clustering;
}

export function initialState(bundle: AtlasBundle): ViewState {
  const ids = variantIds(bundle);
  if (ids.length === 0) {
    throw new Error("bundle has no variants");
  }
  const variantId = ids.includes("normal-most_cited")
    ? "normal-most_cited"
    : ids[0];
  return {
    variantId,
    k: kValues(bundle, variantId)[0],
    showDistributions: false,
    showNames: false,
    queryText: "",
    hoveredResearcher: null,
    selectedResearcher: null,
  };
}

/**
 * Switch variants. K carries over when the target variant has it
 * precomputed, otherwise clamps to the nearest available value.
 */
export function setVariant(
  bundle: AtlasBundle,
  state: ViewState,
  variantId: string,
): ViewState {
  getVariant(bundle, variantId);
  const ks = kValues(bundle, variantId);
  let k = state.k;
  if (!ks.includes(k)) {
    k = ks.reduce((best, candidate) =>
      Math.abs(candidate - state.k) < Math.abs(best - state.k)
        ? candidate
        : best,
    );
  }
  return { ...state, variantId, k };
}

export function setK(
  bundle: AtlasBundle,
  state: ViewState,
  k: number,
): ViewState {
  if (!kValues(bundle, state.variantId).includes(k)) {
    throw new Error(
      `variant '${state.variantId}' has no clustering for k=${k}`,
    );
  }
  return { ...state, k };
}

export function setQuery(state: ViewState, text: string): ViewState {
  return { ...state, queryText: text };
}

export function toggleDistributions(state: ViewState): ViewState {
  return { ...state, showDistributions: !state.showDistributions };
}

export function toggleNames(state: ViewState): ViewState {
  return { ...state, showNames: !state.showNames };
}

/**
 * Hover previews. Hovering empty canvas leaves the panel unchanged, so a
 * null hover is a no-op rather than a reset; the preview only moves when
 * another dot is hovered.
 */
export function hoverResearcher(
  bundle: AtlasBundle,
  state: ViewState,
  id: string | null,
): ViewState {
  if (id === null) {
    return state;
  }
  requireResearcher(bundle, id);
  return { ...state, hoveredResearcher: id };
}

/**
 * Click pins. Clicking the pinned researcher again unpins; clicking
 * empty canvas unpins; clicking another researcher moves the pin.
 */
export function clickResearcher(
  bundle: AtlasBundle,
  state: ViewState,
  id: string | null,
): ViewState {
  if (id === null || id === state.selectedResearcher) {
    return { ...state, selectedResearcher: null };
  }
  requireResearcher(bundle, id);
  return { ...state, selectedResearcher: id };
}

/** the researcher the detail panel should show: pinned wins over hover */
export function detailTarget(state: ViewState): string | null {
  return state.selectedResearcher ?? state.hoveredResearcher;
}

export function requireResearcher(bundle: AtlasBundle, id: string): void {
  if (!bundle.researchers.some((r) => r.id === id)) {
    throw new Error(`unknown researcher '${id}'`);
  }
}
