/**
 * Read models for the two side panels.
 *
 * The researcher detail panel shows exactly six fields: name,
 * affiliation, position, citation count, a link to the scholar profile,
 * and keywords. The control panel model exposes the slider bounds and
 * dropdown options as pure functions of the bundle, so the UI can only
 * ever offer choices that exist in the precomputed data.
 */

import { detailTarget, kValues, variantIds, type ViewState } from "./state.js";
import type { AtlasBundle } from "./types.js";

export interface ResearcherDetails {
  name: string;
  affiliation: string;
  position: string;
  totalCitations: number;
  scholarUrl: string;
  keywords: string[];
}

/** Detail fields for one researcher; the id must exist in the bundle. */
export function showResearcher(
  bundle: AtlasBundle,
  id: string,
): ResearcherDetails {
  const record = bundle.researchers.find((r) => r.id === id);
  if (record === undefined) {
    throw new Error(`unknown researcher '${id}'`);
  }
  return {
    name: record.name,
    affiliation: record.affiliation,
    position: record.position,
    totalCitations: record.total_citations,
    scholarUrl: record.scholar_url,
    keywords: [...record.keywords],
  };
}

/** Panel contents for the current hover/pin state, null when neither. */
export function activeDetails(
  bundle: AtlasBundle,
  state: ViewState,
): ResearcherDetails | null {
  const id = detailTarget(state);
  return id === null ? null : showResearcher(bundle, id);
}

export interface ControlPanelModel {
  /** emphasis levels offered by the bundle, in canonical order */
  emphasisOptions: string[];
  /** publication set modes offered by the bundle, in canonical order */
  pubsetOptions: string[];
  emphasis: string;
  pubset: string;
  /** slider bounds: exactly the K values precomputed for the variant */
  kValues: number[];
  kMin: number;
  kMax: number;
  k: number;
  showDistributions: boolean;
  showNames: boolean;
  queryText: string;
}

function splitVariantId(id: string): [string, string] {
  const dash = id.indexOf("-");
  return [id.slice(0, dash), id.slice(dash + 1)];
}

/** The variant id for an (emphasis, pubset) choice. */
export function variantIdFor(emphasis: string, pubset: string): string {
  return `${emphasis}-${pubset}`;
}

export function controlPanel(
  bundle: AtlasBundle,
  state: ViewState,
): ControlPanelModel {
  const emphasisOptions: string[] = [];
  const pubsetOptions: string[] = [];
  for (const id of variantIds(bundle)) {
    const [emphasis, pubset] = splitVariantId(id);
    if (!emphasisOptions.includes(emphasis)) {
      emphasisOptions.push(emphasis);
    }
    if (!pubsetOptions.includes(pubset)) {
      pubsetOptions.push(pubset);
    }
  }
  const [emphasis, pubset] = splitVariantId(state.variantId);
  const ks = kValues(bundle, state.variantId);
  return {
    emphasisOptions,
    pubsetOptions,
    emphasis,
    pubset,
    kValues: ks,
    kMin: ks[0],
    kMax: ks[ks.length - 1],
    k: state.k,
    showDistributions: state.showDistributions,
    showNames: state.showNames,
    queryText: state.queryText,
  };
}
