/**
 * Application controller: owns the bundle and the view state.
 *
 * The bundle is fetched exactly once through an injected loader and
 * treated as immutable afterwards; the controller keeps no reference to
 * the loader, so no interaction can reach the network by construction.
 * The test suite asserts this with a counting loader.
 */

import { activeDetails, controlPanel, showResearcher } from "./panel.js";
import type { ControlPanelModel, ResearcherDetails } from "./panel.js";
import { renderMap, type Scene } from "./scene.js";
import { scoreQuery, topK } from "./scoring.js";
import {
  clickResearcher,
  hoverResearcher,
  initialState,
  setK,
  setQuery,
  setVariant,
  toggleDistributions,
  toggleNames,
  type ViewState,
} from "./state.js";
import type { AtlasBundle } from "./types.js";

export type BundleLoader = (url: string) => Promise<unknown>;

export const SUPPORTED_SCHEMA_VERSION = 1;

/**
 * Reject anything that is not a plausible bundle before the UI touches
 * it. Failures here are render-blocking: the app shows a banner instead
 * of a map.
 */
export function checkBundleShape(data: unknown): AtlasBundle {
  if (typeof data !== "object" || data === null || Array.isArray(data)) {
    throw new Error("bundle is not a JSON object");
  }
  const bundle = data as Record<string, unknown>;
  if (bundle.schema_version !== SUPPORTED_SCHEMA_VERSION) {
    throw new Error(
      `unsupported schema_version ${JSON.stringify(bundle.schema_version)}; ` +
        `this client reads version ${SUPPORTED_SCHEMA_VERSION}`,
    );
  }
  for (const key of ["constants", "researchers", "vocabulary", "variants"]) {
    if (!(key in bundle)) {
      throw new Error(`bundle is missing '${key}'`);
    }
  }
  if (!Array.isArray(bundle.researchers) || bundle.researchers.length === 0) {
    throw new Error("bundle has no researchers");
  }
  const variants = bundle.variants as Record<string, unknown>;
  if (typeof variants !== "object" || Object.keys(variants).length === 0) {
    throw new Error("bundle has no variants");
  }
  const n = bundle.researchers.length;
  for (const [vid, variantRaw] of Object.entries(variants)) {
    const variant = variantRaw as Record<string, unknown>;
    const coords = variant.coords as unknown[];
    if (!Array.isArray(coords) || coords.length !== n) {
      throw new Error(`variant '${vid}' coords do not cover all researchers`);
    }
    const clusterings = variant.clusterings as unknown[];
    if (!Array.isArray(clusterings) || clusterings.length === 0) {
      throw new Error(`variant '${vid}' has no clusterings`);
    }
  }
  return data as AtlasBundle;
}

export class AtlasApp {
  readonly bundle: AtlasBundle;
  private state_: ViewState;

  private constructor(bundle: AtlasBundle) {
    this.bundle = bundle;
    this.state_ = initialState(bundle);
  }

  /** Fetch and validate the bundle; the single network touch. */
  static async load(
    loader: BundleLoader,
    url = "bundle.json",
  ): Promise<AtlasApp> {
    const data = await loader(url);
    return new AtlasApp(checkBundleShape(data));
  }

  /** Build directly from an already-loaded bundle (tests, embedding). */
  static fromBundle(data: unknown): AtlasApp {
    return new AtlasApp(checkBundleShape(data));
  }

  get state(): ViewState {
    return this.state_;
  }

  scene(): Scene {
    return renderMap(this.bundle, this.state_);
  }

  panel(): ControlPanelModel {
    return controlPanel(this.bundle, this.state_);
  }

  details(): ResearcherDetails | null {
    return activeDetails(this.bundle, this.state_);
  }

  detailsFor(id: string): ResearcherDetails {
    return showResearcher(this.bundle, id);
  }

  /** [id, raw score] of the best k researchers for the current query. */
  topResults(k: number): [string, number][] {
    return topK(
      scoreQuery(this.bundle, this.state_.variantId, this.state_.queryText),
      k,
    );
  }

  setVariant(variantId: string): ViewState {
    this.state_ = setVariant(this.bundle, this.state_, variantId);
    return this.state_;
  }

  setK(k: number): ViewState {
    this.state_ = setK(this.bundle, this.state_, k);
    return this.state_;
  }

  setQuery(text: string): ViewState {
    this.state_ = setQuery(this.state_, text);
    return this.state_;
  }

  toggleDistributions(): ViewState {
    this.state_ = toggleDistributions(this.state_);
    return this.state_;
  }

  toggleNames(): ViewState {
    this.state_ = toggleNames(this.state_);
    return this.state_;
  }

  hover(id: string | null): ViewState {
    this.state_ = hoverResearcher(this.bundle, this.state_, id);
    return this.state_;
  }

  click(id: string | null): ViewState {
    this.state_ = clickResearcher(this.bundle, this.state_, id);
    return this.state_;
  }
}
