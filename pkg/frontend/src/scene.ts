/**
 * Pure scene construction for the map view.
 *
 * A scene is a plain description of what to draw: one dot per researcher
 * at the active variant's coordinates, optional mixture ellipses, and a
 * viewport fitted to the coordinate extent. Dot count, ellipse count and
 * the viewport are functions of the bundle and view state alone, which
 * is what makes them testable without a canvas.
 */

import { scoreQuery, type QueryScores } from "./scoring.js";
import { getClustering, getVariant, type ViewState } from "./state.js";
import type { AtlasBundle } from "./types.js";

/** color of dots whose cluster label is -1 (insufficient data) */
export const NEUTRAL_GRAY = "#b0b0b0";

/** one color per cluster label; bundles never exceed k_max = 10 */
export const CLUSTER_PALETTE = [
  "#4e79a7",
  "#f28e2b",
  "#e15759",
  "#76b7b2",
  "#59a14f",
  "#edc948",
  "#b07aa1",
  "#ff9da7",
  "#9c755f",
  "#bab0ab",
];

/** sequential ramp endpoints: darker = stronger alignment */
export const RAMP_LIGHT = "#deebf7";
export const RAMP_DARK = "#08306b";

export interface SceneDot {
  id: string;
  name: string;
  x: number;
  y: number;
  /** cluster label under the active K; -1 for insufficient data */
  label: number;
  flagged: boolean;
  color: string;
  /** display score when a query ramp is active, else null */
  score: number | null;
}

export interface SceneEllipse {
  cx: number;
  cy: number;
  /** semi-axis along the rotated x direction (major axis) */
  rx: number;
  ry: number;
  /** rotation of the major axis, radians in [0, pi) */
  angle: number;
  color: string;
}

export interface SceneViewport {
  xMin: number;
  xMax: number;
  yMin: number;
  yMax: number;
}

export interface QueryLayer {
  scores: QueryScores;
  /** true when at least one stem matched and the ramp recolors dots */
  active: boolean;
  /** user-facing note about stems that could not be scored */
  notice: string | null;
}

export interface Scene {
  dots: SceneDot[];
  ellipses: SceneEllipse[];
  viewport: SceneViewport;
  showNames: boolean;
  hoveredId: string | null;
  selectedId: string | null;
  query: QueryLayer | null;
}

function clampByte(v: number): number {
  return Math.max(0, Math.min(255, Math.round(v)));
}

function hexChannel(hex: string, i: number): number {
  return parseInt(hex.slice(1 + 2 * i, 3 + 2 * i), 16);
}

/** linear interpolation between two #rrggbb colors, t in [0, 1] */
export function lerpColor(from: string, to: string, t: number): string {
  const parts = [0, 1, 2].map((i) => {
    const a = hexChannel(from, i);
    const b = hexChannel(to, i);
    return clampByte(a + (b - a) * t).toString(16).padStart(2, "0");
  });
  return `#${parts.join("")}`;
}

export function clusterColor(label: number): string {
  if (label < 0) {
    return NEUTRAL_GRAY;
  }
  return CLUSTER_PALETTE[label % CLUSTER_PALETTE.length];
}

export function rampColor(displayScore: number): string {
  return lerpColor(RAMP_LIGHT, RAMP_DARK, displayScore);
}

/**
 * Fit the viewport to the coordinate extent with 5% padding per side.
 * A degenerate extent (all dots at one point) gets a fixed half-unit
 * margin so the view never collapses.
 */
export function fitViewport(coords: number[][]): SceneViewport {
  if (coords.length === 0) {
    return { xMin: -1, xMax: 1, yMin: -1, yMax: 1 };
  }
  const xs = coords.map((c) => c[0]);
  const ys = coords.map((c) => c[1]);
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  const yMin = Math.min(...ys);
  const yMax = Math.max(...ys);
  const xPad = xMax > xMin ? 0.05 * (xMax - xMin) : 0.5;
  const yPad = yMax > yMin ? 0.05 * (yMax - yMin) : 0.5;
  return {
    xMin: xMin - xPad,
    xMax: xMax + xPad,
    yMin: yMin - yPad,
    yMax: yMax + yPad,
  };
}

/**
 * The query layer for the current state: null when the query text is
 * empty (cluster coloring applies), otherwise client-side scores plus a
 * notice for anything that could not be scored.
 */
export function applyQuery(
  bundle: AtlasBundle,
  state: ViewState,
): QueryLayer | null {
  if (state.queryText.trim() === "") {
    return null;
  }
  const scores = scoreQuery(bundle, state.variantId, state.queryText);
  const active = scores.matched.length > 0;
  let notice: string | null = null;
  if (scores.matched.length === 0 && scores.unmatched.length === 0) {
    notice = "query has no searchable terms";
  } else if (scores.unmatched.length > 0) {
    notice = `not in vocabulary: ${scores.unmatched.join(", ")}`;
  }
  return { scores, active, notice };
}

/**
 * Build the full scene for one view state. Dots are colored by cluster
 * label (label -1 neutral gray) unless an active query recolors them on
 * the light-to-dark ramp by display score. Ellipses appear only when
 * distributions are toggled on, one per mixture component of the active
 * clustering.
 */
export function renderMap(bundle: AtlasBundle, state: ViewState): Scene {
  const variant = getVariant(bundle, state.variantId);
  const clustering = getClustering(bundle, state.variantId, state.k);
  const query = applyQuery(bundle, state);
  const flagged = new Set(variant.insufficient);

  const dots = bundle.researchers.map((r, i) => {
    const label = clustering.labels[i];
    const score = query !== null && query.active ? query.scores.display[i] : null;
    return {
      id: r.id,
      name: r.name,
      x: variant.coords[i][0],
      y: variant.coords[i][1],
      label,
      flagged: flagged.has(i),
      color: score !== null ? rampColor(score) : clusterColor(label),
      score,
    };
  });

  const ellipses = state.showDistributions
    ? clustering.ellipses.map((e, j) => ({
        cx: e.center[0],
        cy: e.center[1],
        rx: e.semi_axes[0],
        ry: e.semi_axes[1],
        angle: e.angle,
        color: CLUSTER_PALETTE[j % CLUSTER_PALETTE.length],
      }))
    : [];

  return {
    dots,
    ellipses,
    viewport: fitViewport(variant.coords),
    showNames: state.showNames,
    hoveredId: state.hoveredResearcher,
    selectedId: state.selectedResearcher,
    query,
  };
}
