import { describe, expect, it } from "vitest";

import { controlPanel } from "../src/panel.js";
import {
  applyQuery,
  clusterColor,
  fitViewport,
  lerpColor,
  NEUTRAL_GRAY,
  rampColor,
  renderMap,
} from "../src/scene.js";
import { initialState, kValues, variantIds } from "../src/state.js";
import type { ViewState } from "../src/state.js";
import { loadContract } from "./fixture.js";

const contract = loadContract();
const bundle = contract.scoring.bundle;

function stateFor(partial: Partial<ViewState>): ViewState {
  return { ...initialState(bundle), ...partial };
}

function luminance(hex: string): number {
  const r = parseInt(hex.slice(1, 3), 16);
  const g = parseInt(hex.slice(3, 5), 16);
  const b = parseInt(hex.slice(5, 7), 16);
  return 0.299 * r + 0.587 * g + 0.114 * b;
}

describe("map scene", () => {
  it("draws exactly one dot per researcher in every variant", () => {
    for (const variantId of variantIds(bundle)) {
      const scene = renderMap(bundle, stateFor({ variantId }));
      expect(scene.dots).toHaveLength(bundle.researchers.length);
      expect(scene.dots.map((d) => d.id)).toEqual(
        bundle.researchers.map((r) => r.id),
      );
    }
  });

  it("places dots at the active variant's precomputed coords", () => {
    const variantId = variantIds(bundle)[0];
    const scene = renderMap(bundle, stateFor({ variantId }));
    const coords = bundle.variants[variantId].coords;
    scene.dots.forEach((dot, i) => {
      expect(dot.x).toBe(coords[i][0]);
      expect(dot.y).toBe(coords[i][1]);
    });
  });

  it("renders label -1 dots neutral gray and flags them", () => {
    const variantId = variantIds(bundle)[0];
    const insufficient = bundle.variants[variantId].insufficient;
    expect(insufficient.length).toBeGreaterThan(0);
    const scene = renderMap(bundle, stateFor({ variantId }));
    for (const i of insufficient) {
      expect(scene.dots[i].label).toBe(-1);
      expect(scene.dots[i].flagged).toBe(true);
      expect(scene.dots[i].color).toBe(NEUTRAL_GRAY);
    }
  });

  it("colors unflagged dots by cluster label", () => {
    const scene = renderMap(bundle, stateFor({}));
    for (const dot of scene.dots) {
      expect(dot.color).toBe(clusterColor(dot.label));
      if (!dot.flagged) {
        expect(dot.label).toBeGreaterThanOrEqual(0);
      }
    }
  });

  it("draws k ellipses when distributions are on, none when off", () => {
    const variantId = variantIds(bundle)[0];
    for (const k of kValues(bundle, variantId)) {
      const on = renderMap(
        bundle,
        stateFor({ variantId, k, showDistributions: true }),
      );
      expect(on.ellipses).toHaveLength(k);
      const off = renderMap(
        bundle,
        stateFor({ variantId, k, showDistributions: false }),
      );
      expect(off.ellipses).toHaveLength(0);
    }
  });

  it("keeps dot positions and colors fixed when toggling distributions", () => {
    const base = stateFor({ showDistributions: false });
    const before = renderMap(bundle, base).dots;
    const after = renderMap(bundle, {
      ...base,
      showDistributions: true,
    }).dots;
    expect(after).toEqual(before);
  });

  it("fits the viewport to the extent with 5% padding per side", () => {
    const variantId = variantIds(bundle)[0];
    const coords = bundle.variants[variantId].coords;
    const xs = coords.map((c) => c[0]);
    const ys = coords.map((c) => c[1]);
    const spanX = Math.max(...xs) - Math.min(...xs);
    const spanY = Math.max(...ys) - Math.min(...ys);
    const viewport = renderMap(bundle, stateFor({ variantId })).viewport;
    expect(viewport.xMin).toBeCloseTo(Math.min(...xs) - 0.05 * spanX, 12);
    expect(viewport.xMax).toBeCloseTo(Math.max(...xs) + 0.05 * spanX, 12);
    expect(viewport.yMin).toBeCloseTo(Math.min(...ys) - 0.05 * spanY, 12);
    expect(viewport.yMax).toBeCloseTo(Math.max(...ys) + 0.05 * spanY, 12);
  });

  it("never collapses the viewport for a degenerate extent", () => {
    const viewport = fitViewport([
      [2, 3],
      [2, 3],
    ]);
    expect(viewport.xMax - viewport.xMin).toBeGreaterThan(0);
    expect(viewport.yMax - viewport.yMin).toBeGreaterThan(0);
  });

  it("changes colors but not positions when K moves", () => {
    const variantId = variantIds(bundle)[0];
    const ks = kValues(bundle, variantId);
    const low = renderMap(bundle, stateFor({ variantId, k: ks[0] }));
    const high = renderMap(
      bundle,
      stateFor({ variantId, k: ks[ks.length - 1] }),
    );
    expect(high.dots.map((d) => [d.x, d.y])).toEqual(
      low.dots.map((d) => [d.x, d.y]),
    );
    expect(high.dots.map((d) => d.color)).not.toEqual(
      low.dots.map((d) => d.color),
    );
  });

  it("moves dots to the other variant's precomputed coords", () => {
    const a = renderMap(bundle, stateFor({ variantId: "none-most_cited" }));
    const b = renderMap(bundle, stateFor({ variantId: "high-most_cited" }));
    const moved = a.dots.some(
      (dot, i) =>
        Math.abs(dot.x - b.dots[i].x) > 1e-12 ||
        Math.abs(dot.y - b.dots[i].y) > 1e-12,
    );
    expect(moved).toBe(true);
    expect(b.dots.map((d) => [d.x, d.y])).toEqual(
      bundle.variants["high-most_cited"].coords.map((c) => [c[0], c[1]]),
    );
  });

  it("exposes slider bounds equal to the bundle's recorded K list", () => {
    for (const variantId of variantIds(bundle)) {
      const recorded = bundle.variants[variantId].clusterings.map(
        (c) => c.k,
      );
      const panel = controlPanel(bundle, stateFor({ variantId }));
      expect(panel.kValues).toEqual(recorded);
      expect(panel.kMin).toBe(recorded[0]);
      expect(panel.kMax).toBe(recorded[recorded.length - 1]);
    }
  });

  it("is a pure function of bundle and state", () => {
    const state = stateFor({ showDistributions: true, queryText: "graph" });
    expect(renderMap(bundle, state)).toEqual(renderMap(bundle, state));
  });
});

describe("query recoloring", () => {
  it("is inactive for an empty query", () => {
    const scene = renderMap(bundle, stateFor({ queryText: "" }));
    expect(scene.query).toBeNull();
    for (const dot of scene.dots) {
      expect(dot.score).toBeNull();
      expect(dot.color).toBe(clusterColor(dot.label));
    }
  });

  for (const vector of contract.scoring.queries.filter(
    (q) => q.text === "algorithms",
  )) {
    it(`shades ${vector.variant_id} dots in the pipeline's raw-score order`, () => {
      const scene = renderMap(
        bundle,
        stateFor({ variantId: vector.variant_id, queryText: vector.text }),
      );
      const order = [...scene.dots].sort((a, b) => {
        if (a.score !== b.score) {
          return (b.score as number) - (a.score as number);
        }
        return a.id < b.id ? -1 : 1;
      });
      expect(order.map((d) => d.id)).toEqual(vector.ranking);
    });
  }

  it("shades strictly higher scores strictly darker", () => {
    const scene = renderMap(bundle, stateFor({ queryText: "graph data" }));
    const scored = scene.dots.filter((d) => d.score !== null);
    for (const a of scored) {
      for (const b of scored) {
        if ((a.score as number) > (b.score as number) + 0.01) {
          expect(luminance(a.color)).toBeLessThan(luminance(b.color));
        }
      }
    }
  });

  it("restores cluster colors when the query is cleared", () => {
    const queried = stateFor({ queryText: "algorithms" });
    const cleared = { ...queried, queryText: "" };
    const scene = renderMap(bundle, cleared);
    expect(scene.query).toBeNull();
    for (const dot of scene.dots) {
      expect(dot.color).toBe(clusterColor(dot.label));
    }
  });

  it("keeps cluster colors and shows a notice for all-stopword queries", () => {
    const scene = renderMap(bundle, stateFor({ queryText: "the of and" }));
    expect(scene.query).not.toBeNull();
    expect(scene.query!.active).toBe(false);
    expect(scene.query!.notice).toMatch(/no searchable terms/);
    for (const dot of scene.dots) {
      expect(dot.color).toBe(clusterColor(dot.label));
    }
  });

  it("surfaces unmatched stems as a notice", () => {
    const layer = applyQuery(
      bundle,
      stateFor({ queryText: "graph blorptex" }),
    );
    expect(layer).not.toBeNull();
    expect(layer!.notice).toMatch(/blorptex/);
    expect(layer!.active).toBe(true);
  });

  it("leaves dot positions alone while recoloring", () => {
    const plain = renderMap(bundle, stateFor({}));
    const queried = renderMap(bundle, stateFor({ queryText: "algorithms" }));
    expect(queried.dots.map((d) => [d.x, d.y])).toEqual(
      plain.dots.map((d) => [d.x, d.y]),
    );
  });
});

describe("color helpers", () => {
  it("interpolates ramp endpoints exactly", () => {
    expect(rampColor(0)).toBe("#deebf7");
    expect(rampColor(1)).toBe("#08306b");
    expect(lerpColor("#000000", "#ffffff", 0.5)).toBe("#808080");
  });

  it("maps negative labels to neutral gray", () => {
    expect(clusterColor(-1)).toBe(NEUTRAL_GRAY);
  });
});
