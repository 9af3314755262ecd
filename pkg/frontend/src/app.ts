/**
 * Browser entry point: fetch bundle.json once, then run everything from
 * memory. Wires DOM controls to the controller, redraws the canvas on
 * state changes, and animates variant switches over 400 ms (purely
 * cosmetic; scoring and state never depend on animation progress).
 */

import { AtlasApp } from "./controller.js";
import { drawScene, hitTest, project } from "./render.js";
import type { Scene } from "./scene.js";

const ANIMATION_MS = 400;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function showBanner(message: string): void {
  const banner = el<HTMLDivElement>("banner");
  banner.textContent = message;
  banner.style.display = "block";
}

async function fetchJson(url: string): Promise<unknown> {
  const resp = await fetch(url);
  if (!resp.ok) {
    throw new Error(`failed to load ${url}: HTTP ${resp.status}`);
  }
  return resp.json();
}

function main(app: AtlasApp): void {
  const canvas = el<HTMLCanvasElement>("map");
  const ctx = canvas.getContext("2d");
  if (ctx === null) {
    throw new Error("2d canvas unavailable");
  }

  const emphasisSelect = el<HTMLSelectElement>("emphasis");
  const pubsetSelect = el<HTMLSelectElement>("pubset");
  const kSlider = el<HTMLInputElement>("k-slider");
  const kLabel = el<HTMLSpanElement>("k-label");
  const distToggle = el<HTMLInputElement>("show-distributions");
  const namesToggle = el<HTMLInputElement>("show-names");
  const queryInput = el<HTMLInputElement>("query");
  const queryNotice = el<HTMLDivElement>("query-notice");
  const detailPanel = el<HTMLDivElement>("detail");

  // variant-switch animation: previous dot positions, lerped to the new
  // ones; null when idle
  let animation: { fromX: number[]; fromY: number[]; start: number } | null =
    null;

  function sizeCanvas(): { width: number; height: number } {
    const dpr = window.devicePixelRatio || 1;
    const width = canvas.clientWidth;
    const height = canvas.clientHeight;
    if (canvas.width !== width * dpr || canvas.height !== height * dpr) {
      canvas.width = width * dpr;
      canvas.height = height * dpr;
    }
    ctx!.setTransform(dpr, 0, 0, dpr, 0, 0);
    return { width, height };
  }

  function displayedScene(scene: Scene, now: number): Scene {
    if (animation === null) {
      return scene;
    }
    const t = Math.min((now - animation.start) / ANIMATION_MS, 1);
    if (t >= 1) {
      animation = null;
      return scene;
    }
    const ease = t * (2 - t);
    const { fromX, fromY } = animation;
    return {
      ...scene,
      dots: scene.dots.map((dot, i) => ({
        ...dot,
        x: fromX[i] + (dot.x - fromX[i]) * ease,
        y: fromY[i] + (dot.y - fromY[i]) * ease,
      })),
    };
  }

  function redraw(now: number): void {
    const { width, height } = sizeCanvas();
    drawScene(ctx!, displayedScene(app.scene(), now), { width, height });
    if (animation !== null) {
      requestAnimationFrame(redraw);
    }
  }

  function repaint(): void {
    requestAnimationFrame(redraw);
  }

  function beginVariantSwitch(variantId: string): void {
    const before = app.scene().dots;
    app.setVariant(variantId);
    animation = {
      fromX: before.map((d) => d.x),
      fromY: before.map((d) => d.y),
      start: performance.now(),
    };
    syncControls();
    repaint();
  }

  function syncControls(): void {
    const panel = app.panel();
    emphasisSelect.value = panel.emphasis;
    pubsetSelect.value = panel.pubset;
    kSlider.min = String(panel.kMin);
    kSlider.max = String(panel.kMax);
    kSlider.value = String(panel.k);
    kLabel.textContent = String(panel.k);
    distToggle.checked = panel.showDistributions;
    namesToggle.checked = panel.showNames;

    const scene = app.scene();
    if (scene.query === null) {
      queryNotice.textContent = "";
    } else {
      queryNotice.textContent = scene.query.notice ?? "";
    }
    renderDetails();
  }

  function renderDetails(): void {
    const details = app.details();
    detailPanel.textContent = "";
    const paragraph = (text: string): HTMLParagraphElement => {
      const p = document.createElement("p");
      p.textContent = text;
      detailPanel.appendChild(p);
      return p;
    };
    if (details === null) {
      paragraph("Hover a dot to preview, click to pin.").className =
        "placeholder";
      return;
    }
    const heading = document.createElement("h2");
    heading.textContent = details.name;
    detailPanel.appendChild(heading);
    paragraph(details.affiliation);
    paragraph(details.position);
    paragraph(`Citations: ${details.totalCitations.toLocaleString()}`);
    const link = document.createElement("a");
    link.href = details.scholarUrl;
    link.target = "_blank";
    link.rel = "noopener";
    link.textContent = "Scholar profile";
    const linkRow = paragraph("");
    linkRow.appendChild(link);
    const keywordRow = paragraph("");
    if (details.keywords.length === 0) {
      const em = document.createElement("em");
      em.textContent = "none listed";
      keywordRow.appendChild(em);
    } else {
      for (const keyword of details.keywords) {
        const chip = document.createElement("span");
        chip.className = "kw";
        chip.textContent = keyword;
        keywordRow.appendChild(chip);
        keywordRow.appendChild(document.createTextNode(" "));
      }
    }
  }

  function fillSelect(select: HTMLSelectElement, options: string[]): void {
    select.innerHTML = "";
    for (const value of options) {
      const opt = document.createElement("option");
      opt.value = value;
      opt.textContent = value.replace(/_/g, " ");
      select.appendChild(opt);
    }
  }

  const panel = app.panel();
  fillSelect(emphasisSelect, panel.emphasisOptions);
  fillSelect(pubsetSelect, panel.pubsetOptions);

  emphasisSelect.addEventListener("change", () => {
    beginVariantSwitch(`${emphasisSelect.value}-${pubsetSelect.value}`);
  });
  pubsetSelect.addEventListener("change", () => {
    beginVariantSwitch(`${emphasisSelect.value}-${pubsetSelect.value}`);
  });
  kSlider.addEventListener("input", () => {
    app.setK(Number(kSlider.value));
    syncControls();
    repaint();
  });
  distToggle.addEventListener("change", () => {
    app.toggleDistributions();
    repaint();
  });
  namesToggle.addEventListener("change", () => {
    app.toggleNames();
    repaint();
  });
  queryInput.addEventListener("input", () => {
    app.setQuery(queryInput.value);
    syncControls();
    repaint();
  });

  canvas.addEventListener("mousemove", (event) => {
    const rect = canvas.getBoundingClientRect();
    const scene = app.scene();
    const projection = project(scene.viewport, rect.width, rect.height);
    const dot = hitTest(
      scene,
      projection,
      event.clientX - rect.left,
      event.clientY - rect.top,
    );
    canvas.style.cursor = dot === null ? "default" : "pointer";
    app.hover(dot === null ? null : dot.id);
    renderDetails();
    repaint();
  });
  canvas.addEventListener("click", (event) => {
    const rect = canvas.getBoundingClientRect();
    const scene = app.scene();
    const projection = project(scene.viewport, rect.width, rect.height);
    const dot = hitTest(
      scene,
      projection,
      event.clientX - rect.left,
      event.clientY - rect.top,
    );
    app.click(dot === null ? null : dot.id);
    renderDetails();
    repaint();
  });
  window.addEventListener("resize", repaint);

  syncControls();
  repaint();
}

AtlasApp.load(fetchJson)
  .then(main)
  .catch((err: unknown) => {
    showBanner(err instanceof Error ? err.message : String(err));
  });
