// DOM/SVG rendering of the view models. Everything computed lives in
// model.ts/layout.ts; this file only writes elements.

import type { SessionState } from "./api.js";
import { arrowCurves, LayoutStore, trimToCircle } from "./layout.js";
import {
  arrowSpecs,
  clusterRows,
  detBadge,
  hyperquadrant,
  truncateVariable,
} from "./model.js";
import type { OraclePanelState } from "./store.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const NODE_RADIUS = 18;

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) el.setAttribute(key, value);
  return el;
}

export interface QuiverCallbacks {
  onVertexClick: (label: string) => void;
  onVertexPin: (label: string, x: number, y: number) => void;
}

export function renderQuiver(
  svg: SVGSVGElement,
  state: SessionState,
  layout: LayoutStore,
  callbacks: QuiverCallbacks
): void {
  svg.innerHTML =
    '<defs><marker id="arrowhead" markerWidth="8" markerHeight="7" refX="7" ' +
    'refY="3.5" orient="auto"><polygon points="0 0, 8 3.5, 0 7"/></marker></defs>';
  for (const spec of arrowSpecs(state)) {
    const curves = arrowCurves(
      layout.position(spec.from),
      layout.position(spec.to),
      spec.count
    );
    for (const curve of curves) {
      const trimmed = trimToCircle(curve, NODE_RADIUS + 4);
      const path = svgEl("path", {
        d: `M ${trimmed.x1} ${trimmed.y1} Q ${trimmed.cx} ${trimmed.cy} ${trimmed.x2} ${trimmed.y2}`,
        class: "arrow",
        "marker-end": "url(#arrowhead)",
      });
      svg.appendChild(path);
    }
  }
  for (const label of state.quiver.vertices) {
    const { x, y } = layout.position(label);
    const group = svgEl("g", { class: "vertex", transform: `translate(${x},${y})` });
    group.appendChild(svgEl("circle", { r: String(NODE_RADIUS) }));
    const text = svgEl("text", { "text-anchor": "middle", dy: "0.35em" });
    text.textContent = label;
    group.appendChild(text);
    wireVertexInteraction(group, svg, label, callbacks);
    svg.appendChild(group);
  }
}

function wireVertexInteraction(
  group: SVGGElement,
  svg: SVGSVGElement,
  label: string,
  callbacks: QuiverCallbacks
): void {
  let dragging = false;
  let moved = false;
  group.addEventListener("mousedown", (down) => {
    dragging = true;
    moved = false;
    const rect = svg.getBoundingClientRect();
    const onMove = (move: MouseEvent) => {
      if (!dragging) return;
      moved = true;
      callbacks.onVertexPin(label, move.clientX - rect.left, move.clientY - rect.top);
    };
    const onUp = () => {
      dragging = false;
      window.removeEventListener("mousemove", onMove);
      window.removeEventListener("mouseup", onUp);
      if (!moved) callbacks.onVertexClick(label);
    };
    window.addEventListener("mousemove", onMove);
    window.addEventListener("mouseup", onUp);
    down.preventDefault();
  });
}

export function renderClusterTable(table: HTMLElement, state: SessionState): void {
  const rows = clusterRows(state);
  const quadrant = hyperquadrant(rows);
  const header =
    "<tr><th>slot</th><th>g-vector</th><th>signs</th></tr>";
  const body = rows
    .map((row) => {
      const badges = row.signs
        .map((s) => `<span class="sign sign-${cssSign(s)}">${s}</span>`)
        .join("");
      return `<tr><td>${row.slot}</td><td>(${row.coords.join(", ")})</td><td>${badges}</td></tr>`;
    })
    .join("");
  const quadrantLine = `<tr class="quadrant"><td>quadrant</td><td colspan="2">${quadrant
    .map((s) => `<span class="sign sign-${cssSign(s)}">${s}</span>`)
    .join("")}</td></tr>`;
  table.innerHTML = header + body + quadrantLine;
}

function cssSign(s: string): string {
  return s === "+" ? "pos" : s === "-" ? "neg" : "zero";
}

export function renderBadges(container: HTMLElement, state: SessionState): void {
  const det = detBadge(state);
  const sign = state.sign_coherent.ok;
  container.innerHTML =
    `<span class="badge ${det.unimodular ? "ok" : "bad"}">${det.text}</span>` +
    `<span class="badge ${sign ? "ok" : "bad"}">${sign ? "sign-coherent" : "sign violation"}</span>`;
}

export function renderBreadcrumb(
  container: HTMLElement,
  state: SessionState,
  onUndo: () => void
): void {
  container.innerHTML = "";
  const trail = document.createElement("span");
  trail.className = "trail";
  trail.textContent = state.path.length ? state.path.join(" → ") : "(base)";
  const undo = document.createElement("button");
  undo.textContent = "undo";
  undo.disabled = state.path.length === 0;
  undo.addEventListener("click", onUndo);
  container.append(trail, undo);
}

export function renderOraclePanel(container: HTMLElement, panel: OraclePanelState): void {
  if (panel.capped) {
    container.innerHTML = `<p class="capped">oracle capped: ${panel.error ?? ""}</p>`;
    return;
  }
  if (!panel.result) {
    container.innerHTML = "";
    return;
  }
  const { display, truncated } = truncateVariable(panel.result.variable, panel.result.terms);
  container.innerHTML =
    `<p class="variable"><code>${display}</code>${truncated ? "" : ""}</p>` +
    `<p class="gvec">g = (${panel.result.g.join(", ")})</p>`;
}
