/**
 * SVG rendering of the framed quiver: mutable vertices are clickable
 * circles, frozen companions are dashed squares, arrow bundles carry their
 * multiplicity as a weight label.
 */

import { toBig } from "./matrix.js";
import type { Matrix } from "./types.js";

export interface RenderOptions {
  size?: number;
  onVertexClick?: (k: number) => void;
}

interface ArrowSpec {
  from: number; // 0-based, mutable vertices only here
  to: number;
  weight: number;
}

/** Arrows encoded by the exchange matrix: b_ij > 0 means b_ij arrows
 *  j -> i. */
export function arrowsOf(bMatrix: Matrix): ArrowSpec[] {
  const b = toBig(bMatrix);
  const out: ArrowSpec[] = [];
  for (let i = 0; i < b.length; i++) {
    for (let j = 0; j < b.length; j++) {
      if (b[i][j] > 0n) {
        out.push({ from: j, to: i, weight: Number(b[i][j]) });
      }
    }
  }
  return out;
}

const SVG_NS = "http://www.w3.org/2000/svg";

/** Draw the framed quiver (2n x 2n exchange matrix): mutable vertices are
 *  clickable, frozen companions are dashed squares on the outer ring, and
 *  all arrows including the framing ones carry their weights. */
export function renderQuiver(container: HTMLElement, framedMatrix: Matrix,
                             opts: RenderOptions = {}): SVGSVGElement {
  const n = framedMatrix.length / 2;
  const size = opts.size ?? 420;
  const cx = size / 2;
  const cy = size / 2;
  const rMut = size * 0.28;
  const rFr = size * 0.42;

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${size} ${size}`);
  svg.setAttribute("class", "quiver");

  const pos = (idx: number, radius?: number): [number, number] => {
    const mutable = idx < n;
    const slot = mutable ? idx : idx - n;
    const r = radius ?? (mutable ? rMut : rFr);
    const angle = (2 * Math.PI * slot) / n - Math.PI / 2;
    return [cx + r * Math.cos(angle), cy + r * Math.sin(angle)];
  };

  const defs = document.createElementNS(SVG_NS, "defs");
  defs.innerHTML = `<marker id="arrowhead" markerWidth="8" markerHeight="6"
      refX="7" refY="3" orient="auto"><path d="M0,0 L8,3 L0,6 z"/></marker>`;
  svg.appendChild(defs);

  for (const a of arrowsOf(framedMatrix)) {
    const [x1, y1] = pos(a.from);
    const [x2, y2] = pos(a.to);
    const dx = x2 - x1, dy = y2 - y1;
    const len = Math.hypot(dx, dy) || 1;
    const trim = size * 0.045;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(x1 + (dx / len) * trim));
    line.setAttribute("y1", String(y1 + (dy / len) * trim));
    line.setAttribute("x2", String(x2 - (dx / len) * trim));
    line.setAttribute("y2", String(y2 - (dy / len) * trim));
    line.setAttribute("class", "arrow");
    line.setAttribute("marker-end", "url(#arrowhead)");
    svg.appendChild(line);
    if (a.weight > 1) {
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String((x1 + x2) / 2 + (dy / len) * 10));
      label.setAttribute("y", String((y1 + y2) / 2 - (dx / len) * 10));
      label.setAttribute("class", "weight");
      label.textContent = String(a.weight);
      svg.appendChild(label);
    }
  }

  for (let i = 0; i < n; i++) {
    // frozen companion i' drawn outside its mutable vertex
    const [fx, fy] = pos(n + i);
    const frozen = document.createElementNS(SVG_NS, "rect");
    const s = size * 0.05;
    frozen.setAttribute("x", String(fx - s / 2));
    frozen.setAttribute("y", String(fy - s / 2));
    frozen.setAttribute("width", String(s));
    frozen.setAttribute("height", String(s));
    frozen.setAttribute("class", "frozen");
    svg.appendChild(frozen);
    const flabel = document.createElementNS(SVG_NS, "text");
    flabel.setAttribute("x", String(fx));
    flabel.setAttribute("y", String(fy + s));
    flabel.setAttribute("class", "frozen-label");
    flabel.textContent = `${i + 1}'`;
    svg.appendChild(flabel);

    const [x, y] = pos(i, rMut);
    const g = document.createElementNS(SVG_NS, "g");
    g.setAttribute("class", "vertex");
    g.addEventListener("click", () => opts.onVertexClick?.(i + 1));
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(x));
    circle.setAttribute("cy", String(y));
    circle.setAttribute("r", String(size * 0.04));
    g.appendChild(circle);
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(x));
    label.setAttribute("y", String(y + 4));
    label.setAttribute("class", "vertex-label");
    label.textContent = String(i + 1);
    g.appendChild(label);
    svg.appendChild(g);
  }

  container.replaceChildren(svg);
  return svg;
}

/** Sign-coherence highlighting of a g-matrix: a row is coherent when its
 *  entries are not of strictly mixed sign. */
export function gMatrixRows(gMatrix: Matrix): { cells: string[]; coherent: boolean }[] {
  const cols = toBig(gMatrix);
  if (cols.length === 0) return [];
  const n = cols[0].length;
  const rows = [];
  for (let i = 0; i < n; i++) {
    const entries = cols.map((c) => c[i]);
    const coherent = !(entries.some((x) => x > 0n) && entries.some((x) => x < 0n));
    rows.push({ cells: entries.map((x) => x.toString()), coherent });
  }
  return rows;
}
