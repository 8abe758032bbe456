/** Explorer page: steer mutations vertex by vertex, watch the g-matrix and
 *  classification evolve, branch what-if explorations from any node. */

import { ApiClient } from "./api.js";
import { gMatrixRows, renderQuiver } from "./render.js";
import { Session } from "./session.js";
import type { Matrix } from "./types.js";

const PRESETS: Record<string, Matrix> = {
  "A2": [["0", "-1"], ["1", "0"]],
  "A3": [["0", "-1", "0"], ["1", "0", "-1"], ["0", "1", "0"]],
  "K2 (double arrow)": [["0", "-2"], ["2", "0"]],
  "K3 (triple arrow)": [["0", "-3"], ["3", "0"]],
  "Rank-3 cycle": [["0", "-1", "1"], ["1", "0", "-1"], ["-1", "1", "0"]],
  "Doubled 3-cycle": [["0", "-2", "2"], ["2", "0", "-2"], ["-2", "2", "0"]],
};

function toast(msg: string) {
  const box = document.getElementById("toasts")!;
  const el = document.createElement("div");
  el.className = "toast";
  el.textContent = msg;
  box.appendChild(el);
  setTimeout(() => el.remove(), 4500);
}

function main() {
  const api = new ApiClient("");
  let session = new Session(PRESETS["A2"], api);

  const quiverBox = document.getElementById("quiver")!;
  const gBox = document.getElementById("gmatrix")!;
  const varsBox = document.getElementById("variables")!;
  const badge = document.getElementById("badge")!;
  const pathBox = document.getElementById("path")!;
  const select = document.getElementById("preset") as HTMLSelectElement;
  const undoBtn = document.getElementById("undo") as HTMLButtonElement;
  const redoBtn = document.getElementById("redo") as HTMLButtonElement;
  const exportBtn = document.getElementById("export") as HTMLButtonElement;

  for (const name of Object.keys(PRESETS)) {
    const opt = document.createElement("option");
    opt.value = name;
    opt.textContent = name;
    select.appendChild(opt);
  }

  function draw() {
    const node = session.current;
    renderQuiver(quiverBox, session.framedOf(node.id), {
      onVertexClick: (k) => {
        void onStep(k);
      },
    });
    pathBox.textContent = node.path.length ? "path: " + node.path.join(" → ") : "initial seed";
    if (node.data.gMatrix) {
      const rows = gMatrixRows(node.data.gMatrix);
      gBox.innerHTML = "<table>" + rows.map((r) =>
        `<tr class="${r.coherent ? "coherent" : "mixed"}">` +
        r.cells.map((c) => `<td>${c}</td>`).join("") + "</tr>").join("") + "</table>";
      gBox.classList.toggle("stale", node.data.stale);
    } else {
      gBox.innerHTML = "<em>g-data unavailable offline</em>";
      gBox.classList.add("stale");
    }
    varsBox.textContent = node.data.variables ? node.data.variables.join("\n") : "";
    undoBtn.disabled = !session.tree.canUndo();
  }

  async function onStep(k: number) {
    try {
      await session.step(k);
      draw();
      void refreshBadge();
    } catch (err) {
      toast(err instanceof Error ? err.message : String(err));
    }
  }

  async function refreshBadge() {
    badge.textContent = "...";
    try {
      badge.textContent = await session.classifyCurrent();
    } catch (err) {
      badge.textContent = "offline";
      toast(err instanceof Error ? err.message : String(err));
    }
  }

  select.addEventListener("change", () => {
    session = new Session(PRESETS[select.value], api);
    draw();
    void refreshBadge();
  });
  undoBtn.addEventListener("click", () => {
    session.undo();
    draw();
  });
  redoBtn.addEventListener("click", () => {
    session.redo();
    draw();
  });
  exportBtn.addEventListener("click", () => {
    const blob = new Blob([session.exportCanonical()], { type: "application/json" });
    const a = document.createElement("a");
    a.href = URL.createObjectURL(blob);
    a.download = "session.json";
    a.click();
    URL.revokeObjectURL(a.href);
  });

  draw();
  void refreshBadge();
}

document.addEventListener("DOMContentLoaded", main);
