/**
 * Explorer session state: the initial exchange matrix plus a history tree of
 * mutation clicks, with per-node cached server data.
 *
 * The quiver-only mutation is duplicated client side so clicks stay
 * responsive when the server is unreachable; g-matrices and classification
 * verdicts only ever come from the server, and locally computed nodes are
 * flagged stale until refreshed.
 */

import { ApiClient } from "./api.js";
import { HistoryTree, TreeNode } from "./history.js";
import { canonJson, checkSkewSymmetric, maxWeight, mutateMatrix } from "./matrix.js";
import type { Matrix, NodeData, SessionExport } from "./types.js";

export class Session {
  readonly initial: Matrix;
  readonly tree: HistoryTree<NodeData>;
  /** Framed 2n x 2n matrices per node id: the client mutates the whole
   *  framed quiver so frozen companions render faithfully. */
  private framed: Matrix[] = [];
  private api: ApiClient;
  private requestSeq = 0;

  constructor(initial: Matrix, api: ApiClient = new ApiClient()) {
    checkSkewSymmetric(initial);
    this.initial = initial;
    this.api = api;
    this.tree = new HistoryTree<NodeData>({
      bMatrix: initial,
      gMatrix: identityMatrix(initial.length),
      variables: null,
      verdict: null,
      stale: false,
    });
    this.framed = [frameMatrix(initial)];
  }

  framedOf(nodeId: number): Matrix {
    return this.framed[nodeId];
  }

  get current(): TreeNode<NodeData> {
    return this.tree.current;
  }

  get rank(): number {
    return this.initial.length;
  }

  /** Mutate at vertex k from the current node.  Mutating twice at the same
   *  vertex is an involution, so a repeated click navigates back to the
   *  parent node (cached data untouched).  Otherwise the b-matrix updates
   *  immediately from the local rule; server data lands asynchronously and
   *  is matched to its request id so a slow response never overwrites a
   *  newer node. */
  async step(k: number): Promise<TreeNode<NodeData>> {
    if (k < 1 || k > this.rank) throw new Error(`vertex ${k} is not mutable`);
    if (this.tree.current.step === k) {
      const parent = this.tree.undo();
      if (parent) return parent;
    }
    const parentId = this.tree.currentId;
    const node = this.tree.descend(k, () => ({
      bMatrix: mutableBlock(mutateMatrix(this.framed[parentId], k)),
      gMatrix: null,
      variables: null,
      verdict: null,
      stale: true,
    }));
    if (this.framed[node.id] === undefined) {
      this.framed[node.id] = mutateMatrix(this.framed[parentId], k);
    }
    if (node.data.gMatrix === null) {
      const seq = ++this.requestSeq;
      try {
        const res = await this.api.step(this.initial, node.path, null);
        if (seq === this.requestSeq || node.data.gMatrix === null) {
          if (canonJson(res.b_matrix) !== canonJson(node.data.bMatrix)) {
            throw new Error("server disagrees with local mutation");
          }
          node.data.gMatrix = res.g_matrix;
          node.data.variables = res.variables;
          node.data.stale = false;
        }
      } catch (err) {
        if (err instanceof Error && err.message.startsWith("server disagrees")) throw err;
        // offline: quiver-only data stays, marked stale
        node.data.stale = true;
      }
    }
    return node;
  }

  async classifyCurrent(): Promise<string> {
    const node = this.tree.current;
    if (node.data.verdict !== null) return node.data.verdict;
    if (this.rank >= 3 && maxWeight(node.data.bMatrix) >= 3) {
      node.data.verdict = "InfiniteMut";
      return node.data.verdict;
    }
    const res = await this.api.classify(node.data.bMatrix);
    node.data.verdict = res.verdict;
    return res.verdict;
  }

  undo(): TreeNode<NodeData> | null {
    return this.tree.undo();
  }

  redo(step?: number): TreeNode<NodeData> | null {
    return this.tree.redo(step);
  }

  /** Session file: identical shape to what the command-line replayer reads. */
  export(): SessionExport {
    return { initial_b_matrix: this.initial, history: [...this.tree.current.path] };
  }

  exportCanonical(): string {
    return canonJson(this.export());
  }
}

export function identityMatrix(n: number): Matrix {
  return Array.from({ length: n }, (_v, i) =>
    Array.from({ length: n }, (_w, j) => (i === j ? "1" : "0")));
}

/** Framed 2n x 2n exchange matrix: the initial quiver plus one frozen
 *  companion i' with a single arrow i -> i'. */
export function frameMatrix(b: Matrix): Matrix {
  const n = b.length;
  const out: string[][] = [];
  for (let i = 0; i < 2 * n; i++) {
    out.push([]);
    for (let j = 0; j < 2 * n; j++) {
      if (i < n && j < n) out[i].push(b[i][j]);
      else if (i < n && j === n + i) out[i].push("-1");
      else if (j < n && i === n + j) out[i].push("1");
      else out[i].push("0");
    }
  }
  return out;
}

export function mutableBlock(framed: Matrix): Matrix {
  const n = framed.length / 2;
  return framed.slice(0, n).map((row) => row.slice(0, n));
}

/** Replay an exported session locally: the b-matrix at every prefix of the
 *  history, canonically serialized (used by the parity harness). */
export function replayBMatrices(file: SessionExport): string[] {
  checkSkewSymmetric(file.initial_b_matrix);
  let m = file.initial_b_matrix;
  const out = [canonJson(m)];
  for (const k of file.history) {
    m = mutateMatrix(m, k);
    out.push(canonJson(m));
  }
  return out;
}
