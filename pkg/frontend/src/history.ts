/**
 * Exploration history as a tree: branching what-if exploration is the point.
 * Undo/redo navigate between nodes without touching cached data.
 */

export interface TreeNode<T> {
  readonly id: number;
  readonly parent: number | null;
  readonly step: number | null; // vertex clicked to get here (null at root)
  readonly path: number[];
  data: T;
  children: Map<number, number>; // step -> child node id
}

export class HistoryTree<T> {
  private nodes: TreeNode<T>[] = [];
  private cursor = 0;

  constructor(rootData: T) {
    this.nodes = [{ id: 0, parent: null, step: null, path: [], data: rootData, children: new Map() }];
    this.cursor = 0;
  }

  get current(): TreeNode<T> {
    return this.nodes[this.cursor];
  }

  get currentId(): number {
    return this.cursor;
  }

  node(id: number): TreeNode<T> {
    const n = this.nodes[id];
    if (!n) throw new Error(`no node ${id}`);
    return n;
  }

  /** Move to the child along `step`, creating it with `make` only when it
   *  does not exist yet; revisits never recompute. */
  descend(step: number, make: () => T): TreeNode<T> {
    const cur = this.current;
    const existing = cur.children.get(step);
    if (existing !== undefined) {
      this.cursor = existing;
      return this.current;
    }
    const node: TreeNode<T> = {
      id: this.nodes.length,
      parent: cur.id,
      step,
      path: [...cur.path, step],
      data: make(),
      children: new Map(),
    };
    this.nodes.push(node);
    cur.children.set(step, node.id);
    this.cursor = node.id;
    return node;
  }

  canUndo(): boolean {
    return this.current.parent !== null;
  }

  undo(): TreeNode<T> | null {
    const p = this.current.parent;
    if (p === null) return null;
    this.cursor = p;
    return this.current;
  }

  /** Redo along the most recently created child when unambiguous, or along
   *  the given step. */
  redo(step?: number): TreeNode<T> | null {
    const kids = this.current.children;
    if (kids.size === 0) return null;
    let target: number | undefined;
    if (step !== undefined) {
      target = kids.get(step);
    } else {
      target = Math.max(...kids.values());
    }
    if (target === undefined) return null;
    this.cursor = target;
    return this.current;
  }

  jump(id: number): TreeNode<T> {
    if (!this.nodes[id]) throw new Error(`no node ${id}`);
    this.cursor = id;
    return this.current;
  }

  get size(): number {
    return this.nodes.length;
  }

  all(): readonly TreeNode<T>[] {
    return this.nodes;
  }
}
