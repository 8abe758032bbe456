/** Integer matrices travel as decimal strings so nothing is ever rounded. */
export type IntStr = string;
export type Matrix = IntStr[][];

export interface StepResponse {
  b_matrix: Matrix;
  g_matrix: Matrix; // columns = g-vectors of the current cluster
  variables: string[];
  history: number[];
}

export interface ClassifyResponse {
  verdict: string;
}

export interface ContainsResponse {
  verdict: "InCone" | "NotFoundWithin";
  history: number[];
}

/** Data cached at one node of the exploration tree. */
export interface NodeData {
  bMatrix: Matrix;
  gMatrix: Matrix | null; // null while offline / not yet fetched
  variables: string[] | null;
  verdict: string | null;
  stale: boolean; // true when locally computed while the server was away
}

export interface SessionExport {
  initial_b_matrix: Matrix;
  history: number[];
}
