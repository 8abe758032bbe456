/**
 * Exact skew-symmetric matrix mutation on string-encoded integers.
 *
 * This mirrors the server's quiver mutation so the explorer stays responsive
 * offline; g-vectors and classification always come from the server.
 */

import type { IntStr, Matrix } from "./types.js";

export function toBig(m: Matrix): bigint[][] {
  return m.map((row) => row.map((x) => BigInt(x)));
}

export function fromBig(m: bigint[][]): Matrix {
  return m.map((row) => row.map((x) => x.toString()));
}

export function checkSkewSymmetric(m: Matrix): void {
  const b = toBig(m);
  const n = b.length;
  for (const row of b) {
    if (row.length !== n) throw new Error("matrix is not square");
  }
  for (let i = 0; i < n; i++) {
    for (let j = 0; j < n; j++) {
      if (b[i][j] !== -b[j][i]) throw new Error(`entry (${i},${j}) breaks skew-symmetry`);
    }
  }
}

/** Mutate at vertex k (1-based): b'_ij = -b_ij on row/col k, else
 *  b_ij + sgn(b_ik) * max(b_ik * b_kj, 0). */
export function mutateMatrix(m: Matrix, k: number): Matrix {
  const b = toBig(m);
  const n = b.length;
  if (k < 1 || k > n) throw new Error(`vertex ${k} out of range 1..${n}`);
  const kk = k - 1;
  const out: bigint[][] = [];
  for (let i = 0; i < n; i++) {
    out.push([]);
    for (let j = 0; j < n; j++) {
      if (i === kk || j === kk) {
        out[i].push(-b[i][j]);
      } else {
        const prod = b[i][kk] * b[kk][j];
        let extra = 0n;
        if (prod > 0n) extra = b[i][kk] > 0n ? prod : -prod;
        out[i].push(b[i][j] + extra);
      }
    }
  }
  return fromBig(out);
}

/** Largest arrow multiplicity |b_ij| as a number (small in practice). */
export function maxWeight(m: Matrix): number {
  let best = 0n;
  for (const row of toBig(m)) {
    for (const x of row) {
      const a = x < 0n ? -x : x;
      if (a > best) best = a;
    }
  }
  return Number(best);
}

/** Canonical JSON with sorted keys and no whitespace: byte-identical to the
 *  CLI's golden serialization. */
export function canonJson(value: unknown): string {
  if (value === null || typeof value !== "object") {
    return JSON.stringify(value);
  }
  if (Array.isArray(value)) {
    return "[" + value.map(canonJson).join(",") + "]";
  }
  const obj = value as Record<string, unknown>;
  const keys = Object.keys(obj).sort();
  return "{" + keys.map((k) => JSON.stringify(k) + ":" + canonJson(obj[k])).join(",") + "}";
}
