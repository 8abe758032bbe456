import assert from "node:assert/strict";
import { test } from "node:test";

import { arrowsOf, gMatrixRows } from "../src/render.js";
import { frameMatrix, mutableBlock } from "../src/session.js";
import { mutateMatrix } from "../src/matrix.js";
import type { Matrix } from "../src/types.js";

const A2: Matrix = [["0", "-1"], ["1", "0"]];

test("framed rank-2 quiver has 2 mutable + 2 frozen vertices and 3 arrows", () => {
  const framed = frameMatrix(A2);
  assert.equal(framed.length, 4);
  const arrows = arrowsOf(framed);
  assert.equal(arrows.reduce((acc, a) => acc + a.weight, 0), 3);
  // 1 -> 2 plus the framing arrows 1 -> 1', 2 -> 2'
  assert.deepEqual(
    arrows.map((a) => [a.from, a.to]).sort(),
    [[0, 1], [0, 2], [1, 3]]);
});

test("framed mutation keeps the mutable block equal to plain mutation", () => {
  let framed = frameMatrix(A2);
  let plain = A2;
  for (const k of [1, 2, 1]) {
    framed = mutateMatrix(framed, k);
    plain = mutateMatrix(plain, k);
    assert.deepEqual(mutableBlock(framed), plain);
  }
});

test("framing arrows move under mutation", () => {
  const framed = mutateMatrix(frameMatrix(A2), 1);
  const arrows = arrowsOf(framed).map((a) => [a.from, a.to]);
  // mutating at 1 reverses its framing arrow: 1' -> 1
  assert.ok(arrows.some(([f, t]) => f === 2 && t === 0));
});

test("sign-coherence rows", () => {
  const rows = gMatrixRows([["1", "0"], ["-1", "1"]]);
  assert.equal(rows[0].coherent, false);
  assert.equal(rows[1].coherent, true);
});
