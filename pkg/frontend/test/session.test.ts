import assert from "node:assert/strict";
import { readFileSync } from "node:fs";
import { test } from "node:test";
import { fileURLToPath } from "node:url";
import path from "node:path";

import { ApiClient } from "../src/api.js";
import { canonJson, mutateMatrix } from "../src/matrix.js";
import { Session, replayBMatrices } from "../src/session.js";
import type { Matrix, StepResponse } from "../src/types.js";

const HERE = path.dirname(fileURLToPath(import.meta.url));
const GOLDEN = JSON.parse(
  readFileSync(path.join(HERE, "..", "..", "golden", "sessions.json"), "utf-8"));

interface GoldenSession {
  name: string;
  initial_b_matrix: Matrix;
  clicks: number[];
  b_matrices: string[];
  g_matrices: string[];
}

/** API stub that replays golden server responses (and can be "offline"). */
class StubApi extends ApiClient {
  offline = false;
  constructor(private session: GoldenSession) { super(""); }

  override async step(initial: Matrix, history: number[], _k: number | null): Promise<StepResponse> {
    if (this.offline) throw new Error("offline");
    // collapse immediate backtracks the way the server does
    const collapsed: number[] = [];
    for (const k of history) {
      if (collapsed.length && collapsed[collapsed.length - 1] === k) collapsed.pop();
      else collapsed.push(k);
    }
    const idx = prefixIndex(this.session.clicks, collapsed);
    assert.notEqual(idx, -1, `history ${collapsed} is not a prefix of the scripted session`);
    return {
      b_matrix: JSON.parse(this.session.b_matrices[idx]),
      g_matrix: JSON.parse(this.session.g_matrices[idx]),
      variables: [],
      history: collapsed,
    };
  }

  override async classify(): Promise<{ verdict: string }> {
    if (this.offline) throw new Error("offline");
    return { verdict: "stub" };
  }
}

function prefixIndex(clicks: number[], history: number[]): number {
  // the scripted sessions never backtrack, so a collapsed history must be a
  // literal prefix of the click sequence
  for (let i = 0; i <= clicks.length; i++) {
    if (canonJson(clicks.slice(0, i)) === canonJson(history)) return i;
  }
  return -1;
}

test("local replay reproduces the command-line b-matrices byte for byte", () => {
  for (const s of GOLDEN as GoldenSession[]) {
    const got = replayBMatrices({ initial_b_matrix: s.initial_b_matrix, history: s.clicks });
    assert.deepEqual(got, s.b_matrices, s.name);
  }
});

test("stepping a session caches server g-matrices identical to the goldens", async () => {
  for (const s of GOLDEN as GoldenSession[]) {
    const api = new StubApi(s);
    const session = new Session(s.initial_b_matrix, api);
    assert.equal(canonJson(session.current.data.bMatrix), s.b_matrices[0], s.name);
    for (let i = 0; i < s.clicks.length; i++) {
      const node = await session.step(s.clicks[i]);
      assert.equal(canonJson(node.data.bMatrix), s.b_matrices[i + 1], `${s.name} b[${i + 1}]`);
      assert.equal(canonJson(node.data.gMatrix), s.g_matrices[i + 1], `${s.name} g[${i + 1}]`);
      assert.equal(node.data.stale, false);
    }
  }
});

test("repeated click navigates back to the parent node's cached data", async () => {
  const s = (GOLDEN as GoldenSession[])[0];
  const api = new StubApi(s);
  const session = new Session(s.initial_b_matrix, api);
  const first = await session.step(s.clicks[0]);
  const firstData = first.data;
  const back = await session.step(s.clicks[0]);
  assert.equal(back.id, 0);
  assert.equal(session.tree.size, 2); // no third node was created
  const again = await session.step(s.clicks[0]);
  assert.equal(again.data, firstData); // same object: cache untouched
});

test("offline steps keep quiver data, mark g-data stale, then recover", async () => {
  const s = (GOLDEN as GoldenSession[])[1];
  const api = new StubApi(s);
  api.offline = true;
  const session = new Session(s.initial_b_matrix, api);
  const node = await session.step(s.clicks[0]);
  assert.equal(node.data.stale, true);
  assert.equal(node.data.gMatrix, null);
  assert.equal(canonJson(node.data.bMatrix), s.b_matrices[1]);
  // going back and forward again after the server returns refreshes g-data
  await session.step(s.clicks[0]);
  api.offline = false;
  const refreshed = await session.step(s.clicks[0]);
  assert.equal(refreshed.data.stale, false);
  assert.equal(canonJson(refreshed.data.gMatrix), s.g_matrices[1]);
});

test("undo and redo preserve node data exactly", async () => {
  const s = (GOLDEN as GoldenSession[])[2];
  const api = new StubApi(s);
  const session = new Session(s.initial_b_matrix, api);
  for (const k of s.clicks.slice(0, 3)) await session.step(k);
  const deep = session.current;
  const snapshot = canonJson(deep.data);
  session.undo();
  session.undo();
  session.redo();
  session.redo();
  assert.equal(session.current.id, deep.id);
  assert.equal(canonJson(session.current.data), snapshot);
});

test("exported session replays to the current node's b-matrix", async () => {
  const s = (GOLDEN as GoldenSession[])[3];
  const api = new StubApi(s);
  const session = new Session(s.initial_b_matrix, api);
  for (const k of s.clicks) await session.step(k);
  const exported = session.export();
  const replay = replayBMatrices(exported);
  assert.equal(replay[replay.length - 1], canonJson(session.current.data.bMatrix));
});

test("server disagreement with the local rule is surfaced loudly", async () => {
  const s = (GOLDEN as GoldenSession[])[0];
  class LyingApi extends StubApi {
    override async step(initial: Matrix, history: number[], k: number | null): Promise<StepResponse> {
      const res = await super.step(initial, history, k);
      return { ...res, b_matrix: mutateMatrix(res.b_matrix, 1) };
    }
  }
  const session = new Session(s.initial_b_matrix, new LyingApi(s));
  await assert.rejects(() => session.step(s.clicks[0]), /server disagrees/);
});
