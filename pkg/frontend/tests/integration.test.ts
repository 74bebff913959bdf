/** End-to-end flows against the real session service.
 *
 * Spawns the Python service on a local port and drives it through the same
 * client the browser uses: the example pressing sequence, an illegal press,
 * and the no-successful-order hint.  After every action the client's view of
 * the graph is compared byte-for-byte with a fresh GET (server truth).
 */

import { type ChildProcess, spawn } from 'node:child_process';

import { afterAll, beforeAll, describe, expect, it } from 'vitest';

import { ApiError, PressLabClient } from '../src/api';
import { hintText, renderGraphSvg, renderLog } from '../src/render';
import { canonicalGraph } from '../src/types';

const PORT = 8731;
const BASE = `http://127.0.0.1:${PORT}`;

const EXAMPLE = {
  field: 'GF(2)',
  n: 5,
  blue: [1, 3, 4],
  edges: [
    [1, 2],
    [1, 5],
    [1, 3],
    [2, 4],
    [4, 5],
    [5, 3],
  ] as [number, number][],
};

const TRIANGLE = {
  field: 'GF(3)',
  n: 3,
  weights: [
    [1, 2, 2],
    [2, 1, 2],
    [2, 2, 1],
  ],
};

let service: ChildProcess;

async function waitForService(): Promise<void> {
  const deadline = Date.now() + 20000;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${BASE}/sessions/probe`);
      if (response.status === 404) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
  throw new Error('service did not come up');
}

beforeAll(async () => {
  service = spawn('python3', ['-m', 'ffpd.cli', 'serve', '--port', String(PORT)], {
    stdio: 'ignore',
  });
  await waitForService();
}, 30000);

afterAll(() => {
  service.kill();
});

describe('pressing the example graph', () => {
  it('clicking 1,2,3,4 empties the board with a success log', async () => {
    const client = new PressLabClient(BASE);
    const { id, state } = await client.createSession(EXAMPLE);
    expect(state.pressable).toEqual([1, 3, 4]);

    let current = state;
    for (const vertex of [1, 2, 3, 4]) {
      current = await client.press(id, vertex);
      // server-truth invariant: rendered state equals a fresh GET
      const fresh = await client.getSession(id);
      expect(canonicalGraph(current.graph)).toBe(canonicalGraph(fresh.graph));
      expect(renderGraphSvg(current.graph)).toBe(renderGraphSvg(fresh.graph));
    }
    expect(current.finished).toBe(true);
    expect(renderLog(current)).toBe('1,2,3,4 — success');
    const svg = renderGraphSvg(current.graph);
    expect(svg).not.toContain('data-edge=');
    expect(svg).not.toContain('#9e9e9e');
    await client.deleteSession(id);
  });

  it('clicking a white vertex is rejected with an explanation', async () => {
    const client = new PressLabClient(BASE);
    const { id } = await client.createSession(EXAMPLE);
    const failure = await client.press(id, 2).catch((e: unknown) => e);
    expect(failure).toBeInstanceOf(ApiError);
    expect((failure as ApiError).status).toBe(409);
    expect((failure as ApiError).detail).toContain('NonPositiveLoop');
    // the rejected press left the session untouched
    const after = await client.getSession(id);
    expect(after.log).toEqual([]);
    await client.deleteSession(id);
  });

  it('undo restores the exact previous state', async () => {
    const client = new PressLabClient(BASE);
    const { id, state } = await client.createSession(EXAMPLE);
    const before = canonicalGraph(state.graph);
    await client.press(id, 1);
    const undone = await client.undo(id);
    expect(canonicalGraph(undone.graph)).toBe(before);
    expect(undone.log).toEqual([]);
    await client.deleteSession(id);
  });
});

describe('analysis hints', () => {
  it('reports that the F3 triangle has no successful order', async () => {
    const client = new PressLabClient(BASE);
    const { id } = await client.createSession(TRIANGLE);
    const analysis = await client.analysis(id);
    expect(analysis.some_order).toBeNull();
    expect(hintText(analysis)).toBe('no successful order exists');
    await client.deleteSession(id);
  });

  it('tracks the surviving order mid-session', async () => {
    const client = new PressLabClient(BASE);
    const { id } = await client.createSession(EXAMPLE);
    await client.press(id, 1);
    const analysis = await client.analysis(id);
    expect(analysis.some_order).toEqual([2, 3, 4]);
    expect(hintText(analysis)).toBe('successful order still exists: 2,3,4');
    await client.deleteSession(id);
  });
});
