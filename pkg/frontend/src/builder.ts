/** Graph construction on the client side: the GF(2) bicolored builder and
 * the JSON paste path for general fields.
 *
 * The builder only assembles the creation payload; once a session exists the
 * server owns the graph.
 */

import type { BicoloredJson, GraphJson, GraphPayload } from './types';

function edgeKey(i: number, j: number): string {
  return i < j ? `${i}-${j}` : `${j}-${i}`;
}

export class BicoloredBuilder {
  private blue = new Set<number>();
  private edges = new Set<string>();

  constructor(private size: number = 5) {
    if (size < 1) throw new Error('graph needs at least one vertex');
  }

  get n(): number {
    return this.size;
  }

  setSize(n: number): void {
    if (n < 1) throw new Error('graph needs at least one vertex');
    this.size = n;
    for (const v of [...this.blue]) {
      if (v > n) this.blue.delete(v);
    }
    for (const key of [...this.edges]) {
      const [i, j] = key.split('-').map(Number);
      if (i > n || j > n) this.edges.delete(key);
    }
  }

  private checkVertex(v: number): void {
    if (!Number.isInteger(v) || v < 1 || v > this.size) {
      throw new Error(`vertex ${v} not in 1..${this.size}`);
    }
  }

  isBlue(v: number): boolean {
    return this.blue.has(v);
  }

  hasEdge(i: number, j: number): boolean {
    return this.edges.has(edgeKey(i, j));
  }

  toggleColor(v: number): void {
    this.checkVertex(v);
    if (this.blue.has(v)) this.blue.delete(v);
    else this.blue.add(v);
  }

  toggleEdge(i: number, j: number): void {
    this.checkVertex(i);
    this.checkVertex(j);
    if (i === j) throw new Error('self-loop edges are not allowed');
    const key = edgeKey(i, j);
    if (this.edges.has(key)) this.edges.delete(key);
    else this.edges.add(key);
  }

  toJson(): BicoloredJson {
    return {
      field: 'GF(2)',
      n: this.size,
      blue: [...this.blue].sort((a, b) => a - b),
      edges: [...this.edges]
        .map((key) => key.split('-').map(Number) as [number, number])
        .sort((a, b) => a[0] - b[0] || a[1] - b[1]),
    };
  }

  /** The equivalent full weight matrix, for previewing with the renderer. */
  toGraphJson(): GraphJson {
    const weights = Array.from({ length: this.size }, () =>
      new Array<number>(this.size).fill(0),
    );
    for (const v of this.blue) weights[v - 1][v - 1] = 1;
    for (const key of this.edges) {
      const [i, j] = key.split('-').map(Number);
      weights[i - 1][j - 1] = 1;
      weights[j - 1][i - 1] = 1;
    }
    return { field: 'GF(2)', n: this.size, weights };
  }
}

/** Validate pasted JSON into a session creation payload. */
export function parseGraphJson(text: string): GraphPayload {
  let parsed: unknown;
  try {
    parsed = JSON.parse(text);
  } catch {
    throw new Error('not valid JSON');
  }
  if (typeof parsed !== 'object' || parsed === null) {
    throw new Error('expected a JSON object');
  }
  const obj = parsed as Record<string, unknown>;
  if (typeof obj.n !== 'number' || !Number.isInteger(obj.n) || obj.n < 1) {
    throw new Error('"n" must be a positive integer');
  }
  if ('blue' in obj || 'edges' in obj) {
    if (!Array.isArray(obj.blue ?? []) || !Array.isArray(obj.edges ?? [])) {
      throw new Error('"blue" and "edges" must be arrays');
    }
    return {
      field: typeof obj.field === 'string' ? obj.field : 'GF(2)',
      n: obj.n,
      blue: (obj.blue ?? []) as number[],
      edges: (obj.edges ?? []) as [number, number][],
    };
  }
  if (typeof obj.field !== 'string') {
    throw new Error('"field" must be a field literal like "GF(3)"');
  }
  if (!Array.isArray(obj.weights) || obj.weights.length !== obj.n) {
    throw new Error('"weights" must be an n-by-n array');
  }
  for (const row of obj.weights) {
    if (!Array.isArray(row) || row.length !== obj.n) {
      throw new Error('"weights" must be an n-by-n array');
    }
  }
  return obj as unknown as GraphJson;
}

/** Export payload: the current server-side graph plus the press log. */
export function exportSession(graph: GraphJson, log: number[]): string {
  return JSON.stringify({ graph, log }, null, 2);
}
