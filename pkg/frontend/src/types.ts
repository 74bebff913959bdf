/** Wire types for the pressing session service.
 *
 * Field elements are numbers in prime fields and coefficient arrays in
 * extension fields; the client never interprets them beyond zero tests and
 * display, because the server is the single source of truth for semantics.
 */

export type FieldElement = number | number[];

export interface GraphJson {
  field: string;
  n: number;
  weights: FieldElement[][];
}

/** GF(2) shorthand accepted by the service when creating a session. */
export interface BicoloredJson {
  field: string;
  n: number;
  blue: number[];
  edges: [number, number][];
}

export type GraphPayload = GraphJson | BicoloredJson;

export interface SessionState {
  graph: GraphJson;
  log: number[];
  pressable: number[];
  finished: boolean;
}

export interface CreateSessionResponse {
  id: string;
  state: SessionState;
}

export type SomeOrder = number[] | null | 'too-large';

export interface Analysis {
  pressable: number[];
  some_order: SomeOrder;
  pd_in_current_order: boolean;
}

export function isZeroElement(e: FieldElement): boolean {
  return typeof e === 'number' ? e === 0 : e.every((c) => c === 0);
}

export function elementLabel(e: FieldElement): string {
  return typeof e === 'number' ? String(e) : `[${e.join(',')}]`;
}

export function isGf2(graph: GraphJson): boolean {
  return graph.field === 'GF(2)';
}

/** Canonical byte representation used for server-truth comparisons. */
export function canonicalGraph(graph: GraphJson): string {
  return JSON.stringify({ field: graph.field, n: graph.n, weights: graph.weights });
}
