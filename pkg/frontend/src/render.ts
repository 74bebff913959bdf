/** Pure SVG/text rendering of server state.
 *
 * Everything here is a function from the last server response to strings;
 * there is no graph mutation logic on the client.  GF(2) graphs render as
 * bicolored pictures (gray = blue vertex); other fields render weights as
 * labels, with server-reported pressable vertices highlighted.
 */

import { circularLayout } from './layout';
import type { Analysis, GraphJson, SessionState } from './types';
import { elementLabel, isGf2, isZeroElement } from './types';

export const BOARD_SIZE = 420;
const VERTEX_RADIUS = 18;
const BLUE_FILL = '#9e9e9e';
const WHITE_FILL = '#ffffff';
const PRESSABLE_STROKE = '#1565c0';

export interface RenderOptions {
  pressable?: number[];
  showHints?: boolean;
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

export function renderGraphSvg(graph: GraphJson, options: RenderOptions = {}): string {
  const gf2 = isGf2(graph);
  const pressable = new Set(options.showHints ? options.pressable ?? [] : []);
  const points = circularLayout(graph.n, BOARD_SIZE / 2 - 2 * VERTEX_RADIUS, BOARD_SIZE / 2, BOARD_SIZE / 2);
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${BOARD_SIZE} ${BOARD_SIZE}" width="${BOARD_SIZE}" height="${BOARD_SIZE}">`,
  ];

  for (let i = 0; i < graph.n; i++) {
    for (let j = i + 1; j < graph.n; j++) {
      const w = graph.weights[i][j];
      if (isZeroElement(w)) continue;
      const a = points[i];
      const b = points[j];
      parts.push(
        `<line data-edge="${i + 1}-${j + 1}" x1="${a.x.toFixed(1)}" y1="${a.y.toFixed(1)}" ` +
          `x2="${b.x.toFixed(1)}" y2="${b.y.toFixed(1)}" stroke="#333" stroke-width="1.5"/>`,
      );
      if (!gf2) {
        const mx = ((a.x + b.x) / 2).toFixed(1);
        const my = ((a.y + b.y) / 2).toFixed(1);
        parts.push(
          `<text data-edge-label="${i + 1}-${j + 1}" x="${mx}" y="${my}" font-size="12" ` +
            `fill="#b71c1c" text-anchor="middle">${escapeXml(elementLabel(w))}</text>`,
        );
      }
    }
  }

  for (let i = 0; i < graph.n; i++) {
    const v = i + 1;
    const loop = graph.weights[i][i];
    const blue = !isZeroElement(loop);
    const p = points[i];
    const fill = gf2 ? (blue ? BLUE_FILL : WHITE_FILL) : WHITE_FILL;
    const stroke = pressable.has(v) ? PRESSABLE_STROKE : '#333';
    const strokeWidth = pressable.has(v) ? 3 : 1.5;
    const classes = ['vertex'];
    if (pressable.has(v)) classes.push('pressable');
    parts.push(
      `<g data-vertex="${v}" class="${classes.join(' ')}" cursor="pointer">` +
        `<circle cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="${VERTEX_RADIUS}" ` +
        `fill="${fill}" stroke="${stroke}" stroke-width="${strokeWidth}"/>` +
        `<text x="${p.x.toFixed(1)}" y="${(p.y + 4).toFixed(1)}" font-size="13" text-anchor="middle">${v}</text>` +
        (gf2
          ? ''
          : `<text x="${p.x.toFixed(1)}" y="${(p.y + VERTEX_RADIUS + 13).toFixed(1)}" ` +
            `font-size="11" fill="#555" text-anchor="middle">w=${escapeXml(elementLabel(loop))}</text>`) +
        '</g>',
    );
  }
  parts.push('</svg>');
  return parts.join('');
}

export function renderLog(state: SessionState): string {
  if (state.log.length === 0) {
    return state.finished ? '(empty board) — success' : '(no presses yet)';
  }
  return state.finished ? `${state.log.join(',')} — success` : state.log.join(',');
}

export function hintText(analysis: Analysis): string {
  if (analysis.some_order === null) return 'no successful order exists';
  if (analysis.some_order === 'too-large') {
    return 'graph too large for the order search';
  }
  if (analysis.some_order.length === 0) return 'board is already empty';
  return `successful order still exists: ${analysis.some_order.join(',')}`;
}

export function pressableText(analysis: Analysis): string {
  return analysis.pressable.length === 0
    ? 'no pressable vertices'
    : `pressable: ${analysis.pressable.join(',')}`;
}
