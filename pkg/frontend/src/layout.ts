/** Deterministic circular layout: vertex i of n sits at a fixed angle.
 *
 * Vertex 1 is at the top and indices proceed clockwise.  No physics, no
 * randomness, so renderings (and screenshots) are reproducible.
 */

export interface Point {
  x: number;
  y: number;
}

export function circularLayout(
  n: number,
  radius: number,
  cx: number,
  cy: number,
): Point[] {
  const points: Point[] = [];
  for (let i = 0; i < n; i++) {
    const angle = -Math.PI / 2 + (2 * Math.PI * i) / Math.max(n, 1);
    points.push({
      x: cx + radius * Math.cos(angle),
      y: cy + radius * Math.sin(angle),
    });
  }
  return points;
}
