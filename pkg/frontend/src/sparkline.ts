/**
 * SVG sparkline for the entropy trace. Values arrive in trits from the
 * server and are only scaled for display, never recomputed.
 */

export interface SparklineGeometry {
  width: number;
  height: number;
  /** "x,y" pairs for an SVG polyline, y growing downward */
  points: string;
}

export function sparklineGeometry(
  trace: number[],
  width = 160,
  height = 40,
  pad = 2,
): SparklineGeometry {
  if (trace.length === 0) {
    return { width, height, points: "" };
  }
  const top = Math.max(...trace, 1e-9);
  const innerW = width - 2 * pad;
  const innerH = height - 2 * pad;
  const step = trace.length > 1 ? innerW / (trace.length - 1) : 0;
  const points = trace
    .map((value, i) => {
      const x = pad + i * step;
      const y = pad + (1 - value / top) * innerH;
      return `${x.toFixed(2)},${y.toFixed(2)}`;
    })
    .join(" ");
  return { width, height, points };
}

export function sparklineSvg(trace: number[]): string {
  const geom = sparklineGeometry(trace);
  return (
    `<svg viewBox="0 0 ${geom.width} ${geom.height}" class="sparkline">` +
    `<polyline fill="none" stroke="currentColor" stroke-width="1.5" points="${geom.points}"/>` +
    `</svg>`
  );
}
