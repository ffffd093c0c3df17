// Minimal SVG line chart for the query-rate decay. Pure string geometry so
// the scaling is unit-testable without a DOM.

import { SeriesPoint } from "./api.js";

export interface ChartGeometry {
	width: number;
	height: number;
	pad: number;
}

export const DEFAULT_GEOMETRY: ChartGeometry = { width: 560, height: 180, pad: 24 };

/** Map series points onto "x,y x,y ..." polyline coordinates.
 * x spans the training positions, y is the 0-100 percentage axis (inverted,
 * SVG y grows downward). */
export function polylinePoints(
	points: SeriesPoint[],
	geometry: ChartGeometry = DEFAULT_GEOMETRY,
): string {
	if (points.length === 0) return "";
	const { width, height, pad } = geometry;
	const innerWidth = width - 2 * pad;
	const innerHeight = height - 2 * pad;
	const maxX = Math.max(...points.map((p) => p[0]), 1);
	return points
		.map(([position, , , percentage]) => {
			const x = pad + (position / maxX) * innerWidth;
			const y = pad + (1 - percentage / 100) * innerHeight;
			return `${round2(x)},${round2(y)}`;
		})
		.join(" ");
}

function round2(value: number): number {
	return Math.round(value * 100) / 100;
}

export function chartSvg(points: SeriesPoint[], geometry: ChartGeometry = DEFAULT_GEOMETRY): string {
	const { width, height, pad } = geometry;
	const axisColor = "#8a8f98";
	const line = polylinePoints(points, geometry);
	return [
		`<svg viewBox="0 0 ${width} ${height}" role="img" aria-label="query rate per training abstract">`,
		`<line x1="${pad}" y1="${pad}" x2="${pad}" y2="${height - pad}" stroke="${axisColor}"/>`,
		`<line x1="${pad}" y1="${height - pad}" x2="${width - pad}" y2="${height - pad}" stroke="${axisColor}"/>`,
		`<text x="4" y="${pad + 4}" class="axis">100%</text>`,
		`<text x="4" y="${height - pad}" class="axis">0%</text>`,
		line
			? `<polyline points="${line}" fill="none" stroke="#2f6fed" stroke-width="2"/>`
			: "",
		"</svg>",
	].join("");
}
