/**
 * Hand-rolled SVG chart builders. Pure string-in string-out functions so
 * the geometry is unit-testable; the app assigns the result to innerHTML.
 */

export interface Scale {
  (value: number): number;
  domain: [number, number];
  range: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0;
  const fn = ((value: number) =>
    span === 0 ? (r0 + r1) / 2 : r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  fn.domain = domain;
  fn.range = range;
  return fn;
}

export function niceMax(value: number): number {
  if (value <= 0) return 1;
  const magnitude = 10 ** Math.floor(Math.log10(value));
  for (const m of [1, 2, 2.5, 5, 10]) {
    if (value <= m * magnitude) return m * magnitude;
  }
  return 10 * magnitude;
}

const esc = (s: string) => s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
const fmt = (n: number) => String(Math.round(n * 100) / 100);

export interface Bar {
  label: string;
  value: number;
  /** optional whisker envelope */
  lo?: number;
  hi?: number;
  color?: string;
}

export interface BarGroup {
  label: string;
  bars: Bar[];
}

export interface ChartOptions {
  width?: number;
  height?: number;
  unit?: string;
  maxValue?: number;
}

const MARGIN = { top: 16, right: 12, bottom: 44, left: 56 };

function frame(width: number, height: number, yScale: Scale, unit: string): string {
  const [lo, hi] = yScale.domain;
  const ticks = [lo, lo + (hi - lo) / 2, hi];
  const lines = ticks
    .map((t) => {
      const y = yScale(t);
      return (
        `<line x1="${MARGIN.left}" y1="${y}" x2="${width - MARGIN.right}" y2="${y}" class="grid"/>` +
        `<text x="${MARGIN.left - 6}" y="${y + 4}" class="tick" text-anchor="end">${fmt(t)}</text>`
      );
    })
    .join("");
  const label = `<text x="${MARGIN.left}" y="12" class="unit">${esc(unit)}</text>`;
  return lines + label;
}

export function barChart(groups: BarGroup[], options: ChartOptions = {}): string {
  const width = options.width ?? 720;
  const height = options.height ?? 320;
  const values = groups.flatMap((g) => g.bars.flatMap((b) => [b.value, b.hi ?? b.value]));
  const top = options.maxValue ?? niceMax(Math.max(...values, 0));
  const y = linearScale([0, top], [height - MARGIN.bottom, MARGIN.top]);
  const innerWidth = width - MARGIN.left - MARGIN.right;
  const groupWidth = innerWidth / Math.max(groups.length, 1);
  const parts: string[] = [frame(width, height, y, options.unit ?? "")];
  groups.forEach((group, gi) => {
    const x0 = MARGIN.left + gi * groupWidth;
    const barWidth = (groupWidth * 0.8) / Math.max(group.bars.length, 1);
    group.bars.forEach((bar, bi) => {
      const x = x0 + groupWidth * 0.1 + bi * barWidth;
      const yTop = y(bar.value);
      const h = y(0) - yTop;
      parts.push(
        `<rect x="${x.toFixed(1)}" y="${yTop.toFixed(1)}" width="${(barWidth * 0.9).toFixed(1)}" ` +
          `height="${Math.max(h, 0).toFixed(1)}" fill="${bar.color ?? "#4a7fb5"}">` +
          `<title>${esc(bar.label)}: ${fmt(bar.value)}</title></rect>`,
      );
      if (bar.lo !== undefined && bar.hi !== undefined && bar.hi > bar.lo) {
        const cx = x + barWidth * 0.45;
        parts.push(
          `<line x1="${cx.toFixed(1)}" y1="${y(bar.lo).toFixed(1)}" ` +
            `x2="${cx.toFixed(1)}" y2="${y(bar.hi).toFixed(1)}" class="whisker"/>`,
        );
      }
    });
    parts.push(
      `<text x="${(x0 + groupWidth / 2).toFixed(1)}" y="${height - MARGIN.bottom + 16}" ` +
        `class="axis" text-anchor="middle">${esc(group.label)}</text>`,
    );
  });
  return `<svg viewBox="0 0 ${width} ${height}" role="img">${parts.join("")}</svg>`;
}

export interface Series {
  label: string;
  points: Array<[number, number]>;
  color?: string;
  dashed?: boolean;
}

export function pathFrom(points: Array<[number, number]>, x: Scale, y: Scale): string {
  return points
    .map(([px, py], i) => `${i === 0 ? "M" : "L"}${x(px).toFixed(1)},${y(py).toFixed(1)}`)
    .join("");
}

export function lineChart(
  series: Series[],
  options: ChartOptions & { xUnit?: string; logY?: boolean } = {},
): string {
  const width = options.width ?? 720;
  const height = options.height ?? 320;
  const pts = series.flatMap((s) => s.points);
  if (pts.length === 0) return `<svg viewBox="0 0 ${width} ${height}"></svg>`;
  const xs = pts.map((p) => p[0]);
  const ys = pts.map((p) => p[1]);
  const x = linearScale([Math.min(...xs), Math.max(...xs)], [MARGIN.left, width - MARGIN.right]);
  const yTop = options.maxValue ?? niceMax(Math.max(...ys));
  const yLo = Math.min(0, Math.min(...ys));
  const y = linearScale([yLo, yTop], [height - MARGIN.bottom, MARGIN.top]);
  const parts: string[] = [frame(width, height, y, options.unit ?? "")];
  for (const s of series) {
    parts.push(
      `<path d="${pathFrom(s.points, x, y)}" fill="none" stroke="${s.color ?? "#4a7fb5"}" ` +
        `stroke-width="2"${s.dashed ? ' stroke-dasharray="6 4"' : ""}>` +
        `<title>${esc(s.label)}</title></path>`,
    );
  }
  const [xlo, xhi] = x.domain;
  for (const t of [xlo, (xlo + xhi) / 2, xhi]) {
    parts.push(
      `<text x="${x(t).toFixed(1)}" y="${height - MARGIN.bottom + 16}" class="tick" ` +
        `text-anchor="middle">${fmt(t)}</text>`,
    );
  }
  if (options.xUnit) {
    parts.push(
      `<text x="${(width / 2).toFixed(1)}" y="${height - 8}" class="unit" ` +
        `text-anchor="middle">${esc(options.xUnit)}</text>`,
    );
  }
  const legend = series
    .map(
      (s, i) =>
        `<text x="${width - MARGIN.right - 8}" y="${MARGIN.top + 14 * (i + 1)}" class="legend" ` +
        `text-anchor="end" fill="${s.color ?? "#4a7fb5"}">${esc(s.label)}</text>`,
    )
    .join("");
  return `<svg viewBox="0 0 ${width} ${height}" role="img">${parts.join("")}${legend}</svg>`;
}
