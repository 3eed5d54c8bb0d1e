import { describe, expect, it } from "vitest";

import { barChart, lineChart, linearScale, niceMax, pathFrom } from "../src/charts";

describe("linearScale", () => {
  it("maps the domain endpoints onto the range", () => {
    const scale = linearScale([0, 10], [100, 0]);
    expect(scale(0)).toBe(100);
    expect(scale(10)).toBe(0);
    expect(scale(5)).toBe(50);
  });

  it("degenerate domain maps to the range midpoint", () => {
    const scale = linearScale([3, 3], [0, 100]);
    expect(scale(3)).toBe(50);
  });
});

describe("niceMax", () => {
  it("rounds up to a tidy axis bound", () => {
    expect(niceMax(7.3)).toBe(10);
    expect(niceMax(430)).toBe(500);
    expect(niceMax(1800)).toBe(2000);
    expect(niceMax(96)).toBe(100);
  });

  it("handles non-positive input", () => {
    expect(niceMax(0)).toBe(1);
  });
});

describe("pathFrom", () => {
  it("emits a move followed by lines", () => {
    const x = linearScale([0, 1], [0, 100]);
    const y = linearScale([0, 1], [100, 0]);
    const d = pathFrom(
      [
        [0, 0],
        [0.5, 0.5],
        [1, 1],
      ],
      x,
      y,
    );
    expect(d).toBe("M0.0,100.0L50.0,50.0L100.0,0.0");
  });
});

describe("barChart", () => {
  const groups = [
    {
      label: "usa",
      bars: [
        { label: "now", value: 2700 },
        { label: "2030", value: 1232, lo: 900, hi: 1673 },
      ],
    },
  ];

  it("renders one rect per bar with titles", () => {
    const svg = barChart(groups);
    expect(svg.match(/<rect /g)?.length).toBe(2);
    expect(svg).toContain("<title>now: 2700</title>");
  });

  it("draws a whisker only where an envelope exists", () => {
    const svg = barChart(groups);
    expect(svg.match(/class="whisker"/g)?.length).toBe(1);
  });

  it("taller values get smaller y coordinates", () => {
    const svg = barChart(groups, { maxValue: 3000, height: 320 });
    const ys = [...svg.matchAll(/<rect x="[\d.]+" y="([\d.]+)"/g)].map((m) => Number(m[1]));
    expect(ys[0]).toBeLessThan(ys[1]); // 2700 sits above 1232
  });
});

describe("lineChart", () => {
  it("renders one path per series, dashed when asked", () => {
    const svg = lineChart([
      { label: "a", points: [[0, 1], [1, 2]] },
      { label: "b", points: [[0, 2], [1, 3]], dashed: true },
    ]);
    expect(svg.match(/<path /g)?.length).toBe(2);
    expect(svg.match(/stroke-dasharray/g)?.length).toBe(1);
  });

  it("escapes labels", () => {
    const svg = lineChart([{ label: "a<b", points: [[0, 1], [1, 2]] }]);
    expect(svg).toContain("a&lt;b");
    expect(svg).not.toContain("a<b</");
  });

  it("tolerates an empty series list", () => {
    expect(lineChart([])).toContain("<svg");
  });
});
