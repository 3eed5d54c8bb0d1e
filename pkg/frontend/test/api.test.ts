import { describe, expect, it, vi } from "vitest";

import { SequenceGate, debounce } from "../src/api";

describe("SequenceGate", () => {
  it("accepts responses arriving in order", () => {
    const gate = new SequenceGate();
    const a = gate.next();
    const b = gate.next();
    expect(gate.accept(a)).toBe(true);
    expect(gate.accept(b)).toBe(true);
  });

  it("discards a stale response that arrives after a newer one", () => {
    const gate = new SequenceGate();
    const first = gate.next();
    const second = gate.next();
    expect(gate.accept(second)).toBe(true);
    expect(gate.accept(first)).toBe(false);
  });
});

describe("debounce", () => {
  it("fires once per burst with the last arguments", () => {
    vi.useFakeTimers();
    const calls: number[] = [];
    const fn = debounce((n: number) => calls.push(n), 200);
    fn(1);
    fn(2);
    fn(3);
    vi.advanceTimersByTime(199);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(1);
    expect(calls).toEqual([3]);
    vi.useRealTimers();
  });
});
