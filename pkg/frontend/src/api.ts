/**
 * Service client: debounced, sequence-numbered requests so a slow older
 * response can never overwrite a newer one.
 */

import { BaseConfig, ControlState, buildOverrides } from "./state.js";

export interface FieldError {
  field: string;
  message: string;
}

export type ProjectResult =
  | { kind: "ok"; body: any }
  | { kind: "invalid"; errors: FieldError[] }
  | { kind: "failed"; message: string };

export class SequenceGate {
  private issued = 0;
  private accepted = 0;

  next(): number {
    this.issued += 1;
    return this.issued;
  }

  /** True iff this response is newer than every response shown so far. */
  accept(seq: number): boolean {
    if (seq <= this.accepted) return false;
    this.accepted = seq;
    return true;
  }
}

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number,
): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => fn(...args), waitMs);
  };
}

export async function fetchBaseConfig(apiRoot: string): Promise<BaseConfig> {
  const response = await fetch(`${apiRoot}/api/project`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify({ base: "base-2030", sections: ["electrolysis"] }),
  });
  if (!response.ok) throw new Error(`service unavailable (${response.status})`);
  const body = await response.json();
  return body.effective_config as BaseConfig;
}

export async function project(
  apiRoot: string,
  state: ControlState,
  base: BaseConfig,
): Promise<ProjectResult> {
  let response: Response;
  try {
    response = await fetch(`${apiRoot}/api/project`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ base: "base-2030", overrides: buildOverrides(state, base) }),
    });
  } catch (err) {
    return { kind: "failed", message: String(err) };
  }
  if (response.status === 422) {
    const body = await response.json();
    const detail = Array.isArray(body.detail) ? body.detail : [];
    return {
      kind: "invalid",
      errors: detail.map((d: any) => ({
        field: String(d.field ?? ""),
        message: String(d.message ?? d.msg ?? "invalid value"),
      })),
    };
  }
  if (!response.ok) return { kind: "failed", message: `HTTP ${response.status}` };
  return { kind: "ok", body: await response.json() };
}
