// New-game form logic: turn family/weights/side/policy picks into the
// POST /api/session payload.

import type { EnginePolicy, NewSessionRequest, Side } from "./api.js";

export type Family = "path" | "cycle" | "spiked" | "graph6";

export interface NewGameForm {
  family: Family;
  n: number;
  graph6: string;
  weightBits: string;
  prop8: boolean;
  side: Side;
  policy: EnginePolicy;
}

export function familyGraph(family: Family, n: number): { n: number; edges: [number, number][] } {
  if (family === "path") {
    if (n < 1) throw new Error("a path needs at least 1 vertex");
    const edges: [number, number][] = [];
    for (let i = 0; i + 1 < n; i++) edges.push([i, i + 1]);
    return { n, edges };
  }
  if (family === "cycle") {
    if (n < 3) throw new Error("a cycle needs at least 3 vertices");
    const edges: [number, number][] = [];
    for (let i = 0; i < n; i++) edges.push([i, (i + 1) % n]);
    return { n, edges };
  }
  if (family === "spiked") {
    if (n < 3) throw new Error("a spiked cycle needs a cycle of length >= 3");
    const edges: [number, number][] = [];
    for (let i = 0; i < n; i++) edges.push([i, (i + 1) % n]);
    for (let i = 0; i < n; i++) edges.push([i, n + i]);
    return { n: 2 * n, edges };
  }
  throw new Error(`family ${family} has no generated graph`);
}

export function prop8Bits(cycleLength: number): string {
  if (cycleLength % 2 === 0) throw new Error("the adversarial preset needs an odd cycle");
  return "1".repeat(cycleLength) + "0".repeat(cycleLength);
}

export function buildSessionRequest(form: NewGameForm): NewSessionRequest {
  let vertexCount: number;
  let graphPart: Pick<NewSessionRequest, "graph6" | "n" | "edges">;
  if (form.family === "graph6") {
    const g6 = form.graph6.trim();
    if (!g6) throw new Error("enter a graph6 line");
    const first = g6.charCodeAt(0);
    if (first < 63 || first > 125) throw new Error("not a short-form graph6 line");
    vertexCount = first - 63;
    graphPart = { graph6: g6 };
  } else {
    const { n, edges } = familyGraph(form.family, form.n);
    vertexCount = n;
    graphPart = { n, edges };
  }
  const bits = form.prop8 && form.family === "spiked" ? prop8Bits(form.n) : form.weightBits.trim();
  if (bits.length !== vertexCount || /[^01]/.test(bits)) {
    throw new Error(`weights must be ${vertexCount} characters of 0/1`);
  }
  return {
    ...graphPart,
    weights: [...bits].map(Number),
    human_side: form.side,
    engine_policy: form.policy,
  };
}
