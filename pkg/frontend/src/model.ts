// Board view-model: layout, per-vertex status, banner text, analysis overlay.
// Pure presentation over API payloads; no game rules are evaluated here.

import type { AnalysisEntry, GameStateDto, Side } from "./api.js";

export type VertexStatus = "legal" | "cut" | "taken-alice" | "taken-bob";

export interface Point {
  x: number;
  y: number;
}

export interface VertexView extends Point {
  id: number;
  weight: number;
  status: VertexStatus;
  analysisValue: number | null;
  best: boolean;
}

export interface EdgeView {
  from: Point;
  to: Point;
  faded: boolean;
}

export interface BoardViewModel {
  vertices: VertexView[];
  edges: EdgeView[];
  scores: { alice: number; bob: number };
  banner: string;
  yourTurn: boolean;
  gameOver: boolean;
  positionValue: number | null;
  bestVertices: number[];
}

function edgeKey(u: number, v: number): string {
  return u < v ? `${u}-${v}` : `${v}-${u}`;
}

/** Cycle length m when the graph is exactly the canonical spiked m-cycle
 * (ring 0..m-1 plus pendant m+i on i), else null. */
export function detectSpikedCycle(n: number, edges: [number, number][]): number | null {
  if (n < 6 || n % 2 !== 0) return null;
  const m = n / 2;
  if (edges.length !== n) return null;
  const want = new Set<string>();
  for (let i = 0; i < m; i++) {
    want.add(edgeKey(i, (i + 1) % m));
    want.add(edgeKey(i, m + i));
  }
  const got = new Set(edges.map(([u, v]) => edgeKey(u, v)));
  if (got.size !== want.size) return null;
  for (const e of want) if (!got.has(e)) return null;
  return m;
}

/** Circular layout: spiked cycles put the ring inside and each pendant
 * radially outside its cycle vertex; everything else sits on one circle. */
export function layoutVertices(n: number, edges: [number, number][], size = 420): Point[] {
  const cx = size / 2;
  const cy = size / 2;
  const m = detectSpikedCycle(n, edges);
  const out: Point[] = [];
  if (m !== null) {
    const rCycle = size * 0.27;
    const rLeaf = size * 0.42;
    for (let v = 0; v < n; v++) {
      const i = v < m ? v : v - m;
      const angle = (2 * Math.PI * i) / m - Math.PI / 2;
      const r = v < m ? rCycle : rLeaf;
      out.push({ x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
    }
    return out;
  }
  const r = n === 1 ? 0 : size * 0.4;
  for (let v = 0; v < n; v++) {
    const angle = (2 * Math.PI * v) / n - Math.PI / 2;
    out.push({ x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  }
  return out;
}

function capitalize(side: Side): string {
  return side === "alice" ? "Alice" : "Bob";
}

/** Game-over banner, e.g. "Bob wins by 1". Winner comes from the API. */
export function winnerBanner(state: GameStateDto): string {
  const margin = Math.abs(state.scores.alice - state.scores.bob);
  const winner = state.winner ?? "alice";
  return `${capitalize(winner)} wins by ${margin}`;
}

export function turnBanner(state: GameStateDto, humanSide: Side): string {
  if (state.game_over) return winnerBanner(state);
  return state.to_move === humanSide
    ? `Your turn (${humanSide})`
    : `Engine is thinking (${state.to_move ?? "?"})`;
}

export function buildBoardViewModel(
  state: GameStateDto,
  humanSide: Side,
  analysis: AnalysisEntry[] | null,
  size = 420,
): BoardViewModel {
  const pos = layoutVertices(state.n, state.edges, size);
  const takenBy = new Map<number, Side>();
  for (const t of state.transcript) takenBy.set(t.vertex, t.side);
  const remaining = new Set(state.remaining);
  const legal = new Set(state.legal_moves);

  const values = new Map<number, number>();
  if (analysis) for (const a of analysis) values.set(a.vertex, a.value_after_move);
  const bestValue = values.size ? Math.max(...values.values()) : null;
  const bestVertices =
    bestValue === null ? [] : [...values.entries()].filter(([, v]) => v === bestValue).map(([v]) => v);

  const vertices: VertexView[] = [];
  for (let v = 0; v < state.n; v++) {
    let status: VertexStatus;
    if (!remaining.has(v)) {
      status = takenBy.get(v) === "bob" ? "taken-bob" : "taken-alice";
    } else {
      status = legal.has(v) ? "legal" : "cut";
    }
    const p = pos[v];
    if (!p) throw new Error(`no layout slot for vertex ${v}`);
    vertices.push({
      id: v,
      x: p.x,
      y: p.y,
      weight: state.weights[v] ?? 0,
      status,
      analysisValue: values.get(v) ?? null,
      best: bestVertices.includes(v),
    });
  }

  const edges: EdgeView[] = state.edges.map(([u, v]) => {
    const a = pos[u];
    const b = pos[v];
    if (!a || !b) throw new Error(`edge (${u}, ${v}) outside the layout`);
    return { from: a, to: b, faded: !(remaining.has(u) && remaining.has(v)) };
  });

  return {
    vertices,
    edges,
    scores: state.scores,
    banner: turnBanner(state, humanSide),
    yourTurn: !state.game_over && state.to_move === humanSide,
    gameOver: state.game_over,
    positionValue: bestValue,
    bestVertices,
  };
}
