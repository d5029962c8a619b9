import { SolveResponse, WallHit, XY, winnerKey } from "./types.js";

export interface RecordedEntry {
  points: XY[];
  winner: string;
}

export interface ExplorerState {
  points: XY[];
  lastSolve: SolveResponse | null;
  recordedPath: RecordedEntry[];
  wallMarker: { hit: WallHit } | null;
  showRunnerUp: boolean;
  showDirections: boolean;
}

export function initialState(): ExplorerState {
  return {
    points: presetSquare(),
    lastSolve: null,
    recordedPath: [],
    wallMarker: null,
    showRunnerUp: true,
    showDirections: false,
  };
}

export function presetSquare(): XY[] {
  return [
    [0, 0],
    [1, 0],
    [1, 1],
    [0, 1],
  ];
}

export function presetRect(w: number, h: number): XY[] {
  return [
    [0, 0],
    [w, 0],
    [w, h],
    [0, h],
  ];
}

/**
 * Move a terminal, refusing positions that would coincide with another
 * terminal (closer than minSeparation, measured in the caller's units).
 * Returns false when the move was rejected; callers skip the re-solve then.
 */
export function movePoint(
  state: ExplorerState,
  index: number,
  to: XY,
  minSeparation: number,
): boolean {
  if (index < 0 || index >= state.points.length) {
    throw new RangeError(`no point ${index}`);
  }
  for (let i = 0; i < state.points.length; i++) {
    if (i === index) continue;
    const [px, py] = state.points[i];
    if (Math.hypot(px - to[0], py - to[1]) < minSeparation) {
      return false;
    }
  }
  state.points[index] = [to[0], to[1]];
  return true;
}

export function recordConfiguration(state: ExplorerState): boolean {
  if (!state.lastSolve) return false;
  state.recordedPath.push({
    points: state.points.map((p) => [p[0], p[1]] as XY),
    winner: winnerKey(state.lastSolve),
  });
  return true;
}

export function canBisect(state: ExplorerState): boolean {
  return state.recordedPath.length >= 2;
}

export function lastTwoRecorded(state: ExplorerState): [RecordedEntry, RecordedEntry] {
  const n = state.recordedPath.length;
  return [state.recordedPath[n - 2], state.recordedPath[n - 1]];
}
