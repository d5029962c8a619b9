import { ApiClient } from "./client.js";
import { debounce, Debounced } from "./debounce.js";
import { render, RenderSummary } from "./render.js";
import {
  canBisect,
  ExplorerState,
  initialState,
  lastTwoRecorded,
  movePoint,
  presetRect,
  presetSquare,
  recordConfiguration,
} from "./state.js";
import { XY } from "./types.js";
import { Viewport } from "./view.js";

const CANVAS_SIZE = 640;
const HIT_RADIUS_PX = 12;
const MIN_SEPARATION_PX = 1e-6; // screen-space coincidence snap threshold

export interface ExplorerApp {
  state: ExplorerState;
  view: Viewport;
  client: ApiClient;
  canvas: HTMLCanvasElement;
  banner: HTMLElement;
  gapLabel: HTMLElement;
  toast: HTMLElement;
  noWallBadge: HTMLElement;
  wallLabel: HTMLElement;
  bisectButton: HTMLButtonElement;
  lastRender: RenderSummary;
  solveLater: Debounced<[]>;
  solveNow: () => Promise<void>;
  bisect: () => Promise<void>;
  record: () => void;
  loadPoints: (points: XY[]) => Promise<void>;
  idle: () => Promise<void>;
  dispose: () => void;
}

function el(doc: Document, tag: string, id: string, text = ""): HTMLElement {
  const node = doc.createElement(tag);
  node.id = id;
  node.textContent = text;
  node.style.display = tag === "button" ? "" : "none";
  return node;
}

export function createExplorerApp(
  doc: Document,
  baseUrl: string,
  root?: HTMLElement,
): ExplorerApp {
  const host = root ?? doc.body;
  const canvas = doc.createElement("canvas") as HTMLCanvasElement;
  canvas.id = "explorer-canvas";
  canvas.width = CANVAS_SIZE;
  canvas.height = CANVAS_SIZE;
  host.appendChild(canvas);

  const banner = el(doc, "div", "ambiguity-banner", "AMBIGUOUS: several minimal trees");
  const gapLabel = el(doc, "div", "gap-label");
  const toast = el(doc, "div", "toast");
  const noWallBadge = el(doc, "div", "nowall-badge", "no wall between recordings");
  const wallLabel = el(doc, "div", "wall-label");
  for (const node of [banner, gapLabel, toast, noWallBadge, wallLabel]) {
    host.appendChild(node);
  }
  const presetSquareBtn = el(doc, "button", "preset-square", "square") as HTMLButtonElement;
  const recordBtn = el(doc, "button", "record", "record") as HTMLButtonElement;
  const bisectBtn = el(doc, "button", "bisect", "record & bisect") as HTMLButtonElement;
  const runnerUpBtn = el(doc, "button", "toggle-runner-up", "runner-up: on") as HTMLButtonElement;
  const dirsBtn = el(doc, "button", "toggle-directions", "arrows: off") as HTMLButtonElement;
  bisectBtn.disabled = true;
  for (const node of [presetSquareBtn, recordBtn, bisectBtn, runnerUpBtn, dirsBtn]) {
    host.appendChild(node);
  }

  const state = initialState();
  const view = new Viewport(canvas.width, canvas.height);
  const client = new ApiClient(baseUrl);
  let ctx: CanvasRenderingContext2D | null = null;
  try {
    ctx = canvas.getContext("2d");
  } catch {
    ctx = null; // headless DOM without a canvas backend
  }

  let busy = 0;
  const app: ExplorerApp = {
    state,
    view,
    client,
    canvas,
    banner,
    gapLabel,
    toast,
    noWallBadge,
    wallLabel,
    bisectButton: bisectBtn,
    lastRender: { treesDrawn: 0, runnerUpDrawn: false, markerDrawn: false },
    solveLater: undefined as unknown as Debounced<[]>,
    solveNow,
    bisect,
    record,
    loadPoints,
    idle,
    dispose,
  };

  function redraw(): void {
    app.lastRender = render(ctx, view, state);
  }

  function showToast(message: string): void {
    toast.textContent = message;
    toast.style.display = "";
  }

  async function solveNow(): Promise<void> {
    busy += 1;
    try {
      const resp = await client.solve(state.points);
      state.lastSolve = resp;
      toast.style.display = "none";
      banner.style.display = resp.ambiguous ? "" : "none";
      if (resp.runner_up_gap !== null) {
        gapLabel.textContent = `runner-up gap: ${resp.runner_up_gap.toFixed(9)}`;
        gapLabel.style.display = "";
      } else {
        gapLabel.style.display = "none";
      }
      redraw();
    } catch (err) {
      if ((err as Error).name === "AbortError") return;
      // keep the last good solve on screen, surface the failure
      showToast(`solve failed: ${(err as Error).message}`);
    } finally {
      busy -= 1;
    }
  }

  app.solveLater = debounce(() => {
    void solveNow();
  }, 50);

  async function loadPoints(points: XY[]): Promise<void> {
    state.points = points.map((p) => [p[0], p[1]] as XY);
    redraw();
    await solveNow();
  }

  function record(): void {
    if (recordConfiguration(state)) {
      bisectBtn.disabled = !canBisect(state);
    }
  }

  async function bisect(): Promise<void> {
    if (!canBisect(state)) return;
    busy += 1;
    try {
      const [a, b] = lastTwoRecorded(state);
      const resp = await client.wall(a.points, b.points);
      if ("noWall" in resp) {
        noWallBadge.style.display = "";
        state.wallMarker = null;
      } else {
        noWallBadge.style.display = "none";
        state.wallMarker = { hit: resp };
        wallLabel.textContent = `wall at t*=${resp.t_star.toFixed(6)}`;
        wallLabel.style.display = "";
      }
      redraw();
    } catch (err) {
      showToast(`wall failed: ${(err as Error).message}`);
    } finally {
      busy -= 1;
    }
  }

  async function idle(): Promise<void> {
    while (busy > 0 || app.solveLater.pending()) {
      await new Promise((r) => setTimeout(r, 5));
    }
  }

  // --- pointer handling -----------------------------------------------

  let dragging = -1;
  let panning: XY | null = null;

  function canvasXY(ev: MouseEvent): XY {
    const rect = canvas.getBoundingClientRect();
    return [ev.clientX - rect.left, ev.clientY - rect.top];
  }

  function hitTest(screen: XY): number {
    for (let i = 0; i < state.points.length; i++) {
      const [sx, sy] = view.worldToScreen(state.points[i]);
      if (Math.hypot(sx - screen[0], sy - screen[1]) <= HIT_RADIUS_PX) return i;
    }
    return -1;
  }

  function onMouseDown(ev: MouseEvent): void {
    const at = canvasXY(ev);
    if (ev.shiftKey || ev.button === 2) {
      panning = at;
      return;
    }
    dragging = hitTest(at);
    if (dragging < 0 && state.wallMarker) {
      for (const p of state.wallMarker.hit.config) {
        const [sx, sy] = view.worldToScreen(p as XY);
        if (Math.hypot(sx - at[0], sy - at[1]) <= HIT_RADIUS_PX) {
          void loadPoints(state.wallMarker.hit.config as XY[]);
          return;
        }
      }
    }
  }

  function onMouseMove(ev: MouseEvent): void {
    const at = canvasXY(ev);
    if (panning) {
      view.pan(at[0] - panning[0], at[1] - panning[1]);
      panning = at;
      redraw();
      return;
    }
    if (dragging < 0) return;
    const world = view.screenToWorld(at);
    const minSepWorld = MIN_SEPARATION_PX / view.scale;
    if (movePoint(state, dragging, world, minSepWorld)) {
      redraw();
      app.solveLater();
    }
  }

  function onMouseUp(): void {
    if (dragging >= 0) {
      app.solveLater.flush();
    }
    dragging = -1;
    panning = null;
  }

  function onWheel(ev: WheelEvent): void {
    ev.preventDefault();
    view.zoomAt(canvasXY(ev), ev.deltaY < 0 ? 1.15 : 1 / 1.15);
    redraw();
  }

  canvas.addEventListener("mousedown", onMouseDown);
  canvas.addEventListener("mousemove", onMouseMove);
  canvas.addEventListener("mouseup", onMouseUp);
  canvas.addEventListener("mouseleave", onMouseUp);
  canvas.addEventListener("wheel", onWheel);
  presetSquareBtn.addEventListener("click", () => void loadPoints(presetSquare()));
  recordBtn.addEventListener("click", record);
  bisectBtn.addEventListener("click", () => void bisect());
  runnerUpBtn.addEventListener("click", () => {
    state.showRunnerUp = !state.showRunnerUp;
    runnerUpBtn.textContent = `runner-up: ${state.showRunnerUp ? "on" : "off"}`;
    redraw();
  });
  dirsBtn.addEventListener("click", () => {
    state.showDirections = !state.showDirections;
    dirsBtn.textContent = `arrows: ${state.showDirections ? "on" : "off"}`;
    redraw();
  });

  function dispose(): void {
    app.solveLater.cancel();
    canvas.removeEventListener("mousedown", onMouseDown);
    canvas.removeEventListener("mousemove", onMouseMove);
    canvas.removeEventListener("mouseup", onMouseUp);
    canvas.removeEventListener("mouseleave", onMouseUp);
    canvas.removeEventListener("wheel", onWheel);
  }

  redraw();
  return app;
}

export { presetRect, presetSquare };
