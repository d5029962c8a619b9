import { ExplorerState } from "./state.js";
import { Tree, XY } from "./types.js";
import { Viewport } from "./view.js";

const TREE_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

export interface RenderSummary {
  treesDrawn: number;
  runnerUpDrawn: boolean;
  markerDrawn: boolean;
}

/**
 * Draw the scene; with a null context (headless tests) the summary is still
 * computed so callers can assert what would be shown.
 */
export function render(
  ctx: CanvasRenderingContext2D | null,
  view: Viewport,
  state: ExplorerState,
): RenderSummary {
  const summary: RenderSummary = {
    treesDrawn: 0,
    runnerUpDrawn: false,
    markerDrawn: false,
  };
  if (ctx) {
    ctx.clearRect(0, 0, view.width, view.height);
    drawGrid(ctx, view);
  }
  const solve = state.lastSolve;
  if (solve) {
    solve.minimal.forEach((tree, k) => {
      drawTree(ctx, view, tree, TREE_COLORS[k % TREE_COLORS.length], false);
      summary.treesDrawn += 1;
    });
    if (state.showRunnerUp && solve.candidates.length > solve.minimal.length) {
      drawTree(ctx, view, solve.candidates[solve.minimal.length], "#999999", true);
      summary.runnerUpDrawn = true;
    }
    if (state.showDirections && ctx) {
      for (const tree of solve.minimal) drawDirections(ctx, view, tree);
    }
  }
  if (ctx) {
    state.points.forEach((p, i) => drawTerminal(ctx, view, p, String(i + 1)));
  }
  if (state.wallMarker) {
    summary.markerDrawn = true;
    if (ctx) {
      for (const p of state.wallMarker.hit.config) {
        const [sx, sy] = view.worldToScreen(p as XY);
        ctx.strokeStyle = "#e6a400";
        ctx.lineWidth = 2;
        ctx.strokeRect(sx - 5, sy - 5, 10, 10);
      }
    }
  }
  return summary;
}

function drawGrid(ctx: CanvasRenderingContext2D, view: Viewport): void {
  ctx.strokeStyle = "#eeeeee";
  ctx.lineWidth = 1;
  for (let x = Math.ceil(view.worldX); x <= view.worldX + view.worldSpan; x++) {
    const [sx] = view.worldToScreen([x, 0]);
    ctx.beginPath();
    ctx.moveTo(sx, 0);
    ctx.lineTo(sx, view.height);
    ctx.stroke();
  }
  for (let y = Math.ceil(view.worldY); y <= view.worldY + view.worldSpan; y++) {
    const [, sy] = view.worldToScreen([0, y]);
    ctx.beginPath();
    ctx.moveTo(0, sy);
    ctx.lineTo(view.width, sy);
    ctx.stroke();
  }
}

function drawTree(
  ctx: CanvasRenderingContext2D | null,
  view: Viewport,
  tree: Tree,
  color: string,
  dashed: boolean,
): void {
  if (!ctx) return;
  ctx.strokeStyle = color;
  ctx.lineWidth = 2;
  ctx.setLineDash(dashed ? [6, 4] : []);
  for (const [a, b] of tree.type.edges) {
    const pa = tree.positions[String(a)];
    const pb = tree.positions[String(b)];
    if (!pa || !pb) continue;
    const [ax, ay] = view.worldToScreen(pa);
    const [bx, by] = view.worldToScreen(pb);
    ctx.beginPath();
    ctx.moveTo(ax, ay);
    ctx.lineTo(bx, by);
    ctx.stroke();
  }
  ctx.setLineDash([]);
}

function drawDirections(
  ctx: CanvasRenderingContext2D,
  view: Viewport,
  tree: Tree,
): void {
  if (!tree.directions) return;
  ctx.strokeStyle = "#444444";
  ctx.lineWidth = 1.5;
  for (const [tid, dirs] of Object.entries(tree.directions)) {
    const p = tree.positions[tid];
    if (!p) continue;
    const [sx, sy] = view.worldToScreen(p);
    for (const [dx, dy] of dirs) {
      ctx.beginPath();
      ctx.moveTo(sx, sy);
      ctx.lineTo(sx + 18 * dx, sy - 18 * dy);
      ctx.stroke();
    }
  }
}

function drawTerminal(
  ctx: CanvasRenderingContext2D,
  view: Viewport,
  p: XY,
  label: string,
): void {
  const [sx, sy] = view.worldToScreen(p);
  ctx.fillStyle = "#111111";
  ctx.beginPath();
  ctx.arc(sx, sy, 5, 0, 2 * Math.PI);
  ctx.fill();
  ctx.font = "12px sans-serif";
  ctx.fillText(label, sx + 7, sy - 7);
}
