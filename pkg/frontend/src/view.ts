import { XY } from "./types.js";

// Fixed initial world viewport [-1, 3]^2 with pan/zoom on top; the canvas
// only ever receives world coordinates through this mapping.
export class Viewport {
  worldX = -1;
  worldY = -1;
  worldSpan = 4;

  constructor(
    public width: number,
    public height: number,
  ) {}

  get scale(): number {
    return Math.min(this.width, this.height) / this.worldSpan;
  }

  worldToScreen([x, y]: XY): XY {
    // world y grows upward, screen y downward
    return [(x - this.worldX) * this.scale, this.height - (y - this.worldY) * this.scale];
  }

  screenToWorld([sx, sy]: XY): XY {
    return [sx / this.scale + this.worldX, (this.height - sy) / this.scale + this.worldY];
  }

  pan(dxScreen: number, dyScreen: number): void {
    this.worldX -= dxScreen / this.scale;
    this.worldY += dyScreen / this.scale;
  }

  zoomAt(screen: XY, factor: number): void {
    const anchor = this.screenToWorld(screen);
    this.worldSpan /= factor;
    // keep the anchor point under the cursor
    const after = this.screenToWorld(screen);
    this.worldX += anchor[0] - after[0];
    this.worldY += anchor[1] - after[1];
  }
}
