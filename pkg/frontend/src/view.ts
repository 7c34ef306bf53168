// SVG rendering for triangular boards. DOM-only code lives here and in
// main.ts; game rules stay in game.ts so they can be tested headlessly.

import { buttonCount, rowPosition } from "./game.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export const COLORS = {
  lit: "#ffd75e",
  off: "#2b2f36",
  stroke: "#11141a",
  hint: "#e4572e",
  overlay: "#4f9cf9",
  separator: "#3a3f47",
  blocks: ["#7bd389", "#f49ac1", "#8ecae6", "#ffb703", "#c39bd3", "#f4a261"],
} as const;

export interface BoardView {
  svg: SVGSVGElement;
  circles: Map<number, SVGCircleElement>;
}

/** Build the triangle of circles for a size-n board. */
export function createBoardView(
  n: number,
  width: number,
  onPress?: (id: number) => void,
): BoardView {
  const beta = buttonCount(n);
  const unit = Math.min(44, (width - 20) / Math.max(n, 1));
  const radius = unit * 0.42;
  const rowStep = unit * 0.9;
  const height = rowStep * (n - 1) + unit + 10;

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("width", String(width));
  svg.classList.add("board");

  const circles = new Map<number, SVGCircleElement>();
  for (let id = 1; id <= beta; id += 1) {
    const { row, pos } = rowPosition(id);
    const cx = width / 2 + (pos - 1 - (row - 1) / 2) * unit;
    const cy = unit / 2 + 5 + (row - 1) * rowStep;
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(cx));
    circle.setAttribute("cy", String(cy));
    circle.setAttribute("r", String(radius));
    circle.setAttribute("fill", COLORS.off);
    circle.setAttribute("stroke", COLORS.stroke);
    circle.setAttribute("stroke-width", "2");
    circle.dataset.button = String(id);
    if (onPress) {
      circle.classList.add("pressable");
      circle.addEventListener("click", () => onPress(id));
    }
    svg.appendChild(circle);
    circles.set(id, circle);
  }
  return { svg, circles };
}

/** Repaint fills from the lit array (index i-1 is button i). */
export function paintLights(view: BoardView, lit: readonly boolean[]): void {
  for (const [id, circle] of view.circles) {
    circle.setAttribute("fill", lit[id - 1] ? COLORS.lit : COLORS.off);
  }
}

/** Strong ring around at most one button (the current hint); null clears. */
export function paintHint(view: BoardView, button: number | null): void {
  for (const [id, circle] of view.circles) {
    if (id === button) {
      circle.setAttribute("stroke", COLORS.hint);
      circle.setAttribute("stroke-width", "4");
    } else {
      circle.setAttribute("stroke", COLORS.stroke);
      circle.setAttribute("stroke-width", "2");
    }
  }
}

/** Translucent halo over the support of a kernel element; null clears. */
export function paintOverlay(view: BoardView, mask: readonly boolean[] | null): void {
  for (const [id, circle] of view.circles) {
    if (mask && mask[id - 1]) {
      circle.setAttribute("stroke", COLORS.overlay);
      circle.setAttribute("stroke-width", "4");
      circle.setAttribute("stroke-dasharray", "4 2");
    } else {
      circle.setAttribute("stroke", COLORS.stroke);
      circle.setAttribute("stroke-width", "2");
      circle.removeAttribute("stroke-dasharray");
    }
  }
}

/**
 * Color a grown board by its block layout: each block keeps one hue,
 * separator cells go grey, lit cells of the grown element stay bright.
 */
export function paintLayout(
  view: BoardView,
  blocks: { cells: number[] }[],
  separator: number[],
  lit: readonly boolean[],
): void {
  for (const cell of separator) {
    const circle = view.circles.get(cell);
    if (circle) {
      circle.setAttribute("fill", COLORS.separator);
    }
  }
  blocks.forEach((block, index) => {
    const hue = COLORS.blocks[index % COLORS.blocks.length] ?? COLORS.off;
    for (const cell of block.cells) {
      const circle = view.circles.get(cell);
      if (circle) {
        circle.setAttribute("fill", lit[cell - 1] ? COLORS.lit : hue);
        circle.setAttribute("stroke", lit[cell - 1] ? COLORS.hint : COLORS.stroke);
      }
    }
  });
}
