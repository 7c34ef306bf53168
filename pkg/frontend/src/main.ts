// Interactive explorer wiring: controls, play board, kernel overlay,
// and the pattern-growth panel. All rules come from the HTTP API; the
// only local rule (single-press toggle) is cross-checked against
// /api/press after every click.

import { ApiClient, ApiError, type KernelInfo } from "./api.js";
import {
  applyClick,
  buttonCount,
  fromBitstring,
  isWon,
  litCount,
  newGame,
  toBitstring,
  type BoardInfo,
  type GameState,
} from "./game.js";
import {
  createBoardView,
  paintHint,
  paintLayout,
  paintLights,
  paintOverlay,
  type BoardView,
} from "./view.js";

const api = new ApiClient("");
const MAX_PLAY_SIZE = 30;
const MAX_GROWN_SIZE = 66;
const BOARD_WIDTH = 640;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

const sizeSelect = el<HTMLSelectElement>("size");
const newButton = el<HTMLButtonElement>("new-puzzle");
const seedInput = el<HTMLInputElement>("seed");
const hintButton = el<HTMLButtonElement>("hint");
const solveButton = el<HTMLButtonElement>("solve");
const overlaySelect = el<HTMLSelectElement>("overlay");
const statusLine = el<HTMLDivElement>("status");
const banner = el<HTMLDivElement>("banner");
const boardHost = el<HTMLDivElement>("board-host");
const kernelNote = el<HTMLDivElement>("kernel-note");
const growJ = el<HTMLSelectElement>("grow-j");
const growElement = el<HTMLSelectElement>("grow-element");
const growButton = el<HTMLButtonElement>("grow");
const grownHost = el<HTMLDivElement>("grown-host");
const grownNote = el<HTMLDivElement>("grown-note");

let board: BoardInfo = { n: 0, beta: 0, neighbors: [] };
let state: GameState = { n: 0, lit: [], moves: 0 };
let view: BoardView | null = null;
let kernel: KernelInfo | null = null;
let seed: number | null = null;
let busy = false;
let animating = false;

function setBusy(value: boolean): void {
  busy = value;
  for (const control of [newButton, hintButton, solveButton, growButton, sizeSelect]) {
    control.disabled = value;
  }
}

function refresh(): void {
  if (!view) {
    return;
  }
  paintLights(view, state.lit);
  const dim = kernel ? `, kernel dimension ${kernel.dimension}` : "";
  const seedText = seed === null ? "" : `, seed ${seed}`;
  statusLine.textContent =
    `size ${state.n} (${board.beta} buttons)${dim}` +
    `${seedText} | moves: ${state.moves} | lit: ${litCount(state)}`;
  if (isWon(state) && state.moves > 0) {
    banner.textContent = `All lights out in ${state.moves} moves.`;
    banner.hidden = false;
  } else {
    banner.hidden = true;
  }
}

function rebuildOverlayOptions(): void {
  overlaySelect.innerHTML = "";
  const none = document.createElement("option");
  none.value = "";
  none.textContent = "overlay: none";
  overlaySelect.appendChild(none);
  if (!kernel) {
    return;
  }
  const elements = kernel.elements ?? [];
  elements.forEach((element, index) => {
    if (!element.includes("1")) {
      return;
    }
    const option = document.createElement("option");
    option.value = element;
    option.textContent = `kernel element ${index} (weight ${countOnes(element)})`;
    overlaySelect.appendChild(option);
  });
  kernelNote.textContent =
    kernel.dimension === 0
      ? "Kernel is trivial at this size: every configuration has exactly one solution."
      : kernel.elements
        ? `${kernel.elements.length} kernel elements; overlay one to see presses that change nothing.`
        : `Kernel dimension ${kernel.dimension}: too many elements to enumerate; showing basis only.`;
}

function countOnes(bits: string): number {
  let total = 0;
  for (const ch of bits) {
    if (ch === "1") {
      total += 1;
    }
  }
  return total;
}

function rebuildGrowOptions(): void {
  growJ.innerHTML = "";
  const n = board.n;
  for (let j = 1; j <= 8; j += 1) {
    const m = n + (n + 2) * j;
    if (m > MAX_GROWN_SIZE) {
      break;
    }
    const option = document.createElement("option");
    option.value = String(j);
    option.textContent = `j = ${j} (grows to size ${m})`;
    growJ.appendChild(option);
  }
  growElement.innerHTML = "";
  const elements = kernel?.elements ?? [];
  elements.forEach((element, index) => {
    if (!element.includes("1")) {
      return;
    }
    const option = document.createElement("option");
    option.value = element;
    option.textContent = `element ${index} (weight ${countOnes(element)})`;
    growElement.appendChild(option);
  });
  const usable = growJ.options.length > 0 && growElement.options.length > 0;
  growButton.disabled = usable ? busy : true;
  grownNote.textContent = usable
    ? "Pick a kernel element and a growth step, then grow it onto the larger board."
    : "Growth needs a nonzero kernel element at this size (try sizes 2, 5, 6, ...).";
}

async function onPress(id: number): Promise<void> {
  if (busy || animating) {
    return;
  }
  paintHint(view as BoardView, null);
  const before = toBitstring(state.lit);
  state = applyClick(state, id, board);
  refresh();
  try {
    const after = await api.press(board.n, before, [id]);
    if (after !== toBitstring(state.lit)) {
      // Local rule disagreed with the engine: adopt the engine's answer.
      state = { n: state.n, lit: fromBitstring(after), moves: state.moves };
      refresh();
    }
  } catch (error) {
    statusLine.textContent = `press failed: ${describe(error)}`;
  }
}

function describe(error: unknown): string {
  if (error instanceof ApiError) {
    return error.detail;
  }
  return error instanceof Error ? error.message : String(error);
}

async function loadSize(n: number): Promise<void> {
  setBusy(true);
  try {
    board = await api.board(n);
    kernel = await api.kernel(n, true);
    view = createBoardView(n, BOARD_WIDTH, (id) => {
      void onPress(id);
    });
    boardHost.innerHTML = "";
    boardHost.appendChild(view.svg);
    rebuildOverlayOptions();
    rebuildGrowOptions();
    grownHost.innerHTML = "";
    await newPuzzle();
  } finally {
    setBusy(false);
  }
}

async function newPuzzle(): Promise<void> {
  const requested = seedInput.value.trim();
  const chosen = requested === "" ? undefined : Number(requested);
  const body = await api.random(board.n, Number.isFinite(chosen) ? chosen : undefined);
  seed = body.seed;
  seedInput.value = "";
  seedInput.placeholder = `seed (last: ${body.seed})`;
  state = newGame(board.n, body.config);
  if (view) {
    paintHint(view, null);
    paintOverlay(view, null);
    overlaySelect.value = "";
  }
  refresh();
}

async function onHint(): Promise<void> {
  if (!view) {
    return;
  }
  try {
    const button = await api.hint(board.n, toBitstring(state.lit));
    paintHint(view, button);
    statusLine.textContent = `hint: press button ${button}`;
  } catch (error) {
    if (error instanceof ApiError && error.status === 422) {
      statusLine.textContent = `no hint: ${error.detail}`;
    } else {
      statusLine.textContent = `hint failed: ${describe(error)}`;
    }
  }
}

async function onSolve(): Promise<void> {
  if (!view || animating) {
    return;
  }
  const report = await api.solve(board.n, toBitstring(state.lit));
  if (!report.solvable || report.canonical === null) {
    statusLine.textContent = "this configuration is unsolvable";
    return;
  }
  animating = true;
  setBusy(true);
  try {
    for (const button of report.canonical) {
      paintHint(view, button);
      await delay(280);
      const before = toBitstring(state.lit);
      state = applyClick(state, button, board);
      refresh();
      void api.press(board.n, before, [button]);
      await delay(120);
    }
    paintHint(view, null);
  } finally {
    animating = false;
    setBusy(false);
  }
}

function delay(ms: number): Promise<void> {
  return new Promise((resolve) => {
    setTimeout(resolve, ms);
  });
}

function onOverlayChange(): void {
  if (!view) {
    return;
  }
  const value = overlaySelect.value;
  paintOverlay(view, value === "" ? null : fromBitstring(value));
}

async function onGrow(): Promise<void> {
  const element = growElement.value;
  const j = Number(growJ.value);
  if (!element || !Number.isFinite(j)) {
    return;
  }
  setBusy(true);
  try {
    const grown = await api.propagate(board.n, element, j);
    const layout = await api.layout(board.n, j);
    const grownView = createBoardView(grown.m, BOARD_WIDTH);
    const lit = fromBitstring(grown.element);
    paintLights(grownView, lit);
    paintLayout(grownView, layout.blocks, layout.separator, lit);
    grownHost.innerHTML = "";
    grownHost.appendChild(grownView.svg);
    grownNote.textContent =
      `Grew a size-${board.n} kernel element to size ${grown.m} ` +
      `(${buttonCount(grown.m)} buttons, ${layout.blocks.length} symmetry blocks, ` +
      `verified: ${grown.verified ? "yes" : "no"}). ` +
      "Block colors mark embedded copies; grey cells are the dark separator.";
  } catch (error) {
    grownNote.textContent = `growth failed: ${describe(error)}`;
  } finally {
    setBusy(false);
  }
}

function init(): void {
  for (let n = 1; n <= MAX_PLAY_SIZE; n += 1) {
    const option = document.createElement("option");
    option.value = String(n);
    option.textContent = `n = ${n}`;
    sizeSelect.appendChild(option);
  }
  sizeSelect.value = "5";
  sizeSelect.addEventListener("change", () => {
    void loadSize(Number(sizeSelect.value));
  });
  newButton.addEventListener("click", () => {
    void newPuzzle();
  });
  hintButton.addEventListener("click", () => {
    void onHint();
  });
  solveButton.addEventListener("click", () => {
    void onSolve();
  });
  overlaySelect.addEventListener("change", onOverlayChange);
  growButton.addEventListener("click", () => {
    void onGrow();
  });
  void loadSize(5);
}

init();
