// Pure game state for the triangular lights-out board.
// No DOM, no network: everything here is testable in isolation.

/** Shape returned by GET /api/board/{n}. Neighbor lists use 1-based button ids. */
export interface BoardInfo {
  n: number;
  beta: number;
  neighbors: number[][];
}

/** Immutable snapshot of one game in progress. */
export interface GameState {
  n: number;
  lit: readonly boolean[];
  moves: number;
}

/** Number of buttons on a board of size n. */
export function buttonCount(n: number): number {
  return (n * (n + 1)) / 2;
}

/** Row (1-based) and position within the row (1-based) of button id. */
export function rowPosition(id: number): { row: number; pos: number } {
  let row = 1;
  while ((row * (row + 1)) / 2 < id) {
    row += 1;
  }
  const pos = id - ((row - 1) * row) / 2;
  return { row, pos };
}

/** Parse a configuration bitstring ("010...") into a lit array. */
export function fromBitstring(config: string): boolean[] {
  const lit: boolean[] = [];
  for (const ch of config) {
    if (ch !== "0" && ch !== "1") {
      throw new Error(`invalid configuration character: ${JSON.stringify(ch)}`);
    }
    lit.push(ch === "1");
  }
  return lit;
}

/** Serialize a lit array back into the bitstring the API speaks. */
export function toBitstring(lit: readonly boolean[]): string {
  return lit.map((on) => (on ? "1" : "0")).join("");
}

/** Fresh game over an explicit configuration string. */
export function newGame(n: number, config: string): GameState {
  const lit = fromBitstring(config);
  if (lit.length !== buttonCount(n)) {
    throw new Error(`configuration length ${lit.length} does not match size ${n}`);
  }
  return { n, lit, moves: 0 };
}

/**
 * Press one button locally: the button and each of its board neighbors toggle.
 * Mirrors POST /api/press with a single-button press set.
 */
export function applyClick(state: GameState, button: number, board: BoardInfo): GameState {
  if (board.n !== state.n) {
    throw new Error(`board size ${board.n} does not match game size ${state.n}`);
  }
  if (!Number.isInteger(button) || button < 1 || button > board.beta) {
    throw new Error(`button ${button} out of range 1..${board.beta}`);
  }
  const lit = state.lit.slice();
  lit[button - 1] = !lit[button - 1];
  const around = board.neighbors[button - 1] ?? [];
  for (const other of around) {
    lit[other - 1] = !lit[other - 1];
  }
  return { n: state.n, lit, moves: state.moves + 1 };
}

/** The game is won when every light is out. */
export function isWon(state: GameState): boolean {
  return state.lit.every((on) => !on);
}

/** Count of lit buttons, for the status line. */
export function litCount(state: GameState): number {
  return state.lit.reduce((acc, on) => acc + (on ? 1 : 0), 0);
}

/** Deterministic PRNG (mulberry32) so demos and tests can replay sequences. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}
