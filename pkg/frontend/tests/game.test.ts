// Unit tests for the pure game logic: no server, no DOM.

import { describe, expect, it } from "vitest";

import {
  applyClick,
  buttonCount,
  fromBitstring,
  isWon,
  litCount,
  mulberry32,
  newGame,
  rowPosition,
  toBitstring,
  type BoardInfo,
} from "../src/game.js";

// Size-3 adjacency, 1-based: same-row neighbors plus the two diagonal
// contacts with the rows above and below.
const BOARD3: BoardInfo = {
  n: 3,
  beta: 6,
  neighbors: [
    [2, 3],
    [1, 3, 4, 5],
    [1, 2, 5, 6],
    [2, 5],
    [2, 3, 4, 6],
    [3, 5],
  ],
};

describe("buttonCount", () => {
  it("follows the triangle numbers", () => {
    expect([1, 2, 3, 4, 5, 10].map(buttonCount)).toEqual([1, 3, 6, 10, 15, 55]);
  });
});

describe("rowPosition", () => {
  it("places the first few ids", () => {
    expect(rowPosition(1)).toEqual({ row: 1, pos: 1 });
    expect(rowPosition(2)).toEqual({ row: 2, pos: 1 });
    expect(rowPosition(3)).toEqual({ row: 2, pos: 2 });
    expect(rowPosition(4)).toEqual({ row: 3, pos: 1 });
    expect(rowPosition(6)).toEqual({ row: 3, pos: 3 });
    expect(rowPosition(7)).toEqual({ row: 4, pos: 1 });
  });

  it("round-trips every id on a size-12 board", () => {
    let id = 0;
    for (let row = 1; row <= 12; row += 1) {
      for (let pos = 1; pos <= row; pos += 1) {
        id += 1;
        expect(rowPosition(id)).toEqual({ row, pos });
      }
    }
    expect(id).toBe(buttonCount(12));
  });
});

describe("bitstrings", () => {
  it("round-trips", () => {
    for (const s of ["", "0", "1", "010001", "111111"]) {
      expect(toBitstring(fromBitstring(s))).toBe(s);
    }
  });

  it("rejects foreign characters", () => {
    expect(() => fromBitstring("01x")).toThrow(/invalid configuration/);
  });
});

describe("newGame", () => {
  it("starts with zero moves", () => {
    const game = newGame(3, "010001");
    expect(game.moves).toBe(0);
    expect(litCount(game)).toBe(2);
    expect(isWon(game)).toBe(false);
  });

  it("rejects a length mismatch", () => {
    expect(() => newGame(3, "0100")).toThrow(/does not match size/);
  });
});

describe("applyClick", () => {
  it("toggles the button and its neighbors", () => {
    const game = newGame(3, "000000");
    const after = applyClick(game, 2, BOARD3);
    expect(toBitstring(after.lit)).toBe("111110");
    expect(after.moves).toBe(1);
  });

  it("the apex press lights the top triangle only", () => {
    const after = applyClick(newGame(3, "000000"), 1, BOARD3);
    expect(toBitstring(after.lit)).toBe("111000");
  });

  it("pressing twice restores the configuration", () => {
    const start = newGame(3, "010001");
    let game = start;
    for (const button of [4, 4]) {
      game = applyClick(game, button, BOARD3);
    }
    expect(toBitstring(game.lit)).toBe("010001");
    expect(game.moves).toBe(2);
  });

  it("does not mutate the previous state", () => {
    const game = newGame(3, "000000");
    applyClick(game, 1, BOARD3);
    expect(toBitstring(game.lit)).toBe("000000");
    expect(game.moves).toBe(0);
  });

  it("rejects out-of-range buttons and mismatched boards", () => {
    const game = newGame(3, "000000");
    expect(() => applyClick(game, 0, BOARD3)).toThrow(/out of range/);
    expect(() => applyClick(game, 7, BOARD3)).toThrow(/out of range/);
    expect(() => applyClick(newGame(2, "000"), 1, BOARD3)).toThrow(/does not match game size/);
  });

  it("a full solve reaches the all-off state", () => {
    // Press 2 toggles {1,2,3,4,5} and press 3 toggles {1,2,3,5,6},
    // so together they toggle exactly {4,6}: "000101" is a 2-press win.
    let game = newGame(3, "000101");
    game = applyClick(game, 2, BOARD3);
    game = applyClick(game, 3, BOARD3);
    expect(isWon(game)).toBe(true);
    expect(game.moves).toBe(2);
  });
});

describe("mulberry32", () => {
  it("is deterministic per seed", () => {
    const a = mulberry32(42);
    const b = mulberry32(42);
    const c = mulberry32(43);
    const first = [a(), a(), a()];
    expect([b(), b(), b()]).toEqual(first);
    expect([c(), c(), c()]).not.toEqual(first);
  });

  it("stays inside [0, 1)", () => {
    const rng = mulberry32(7);
    for (let i = 0; i < 1000; i += 1) {
      const value = rng();
      expect(value).toBeGreaterThanOrEqual(0);
      expect(value).toBeLessThan(1);
    }
  });
});
