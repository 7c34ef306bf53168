"""Growing kernel elements: size n patterns to size m = n+(n+2)j boards.

The size-m board is tiled with (j+1) squared copies of the size-n board
("blocks"), separated by width-1 lines of unused buttons.  Bands are
indexed 0..j from the top; band b holds b+1 upright blocks (slots
0..b) and, for b >= 1, b inverted blocks (slots 0..b-1) wedged between
them.  Cell formulas, with rows/columns 1-based in the target:

* upright (b, u): local (p, k) -> (b(n+2) + p, u(n+2) + k)
* inverted (b, v): local (p, k) -> (b(n+2) + n - p, v(n+2) + n + 2 - k)

Each block also carries one of the six board symmetries: the apex block
is the identity, and every neighboring pair of blocks holds patterns
that are mirror images across their shared separator line.  The edge
transforms are not hardcoded: for each adjacency the map
embed -> reflect-across-line -> unembed is computed cell by cell and
identified among the six symmetries, so a formula error fails loudly.

Given a kernel element T of size n, placing each block's transformed
copy of T yields a kernel element X of size m.  propagate() always
re-checks A(m) X = 0 before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import board, gf2
from .board import IDENTITY, SYMMETRIES, Symmetry, button_count, check_size
from .engine import PressSet
from .errors import KernelPreconditionError, ShapeError, SizeError, VerificationError
from .gf2 import BitVector

UPRIGHT = "upright"
INVERTED = "inverted"


@dataclass(frozen=True)
class Block:
    """One size-n block placed in the size-m board.

    ``cells[i]`` is the 0-based target index of local button i+1, so the
    tuple is the whole cell map in local button order.  ``symmetry``
    acts on local patterns before they are mapped through ``cells``.
    """

    orientation: str
    band: int
    slot: int
    cells: tuple[int, ...]
    symmetry: Symmetry


@dataclass(frozen=True)
class BlockLayout:
    """Complete tiling: blocks plus the separator buttons between them."""

    n: int
    j: int
    m: int
    blocks: tuple[Block, ...]
    separator: tuple[int, ...]

    def block_at(self, orientation: str, band: int, slot: int) -> Block:
        for b in self.blocks:
            if (b.orientation, b.band, b.slot) == (orientation, band, slot):
                return b
        raise KeyError((orientation, band, slot))


def _upright_embed(n: int, b: int, u: int, p: int, k: int) -> tuple[int, int]:
    return b * (n + 2) + p, u * (n + 2) + k


def _inverted_embed(n: int, b: int, v: int, p: int, k: int) -> tuple[int, int]:
    return b * (n + 2) + n - p, v * (n + 2) + n + 2 - k


def _unembed(n: int, orientation: str, b: int, s: int, rk: tuple[int, int]) -> tuple[int, int]:
    r, k = rk
    if orientation == UPRIGHT:
        p, q = r - b * (n + 2), k - s * (n + 2)
    else:
        p, q = b * (n + 2) + n - r, s * (n + 2) + n + 2 - k
    if not 1 <= q <= p <= n:
        raise VerificationError(
            f"reflected cell {rk} lands outside block ({orientation},{b},{s})"
        )
    return p, q


def _reflect_row(r0: int, rk: tuple[int, int]) -> tuple[int, int]:
    r, k = rk
    return 2 * r0 - r, k + r0 - r


def _reflect_right_diag(c: int, rk: tuple[int, int]) -> tuple[int, int]:
    # across the line of buttons with r - k = c (parallel to the right side)
    r, k = rk
    return k + c, r - c


def _reflect_left_diag(c: int, rk: tuple[int, int]) -> tuple[int, int]:
    # across the line of buttons with k = c (parallel to the left side)
    r, k = rk
    return r - k + c, 2 * c - k


def _block_cells(n: int, m: int, orientation: str, b: int, s: int) -> tuple[int, ...]:
    cells = []
    for i in range(button_count(n)):
        p, k = board.button_rowcol(n, i)
        if orientation == UPRIGHT:
            r, c = _upright_embed(n, b, s, p, k)
        else:
            r, c = _inverted_embed(n, b, s, p, k)
        cells.append(board.button_index(m, r, c))
    return tuple(cells)


def _edge_transform(n: int, src: Block, dst: Block, reflect) -> Symmetry:
    """The board symmetry equal to embed(src) -> reflect -> unembed(dst)."""
    perm = []
    for i in range(button_count(n)):
        p, k = board.button_rowcol(n, i)
        if src.orientation == UPRIGHT:
            rk = _upright_embed(n, src.band, src.slot, p, k)
        else:
            rk = _inverted_embed(n, src.band, src.slot, p, k)
        pq = _unembed(n, dst.orientation, dst.band, dst.slot, reflect(rk))
        perm.append(board.button_index(n, *pq))
    if sorted(perm) != list(range(button_count(n))):
        raise VerificationError("separator reflection is not a bijection between blocks")
    target = tuple(perm)
    for sym in SYMMETRIES:
        if board.button_permutation(sym, n) == target:
            return sym
    raise VerificationError("separator reflection does not match any board symmetry")


@lru_cache(maxsize=None)
def block_layout(n: int, j: int) -> BlockLayout:
    """Deterministic tiling of the size n+(n+2)j board by size-n blocks.

    Builds all (j+1)^2 blocks, checks that they partition the board
    around width-1 separator lines, and assigns each block its symmetry
    by composing reflections along a breadth-first walk of the block
    adjacency graph (apex block = identity).  Disagreement between two
    walk paths, or any partition/separation violation, is an error.
    """
    check_size(n)
    if not isinstance(j, int) or isinstance(j, bool) or j < 1:
        raise SizeError(f"propagation steps j must be a positive int, got {j!r}")
    m = n + (n + 2) * j
    check_size(m)

    keys: list[tuple[str, int, int]] = []
    for b in range(j + 1):
        for u in range(b + 1):
            keys.append((UPRIGHT, b, u))
        for v in range(b):
            keys.append((INVERTED, b, v))
    cells_by_key = {
        key: _block_cells(n, m, *key) for key in keys
    }

    beta_m = button_count(m)
    owner: dict[int, tuple[str, int, int]] = {}
    for key, cells in cells_by_key.items():
        for c in cells:
            if c in owner:
                raise VerificationError(f"blocks {owner[c]} and {key} overlap at button {c + 1}")
            owner[c] = key
    separator = tuple(i for i in range(beta_m) if i not in owner)

    geo = board.geometry(m)
    for c, key in owner.items():
        for nb in geo.neighbors[c]:
            other = owner.get(nb)
            if other is not None and other != key:
                raise VerificationError(
                    f"blocks {key} and {other} touch at buttons {c + 1},{nb + 1}"
                )

    # Block adjacency: each inverted block meets the upright block above
    # it across a horizontal line, and the two upright blocks beside it
    # across one diagonal line each.
    edges = []
    for b in range(1, j + 1):
        for v in range(b):
            edges.append(
                ((INVERTED, b, v), (UPRIGHT, b - 1, v), ("row", b * (n + 2) - 1))
            )
            edges.append(
                ((INVERTED, b, v), (UPRIGHT, b, v), ("right", (b - v) * (n + 2) - 1))
            )
            edges.append(
                ((INVERTED, b, v), (UPRIGHT, b, v + 1), ("left", (v + 1) * (n + 2)))
            )

    by_key = {
        key: Block(key[0], key[1], key[2], cells_by_key[key], IDENTITY) for key in keys
    }
    reflectors = {"row": _reflect_row, "right": _reflect_right_diag, "left": _reflect_left_diag}
    adjacency: dict[tuple[str, int, int], list] = {key: [] for key in keys}
    for a, b_key, (kind, param) in edges:
        adjacency[a].append((b_key, kind, param))
        adjacency[b_key].append((a, kind, param))

    assigned: dict[tuple[str, int, int], Symmetry] = {(UPRIGHT, 0, 0): IDENTITY}
    queue = [(UPRIGHT, 0, 0)]
    while queue:
        cur = queue.pop(0)
        for nxt, kind, param in adjacency[cur]:
            step = _edge_transform(
                n, by_key[cur], by_key[nxt], lambda rk: reflectors[kind](param, rk)
            )
            combined = board.compose(assigned[cur], step)
            prior = assigned.get(nxt)
            if prior is None:
                assigned[nxt] = combined
                queue.append(nxt)
            elif board.button_permutation(prior, n) != board.button_permutation(combined, n):
                raise VerificationError(
                    f"inconsistent symmetry assignment at block {nxt}: "
                    f"{prior.name} vs {combined.name}"
                )
    if len(assigned) != len(keys):
        raise VerificationError("block adjacency graph is not connected")

    blocks = []
    for b in range(j + 1):
        for s in range(b + 1):
            for key in ((UPRIGHT, b, s), (INVERTED, b, s)):
                if key in cells_by_key:
                    blocks.append(
                        Block(key[0], b, s, cells_by_key[key], assigned[key])
                    )
    return BlockLayout(n, j, m, tuple(blocks), separator)


def verify_kernel_membership(x: PressSet, m: int) -> bool:
    """True iff pressing x on the all-off size-m board changes nothing."""
    if x.n != m:
        raise ShapeError(f"press set is for size {x.n}, expected {m}")
    return gf2.mat_vec(board.game_matrix(m), x.mask).is_zero()


def propagate(t: PressSet, j: int) -> PressSet:
    """Kernel element of the size n+(n+2)j game built from kernel element t.

    Every block contributes its symmetry-transformed copy of t through
    its cell map; separators stay unused.  The result is re-verified
    against the size-m matrix before being returned, so a false output
    is impossible (failure raises instead).
    """
    if not verify_kernel_membership(t, t.n):
        raise KernelPreconditionError(
            f"input pattern is not a kernel element of the size-{t.n} game"
        )
    layout = block_layout(t.n, j)
    bits = 0
    support = t.mask.support()
    for block in layout.blocks:
        perm = board.button_permutation(block.symmetry, t.n)
        for i in support:
            bits |= 1 << block.cells[perm[i]]
    result = PressSet(layout.m, BitVector(button_count(layout.m), bits))
    if not verify_kernel_membership(result, layout.m):
        raise VerificationError(
            f"propagated pattern failed the kernel check at n={t.n}, j={j}"
        )
    if bool(bits) != bool(t.mask.bits):
        raise VerificationError("propagation changed emptiness of the pattern")
    return result


def layout_dump(layout: BlockLayout) -> str:
    """One line per block: band, slot, orientation, symmetry, cell ids."""
    lines = []
    for b in layout.blocks:
        ids = ",".join(str(c + 1) for c in b.cells)
        lines.append(
            f"band={b.band} slot={b.slot} orientation={b.orientation} "
            f"symmetry={b.symmetry.name} cells={ids}"
        )
    return "\n".join(lines)
