"""Triangular board geometry, numbering, and the dihedral symmetries.

Buttons sit on a triangular lattice with n rows; row r (1-based) holds r
buttons, numbered top to bottom and left to right, so button ids run
1..n(n+1)/2.  Internally everything is 0-based: index(r, k) =
r(r-1)/2 + k - 1.  Two buttons are neighbors when they touch:
(r, k±1), (r-1, k-1), (r-1, k), (r+1, k), (r+1, k+1), kept when the
target exists.

Triangle coordinates (x, y, z) = (k-1, r-k, n-r) measure the distance
to the three sides; x + y + z = n - 1 always.  The six board symmetries
permute these three axes, which is how rotations and reflections are
represented here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .errors import CoordinateError, SizeError
from .gf2 import BitMatrix

MAX_SIZE = 128


def check_size(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise SizeError(f"board size must be an int, got {n!r}")
    if not 1 <= n <= MAX_SIZE:
        raise SizeError(f"board size must be in 1..{MAX_SIZE}, got {n}")
    return n


def button_count(n: int) -> int:
    """Number of buttons on a size-n board: n(n+1)/2."""
    check_size(n)
    return n * (n + 1) // 2


def button_index(n: int, r: int, k: int) -> int:
    """0-based index of the button at row r, position k (both 1-based)."""
    check_size(n)
    if not 1 <= r <= n:
        raise CoordinateError(f"row must be in 1..{n}, got {r}")
    if not 1 <= k <= r:
        raise CoordinateError(f"position must be in 1..{r}, got {k}")
    return r * (r - 1) // 2 + k - 1


def button_rowcol(n: int, i: int) -> tuple[int, int]:
    """Inverse of button_index: (row, position) of 0-based index i."""
    beta = button_count(n)
    if not 0 <= i < beta:
        raise CoordinateError(f"index must be in 0..{beta - 1}, got {i}")
    r = (isqrt(8 * i + 1) + 1) // 2
    k = i - r * (r - 1) // 2 + 1
    return r, k


def to_tricoord(n: int, r: int, k: int) -> tuple[int, int, int]:
    """(x, y, z) distances to the left side, right side, and bottom."""
    button_index(n, r, k)
    return k - 1, r - k, n - r


def from_tricoord(n: int, x: int, y: int, z: int) -> tuple[int, int]:
    check_size(n)
    if min(x, y, z) < 0 or x + y + z != n - 1:
        raise CoordinateError(
            f"triangle coordinates need x,y,z >= 0 and x+y+z = {n - 1}, got ({x},{y},{z})"
        )
    return n - z, x + 1


_NEIGHBOR_OFFSETS = ((0, -1), (0, 1), (-1, -1), (-1, 0), (1, 0), (1, 1))


def neighbor_indices(n: int, r: int, k: int) -> tuple[int, ...]:
    """Indices of the touching buttons of (r, k), ascending."""
    button_index(n, r, k)
    out = []
    for dr, dk in _NEIGHBOR_OFFSETS:
        rr, kk = r + dr, k + dk
        if 1 <= rr <= n and 1 <= kk <= rr:
            out.append(rr * (rr - 1) // 2 + kk - 1)
    return tuple(sorted(out))


@dataclass(frozen=True)
class BoardGeometry:
    """Size, button count, and per-button neighbor lists (0-based)."""

    n: int
    beta: int
    neighbors: tuple[tuple[int, ...], ...]

    def press_mask(self, i: int) -> int:
        """Bitset of the lights toggled by pressing button i: i itself plus neighbors."""
        mask = 1 << i
        for j in self.neighbors[i]:
            mask |= 1 << j
        return mask


@lru_cache(maxsize=None)
def geometry(n: int) -> BoardGeometry:
    beta = button_count(n)
    neigh = tuple(
        neighbor_indices(n, *button_rowcol(n, i)) for i in range(beta)
    )
    return BoardGeometry(n, beta, neigh)


@lru_cache(maxsize=None)
def game_matrix(n: int) -> BitMatrix:
    """Button-press matrix: a_ij = 1 iff i = j or i, j touch.  Symmetric."""
    geo = geometry(n)
    return BitMatrix(geo.beta, geo.beta, tuple(geo.press_mask(i) for i in range(geo.beta)))


@dataclass(frozen=True)
class Symmetry:
    """One of the six rotations/reflections of the triangle.

    ``source`` gives the transformed triple as a re-read of the original:
    new[j] = old[source[j]].  Rotation sends (x, y, z) to (y, z, x).
    """

    name: str
    source: tuple[int, int, int]

    def apply_coord(self, coord: tuple[int, int, int]) -> tuple[int, int, int]:
        s = self.source
        return coord[s[0]], coord[s[1]], coord[s[2]]

    def is_reflection(self) -> bool:
        return self.source in ((1, 0, 2), (0, 2, 1), (2, 1, 0))


IDENTITY = Symmetry("identity", (0, 1, 2))
ROTATE = Symmetry("rotate", (1, 2, 0))
ROTATE2 = Symmetry("rotate2", (2, 0, 1))
MIRROR_TOP = Symmetry("mirror_top", (1, 0, 2))
MIRROR_RIGHT = Symmetry("mirror_right", (0, 2, 1))
MIRROR_LEFT = Symmetry("mirror_left", (2, 1, 0))

SYMMETRIES: tuple[Symmetry, ...] = (
    IDENTITY,
    ROTATE,
    ROTATE2,
    MIRROR_TOP,
    MIRROR_RIGHT,
    MIRROR_LEFT,
)

_BY_SOURCE = {s.source: s for s in SYMMETRIES}
_BY_NAME = {s.name: s for s in SYMMETRIES}


def symmetry_by_name(name: str) -> Symmetry:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise CoordinateError(
            f"unknown symmetry {name!r}; choose from {sorted(_BY_NAME)}"
        ) from None


def compose(first: Symmetry, then: Symmetry) -> Symmetry:
    """Symmetry equal to applying ``first``, then ``then``."""
    src = tuple(first.source[then.source[j]] for j in range(3))
    return _BY_SOURCE[src]


@lru_cache(maxsize=None)
def button_permutation(sym: Symmetry, n: int) -> tuple[int, ...]:
    """Permutation p of 0-based indices: the button at i lands at p[i]."""
    beta = button_count(n)
    perm = []
    for i in range(beta):
        r, k = button_rowcol(n, i)
        coord = sym.apply_coord(to_tricoord(n, r, k))
        rr, kk = from_tricoord(n, *coord)
        perm.append(button_index(n, rr, kk))
    return tuple(perm)


def permute_bits(bits: int, perm: tuple[int, ...]) -> int:
    """Move bit i of ``bits`` to position perm[i]."""
    out = 0
    for i, p in enumerate(perm):
        if (bits >> i) & 1:
            out |= 1 << p
    return out
