"""Block layouts and kernel propagation between compatible board sizes."""

from __future__ import annotations

import pytest

from trilights import board, engine, gf2, propagation
from trilights.errors import (
    KernelPreconditionError,
    ShapeError,
    SizeError,
)


def press_set(n: int, ids: list[int]) -> engine.PressSet:
    return engine.PressSet.from_ids(n, ids)


def block_cell_sets(layout: propagation.BlockLayout) -> list[set[int]]:
    return [set(b.cells) for b in layout.blocks]


class TestLayoutGeometry:
    def test_target_size(self) -> None:
        for n in range(1, 7):
            for j in range(1, 4):
                layout = propagation.block_layout(n, j)
                assert layout.m == n + (n + 2) * j
                assert len(layout.blocks) == (j + 1) ** 2

    def test_partition(self) -> None:
        for n in range(1, 7):
            for j in range(1, 4):
                layout = propagation.block_layout(n, j)
                beta_m = board.button_count(layout.m)
                beta_n = board.button_count(n)
                seen: set[int] = set(layout.separator)
                assert len(layout.separator) == len(set(layout.separator))
                for cells in block_cell_sets(layout):
                    assert len(cells) == beta_n
                    assert not (cells & seen)
                    seen |= cells
                assert seen == set(range(beta_m))

    def test_band_structure(self) -> None:
        for n in (1, 2, 4):
            for j in (1, 2, 3):
                layout = propagation.block_layout(n, j)
                for band in range(j + 1):
                    ups = [
                        b for b in layout.blocks
                        if b.band == band and b.orientation == propagation.UPRIGHT
                    ]
                    downs = [
                        b for b in layout.blocks
                        if b.band == band and b.orientation == propagation.INVERTED
                    ]
                    assert len(ups) == band + 1
                    assert len(downs) == band
                    assert sorted(b.slot for b in ups) == list(range(band + 1))
                    assert sorted(b.slot for b in downs) == list(range(band))

    def test_separation(self) -> None:
        # no two cells in different blocks are board neighbors
        for n in range(1, 7):
            for j in (1, 2):
                layout = propagation.block_layout(n, j)
                geo = board.geometry(layout.m)
                owner: dict[int, int] = {}
                for t, cells in enumerate(block_cell_sets(layout)):
                    for c in cells:
                        owner[c] = t
                for i, mine in owner.items():
                    for nb in geo.neighbors[i]:
                        assert owner.get(nb, mine) == mine

    def test_single_button_layout(self) -> None:
        layout = propagation.block_layout(1, 1)
        cells = sorted(c for b in layout.blocks for c in b.cells)
        # 1-based ids 1, 5, 7, 10 on the 4-row board
        assert cells == [0, 4, 6, 9]
        assert layout.separator == (1, 2, 3, 5, 7, 8)

    def test_two_row_layout(self) -> None:
        layout = propagation.block_layout(2, 1)
        assert layout.m == 6
        expect = {
            (propagation.UPRIGHT, 0, 0): {1, 2, 3},
            (propagation.UPRIGHT, 1, 0): {11, 16, 17},
            (propagation.INVERTED, 1, 0): {8, 9, 13},
            (propagation.UPRIGHT, 1, 1): {15, 20, 21},
        }
        for (orient, band, slot), ids in expect.items():
            blk = layout.block_at(orient, band, slot)
            assert {c + 1 for c in blk.cells} == ids
        got_sep = {c + 1 for c in layout.separator}
        assert got_sep == {4, 5, 6, 7, 10, 12, 14, 18, 19}

    def test_horizontal_separator_rows(self) -> None:
        # the full row just below each band boundary belongs to the separator
        for n in (2, 3, 4):
            layout = propagation.block_layout(n, 1)
            row = n + 1
            row_ids = {
                board.button_index(layout.m, row, k) for k in range(1, row + 1)
            }
            assert row_ids <= set(layout.separator)

    def test_block_at_missing(self) -> None:
        layout = propagation.block_layout(2, 1)
        with pytest.raises(KeyError):
            layout.block_at(propagation.INVERTED, 0, 0)

    def test_size_errors(self) -> None:
        with pytest.raises(SizeError):
            propagation.block_layout(2, 0)
        with pytest.raises(SizeError):
            propagation.block_layout(80, 1)  # target 162 exceeds the size cap
        with pytest.raises(SizeError):
            propagation.block_layout(0, 1)


class TestLayoutSymmetries:
    def test_apex_block_identity(self) -> None:
        for n in (1, 2, 3, 5):
            for j in (1, 2):
                layout = propagation.block_layout(n, j)
                apex = layout.block_at(propagation.UPRIGHT, 0, 0)
                assert apex.symmetry is board.IDENTITY

    def test_two_row_assignments(self) -> None:
        layout = propagation.block_layout(2, 1)
        by_key = {
            (b.orientation, b.band, b.slot): b.symmetry.name for b in layout.blocks
        }
        assert by_key == {
            (propagation.UPRIGHT, 0, 0): "identity",
            (propagation.UPRIGHT, 1, 0): "rotate2",
            (propagation.INVERTED, 1, 0): "mirror_top",
            (propagation.UPRIGHT, 1, 1): "rotate",
        }

    def test_dump_format(self) -> None:
        layout = propagation.block_layout(2, 1)
        lines = propagation.layout_dump(layout).splitlines()
        assert lines == [
            "band=0 slot=0 orientation=upright symmetry=identity cells=1,2,3",
            "band=1 slot=0 orientation=upright symmetry=rotate2 cells=11,16,17",
            "band=1 slot=0 orientation=inverted symmetry=mirror_top cells=13,9,8",
            "band=1 slot=1 orientation=upright symmetry=rotate cells=15,20,21",
        ]


class TestVerifyKernelMembership:
    def test_examples(self) -> None:
        assert propagation.verify_kernel_membership(press_set(2, []), 2)
        assert propagation.verify_kernel_membership(press_set(2, [1, 2]), 2)
        assert not propagation.verify_kernel_membership(press_set(2, [1]), 2)

    def test_size_mismatch(self) -> None:
        with pytest.raises(ShapeError):
            propagation.verify_kernel_membership(press_set(2, [1, 2]), 3)


class TestPropagate:
    def test_empty_pattern_stays_empty(self) -> None:
        out = propagation.propagate(press_set(2, []), 1)
        assert out.n == 6 and out.ids() == ()

    def test_hand_checked_case(self) -> None:
        out = propagation.propagate(press_set(2, [1, 2]), 1)
        assert out.n == 6
        assert out.ids() == (1, 2, 8, 11, 13, 17, 20, 21)

    def test_rejects_non_kernel_input(self) -> None:
        with pytest.raises(KernelPreconditionError):
            propagation.propagate(press_set(2, [1]), 1)
        with pytest.raises(KernelPreconditionError):
            propagation.propagate(press_set(3, [1]), 1)

    def test_output_is_kernel_element(self) -> None:
        for n in (2, 5, 6):
            for j in (1, 2):
                m = n + (n + 2) * j
                for b in engine.kernel_basis(n):
                    out = propagation.propagate(b, j)
                    assert out.n == m
                    assert propagation.verify_kernel_membership(out, m)
                    assert out.weight() > 0

    def test_separator_stays_dark_and_balanced(self) -> None:
        # separator buttons are never pressed and see an even number of
        # pressed neighbors, which is what makes the big pattern a kernel
        # element
        for n in (2, 5):
            layout = propagation.block_layout(n, 1)
            geo = board.geometry(layout.m)
            for b in engine.kernel_basis(n):
                out = propagation.propagate(b, 1)
                bits = out.mask.bits
                for s in layout.separator:
                    assert (bits >> s) & 1 == 0
                    lit = sum((bits >> nb) & 1 for nb in geo.neighbors[s])
                    assert lit % 2 == 0

    def test_block_patterns_match_symmetries(self) -> None:
        t = press_set(2, [1, 2])
        layout = propagation.block_layout(2, 1)
        out = propagation.propagate(t, 1)
        bits = out.mask.bits
        for blk in layout.blocks:
            perm = board.button_permutation(blk.symmetry, 2)
            local = board.permute_bits(t.mask.bits, perm)
            for i, cell in enumerate(blk.cells):
                assert (bits >> cell) & 1 == (local >> i) & 1

    def test_growth_consequence(self) -> None:
        # a nonzero kernel at size n forces a nonzero kernel at n + (n+2)j
        for n in (2, 5, 6):
            for j in (1, 2):
                m = n + (n + 2) * j
                if engine.kernel_dimension(n) > 0:
                    assert engine.kernel_dimension(m) > 0
