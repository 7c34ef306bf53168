"""Coverings by singletons and adjacent pairs, counted two independent ways."""

from __future__ import annotations

import itertools

import pytest

from trilights import board, gf2, matchings
from trilights.errors import FormatError, OracleRangeError


def all_edges(n: int) -> list[tuple[int, int]]:
    geo = board.geometry(n)
    return [
        (i, j)
        for i in range(geo.beta)
        for j in geo.neighbors[i]
        if i < j
    ]


def oracle_matching_count(n: int) -> int:
    """Coverings correspond to sets of pairwise-disjoint neighbor pairs
    (uncovered buttons become singletons), so count matchings directly by
    trying every subset of edges."""
    edges = all_edges(n)
    count = 0
    for picks in range(1 << len(edges)):
        used = 0
        ok = True
        for e, (i, j) in enumerate(edges):
            if (picks >> e) & 1:
                m = (1 << i) | (1 << j)
                if used & m:
                    ok = False
                    break
                used |= m
        if ok:
            count += 1
    return count


def oracle_permutation_counts(n: int) -> tuple[int, int]:
    """(adjacency-supported permutations, involutions among them)."""
    a = board.game_matrix(n)
    beta = a.rows
    total = 0
    involutions = 0
    for perm in itertools.permutations(range(beta)):
        if all(a.get(i, perm[i]) == 1 for i in range(beta)):
            total += 1
            if all(perm[perm[i]] == i for i in range(beta)):
                involutions += 1
    return total, involutions


class TestParsingAndValidation:
    def test_parse_roundtrip(self) -> None:
        text = "{1,2};{3};{4};{5,9};{6,10};{7,8}"
        cov = matchings.parse_covering(4, text)
        assert cov.to_text() == text
        assert cov.parts == ((1, 2), (3,), (4,), (5, 9), (6, 10), (7, 8))

    def test_parse_errors(self) -> None:
        for bad in ("{1,2", "1,2", "{};{1}", "{a}", "{1 2}"):
            with pytest.raises(FormatError):
                matchings.parse_covering(2, bad)

    def test_published_four_row_covering_valid(self) -> None:
        cov = matchings.parse_covering(4, "{1,2};{3};{4};{5,9};{6,10};{7,8}")
        check = matchings.validate_covering(cov)
        assert check.ok and bool(check)

    def test_all_singletons_valid(self) -> None:
        for n in range(1, 5):
            cov = matchings.Covering.from_parts(
                n, [(i,) for i in range(1, board.button_count(n) + 1)]
            )
            assert matchings.validate_covering(cov).ok

    def test_rejections(self) -> None:
        def reason(n: int, parts: list[tuple[int, ...]]) -> str:
            chk = matchings.validate_covering(matchings.Covering.from_parts(n, parts))
            assert not chk.ok
            return chk.reason

        assert reason(2, [(1, 2, 3)]).startswith("part-size")
        assert reason(2, [(1,), (2,), (3,), (4,)]).startswith("out-of-range")
        assert reason(2, [(1, 2), (2, 3)]).startswith("overlap")
        # buttons 1 and 6 sit on different corners of the 3-row board
        assert reason(3, [(1, 6), (2,), (3,), (4,), (5,)]).startswith("not-adjacent")
        assert reason(2, [(1, 2)]).startswith("incomplete")

    def test_validation_is_not_construction(self) -> None:
        # malformed coverings can be built and inspected; only validate rejects
        cov = matchings.Covering.from_parts(2, [(1, 2)])
        assert not matchings.validate_covering(cov).ok


class TestCounting:
    def test_tiny_counts(self) -> None:
        assert matchings.count_coverings(1) == 1
        assert matchings.count_coverings(2) == 4

    def test_matches_edge_subset_oracle(self) -> None:
        for n in range(1, 5):
            assert matchings.count_coverings(n) == oracle_matching_count(n)

    def test_enumeration_agrees_and_is_duplicate_free(self) -> None:
        for n in range(1, 5):
            seen = set()
            for cov in matchings.enumerate_coverings(n):
                assert matchings.validate_covering(cov).ok
                key = cov.parts
                assert key not in seen
                seen.add(key)
            assert len(seen) == matchings.count_coverings(n)

    def test_involution_correspondence(self) -> None:
        # coverings correspond to involutions supported by the adjacency
        # matrix; non-involutions pair off with their inverses, so the
        # permutation count and the covering count share parity
        for n in (1, 2, 3):
            total, involutions = oracle_permutation_counts(n)
            assert involutions == matchings.count_coverings(n)
            assert total % 2 == matchings.count_coverings(n) % 2

    def test_range_guard(self) -> None:
        with pytest.raises(OracleRangeError):
            matchings.count_coverings(matchings.COUNT_MAX_SIZE + 1)
        with pytest.raises(OracleRangeError):
            list(matchings.enumerate_coverings(7))


class TestParity:
    def test_parity_equals_determinant(self) -> None:
        for n in range(1, matchings.COUNT_MAX_SIZE + 1):
            det = gf2.det_parity(board.game_matrix(n))
            assert matchings.coverings_parity(n) == det
            assert matchings.count_coverings(n) % 2 == det

    def test_fixed_values(self) -> None:
        assert matchings.coverings_parity(2) == 0
        assert matchings.coverings_parity(4) == 1
        assert matchings.coverings_parity(5) == 0

    def test_parity_beyond_count_range(self) -> None:
        # parity comes from the determinant, so it works at sizes the
        # exhaustive counter refuses
        assert matchings.coverings_parity(30) in (0, 1)
        assert matchings.coverings_parity(7) == 1  # size-7 kernel is trivial
