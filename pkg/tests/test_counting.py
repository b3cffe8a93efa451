from fractions import Fraction
from math import comb

import pytest

from polyteach import counting
from polyteach.exceptions import DomainError


@pytest.mark.parametrize('n, d, expected', [
    (1, 5, 2),
    (7, 0, 1),
    (3, 2, 7),
    (2, 3, 4),
    (5, 2, 16),
])
def test_q_general(n, d, expected):
    assert counting.q_general(n, d) == expected


def test_q_general_recursion():
    for n in range(2, 31):
        for d in range(1, 11):
            expected = (counting.q_general(n - 1, d)
                        + counting.q_general(n - 1, d - 1))
            assert counting.q_general(n, d) == expected


@pytest.mark.parametrize('n, dprime, expected', [
    (5, 1, 6),
    (5, 2, 16),
    (3, 2, 7),
    (8, 2, 37),
])
def test_regions_relaxed(n, dprime, expected):
    assert counting.regions_relaxed(n, dprime) == expected


def test_regions_relaxed_matches_general():
    for n in range(2, 15):
        for d in range(1, n):
            assert counting.regions_relaxed(n, d) == counting.q_general(n, d)


@pytest.mark.parametrize('n, dprime, expected', [
    (3, 2, 9),
    (3, 1, 3),
    (5, 2, 25),
    (8, 2, 64),
])
def test_faces_relaxed(n, dprime, expected):
    assert counting.faces_relaxed(n, dprime) == expected


def test_avg_teaching():
    assert counting.avg_teaching(3, 2) == Fraction(18, 7)
    assert counting.avg_teaching(9, 2) == Fraction(81, 23)
    for n in range(1, 12):
        value = counting.avg_teaching(n, 1)
        assert value == Fraction(2 * n, n + 1)
        assert value < 2


def test_average_bracket():
    for dprime in range(1, 4):
        for n in range(2 * dprime + 1, 21):
            low, high = counting.average_bounds(n, dprime)
            assert low == Fraction(dprime, 3)
            assert high == 2 * dprime
            assert low <= counting.avg_teaching(n, dprime) <= high


@pytest.mark.parametrize('n, dprime, lower, upper', [
    (7, 2, 15, Fraction(63, 2)),
    (5, 2, 6, 20),
])
def test_region_bounds(n, dprime, lower, upper):
    assert counting.region_bounds(n, dprime) == (lower, upper)
    assert lower <= counting.regions_relaxed(n, dprime) <= upper


def test_region_bounds_bracket():
    for dprime in range(1, 6):
        for n in range(2 * dprime + 1, 25):
            lower, upper = counting.region_bounds(n, dprime)
            assert lower <= counting.regions_relaxed(n, dprime) <= upper


@pytest.mark.parametrize('func, args', [
    (counting.region_bounds, (4, 2)),
    (counting.average_bounds, (4, 2)),
    (counting.ratio_bound_check, (4, 2)),
    (counting.q_general, (0, 2)),
    (counting.regions_relaxed, (3, 0)),
    (counting.faces_relaxed, (0, 1)),
    (counting.ranking_cells, (0, 1)),
    (counting.ranking_faces, (1, 1)),
    (counting.cover_count, (3, 0)),
])
def test_domain_errors(func, args):
    with pytest.raises(DomainError):
        func(*args)


def test_domain_error_is_value_error():
    with pytest.raises(ValueError):
        counting.region_bounds(2, 1)


@pytest.mark.parametrize('k, d', [(5, 2), (10, 3)])
def test_ratio_bound_check(k, d):
    assert counting.ratio_bound_check(k, d)


def test_ratio_bound_check_domain():
    for d in range(1, 21):
        for k in range(2 * d + 1, 61):
            assert counting.ratio_bound_check(k, d)


@pytest.mark.parametrize('n, d, expected', [
    (3, 2, 6),
    (3, 1, 4),
    (4, 2, 18),
    (5, 2, 46),
    (2, 1, 2),
    (4, 3, 24),
    (5, 0, 1),
])
def test_ranking_cells(n, d, expected):
    assert counting.ranking_cells(n, d) == expected


@pytest.mark.parametrize('n, d, expected', [
    (3, 2, 6),
    (4, 2, 24),
    (2, 1, 1),
    (5, 2, 70),
])
def test_ranking_faces(n, d, expected):
    assert counting.ranking_faces(n, d) == expected


def test_cover_count():
    assert counting.cover_count(4, 2) == 8
    assert counting.cover_count(4, 3) == 14
    for n in range(1, 8):
        assert counting.cover_count(n, n) == 2 ** n
        assert counting.cover_count(n, 2) == 2 * n
        assert counting.cover_count(n, 3) == 2 * sum(
            comb(n - 1, i) for i in range(3))
