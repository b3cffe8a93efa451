#
# Copyright (C) 2026 the polyteach authors and contributors
#
# This module is part of polyteach and is released under
# the BSD License: https://opensource.org/licenses/BSD-3-Clause

"""Exact counts of regions, faces and average teaching complexity.

All functions return Python ints or :class:`fractions.Fraction` values;
nothing here is ever rounded.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from polyteach.exceptions import DomainError


def _check(condition, message, *args):
    if not condition:
        raise DomainError(message.format(*args))


def _binomial_sum(n, k):
    """sum_{i=0}^{k} C(n, i)."""
    return sum(comb(n, i) for i in range(k + 1))


def q_general(n, d):
    """Regions of n hyperplanes in general position in R^d."""
    _check(n >= 1 and d >= 0, 'q_general needs n >= 1, d >= 0 (got {}, {})',
           n, d)
    if n <= d:
        return 2 ** n
    return _binomial_sum(n, d)


def regions_relaxed(n, dprime):
    """Regions of n hyperplanes in d'-relaxed general position."""
    _check(n >= 1 and dprime >= 1,
           'regions_relaxed needs n >= 1, dprime >= 1 (got {}, {})',
           n, dprime)
    return _binomial_sum(n, dprime)


def faces_relaxed(n, dprime):
    """Faces of n hyperplanes in d'-relaxed general position.

    Each hyperplane is cut by the other n-1 into a (d'-1)-relaxed
    arrangement, giving ``n * sum_{i<d'} C(n-1, i)``; for d' = 1 that
    is just n.
    """
    _check(n >= 1 and dprime >= 1,
           'faces_relaxed needs n >= 1, dprime >= 1 (got {}, {})', n, dprime)
    return n * _binomial_sum(n - 1, dprime - 1)


def avg_teaching(n, dprime):
    """Average teaching-set size over all regions: 2F / r."""
    return Fraction(2 * faces_relaxed(n, dprime), regions_relaxed(n, dprime))


def region_bounds(n, dprime):
    """``(C(n-1, d'), C(n, d') (n-d'+1) / (n-2d'+1))`` for n > 2d'."""
    _check(n > 2 * dprime >= 2,
           'region_bounds needs n > 2*dprime >= 2 (got n={}, dprime={})',
           n, dprime)
    lower = comb(n - 1, dprime)
    upper = Fraction(comb(n, dprime) * (n - dprime + 1), n - 2 * dprime + 1)
    return lower, upper


def average_bounds(n, dprime):
    """Bracket ``(d'/3, 2d')`` holding the average teaching size for n > 2d'.

    The constants come from bounding 2F/r with :func:`region_bounds`.
    """
    _check(n > 2 * dprime >= 2,
           'average_bounds needs n > 2*dprime >= 2 (got n={}, dprime={})',
           n, dprime)
    return Fraction(dprime, 3), Fraction(2 * dprime)


def ratio_bound_check(k, d):
    """Whether ``Q(k, d-1) / Q(k, d) <= 2d / k`` (always true for k > 2d)."""
    _check(d >= 1 and k > 2 * d,
           'ratio_bound_check needs d >= 1 and k > 2d (got k={}, d={})', k, d)
    return Fraction(q_general(k, d - 1), q_general(k, d)) <= Fraction(2 * d, k)


@lru_cache(maxsize=None)
def ranking_cells(n, d):
    """Cells of the bisector arrangement of n generic objects in R^d.

    ``C(n, d) = C(n-1, d) + (n-1) C(n-1, d-1)`` with ``C(n, d) = n!`` for
    n <= d+1 and ``C(n, 0) = 1``.
    """
    _check(n >= 1 and d >= 0, 'ranking_cells needs n >= 1, d >= 0 '
           '(got {}, {})', n, d)
    if d == 0:
        return 1
    if n <= d + 1:
        return factorial(n)
    return ranking_cells(n - 1, d) + (n - 1) * ranking_cells(n - 1, d - 1)


def ranking_faces(n, d):
    """Faces of the bisector arrangement: ``C(n, 2) C(n-1, d-1)``."""
    _check(n >= 2 and d >= 1, 'ranking_faces needs n >= 2, d >= 1 '
           '(got {}, {})', n, d)
    return comb(n, 2) * ranking_cells(n - 1, d - 1)


def cover_count(n, d):
    """Homogeneously separable dichotomies of n points in general position.

    ``2 sum_{i<d} C(n-1, i)``: two labelings per separable class.
    """
    _check(n >= 1 and d >= 1, 'cover_count needs n >= 1, d >= 1 '
           '(got {}, {})', n, d)
    return 2 * _binomial_sum(n - 1, d - 1)
