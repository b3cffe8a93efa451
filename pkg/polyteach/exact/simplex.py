#
# Copyright (C) 2026 the polyteach authors and contributors
#
# This module is part of polyteach and is released under
# the BSD License: https://opensource.org/licenses/BSD-3-Clause

"""Strict feasibility of open polyhedra by exact simplex.

A system of strict inequalities ``s_i (eta_i . z - b_i) > 0`` is feasible
iff the homogenized system

    s_i (eta_i . y - b_i t) >= eps,   t >= eps,   eps <= 1

has a solution with ``eps > 0``.  Maximizing ``eps`` over that system
starts from the origin, which is already a basic feasible solution, so no
phase one is needed.  Any optimum with ``eps > 0`` yields the witness
``z = y / t``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from polyteach.exact.rational import as_rational, as_vector, dot
from polyteach.exceptions import DimensionMismatch

logger = logging.getLogger(__name__)

GREATER = '>'
LESS = '<'
SENSES = (GREATER, LESS)

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Constraint:
    """Strict inequality ``normal . z > bias`` (or ``<``)."""

    normal: tuple
    bias: Fraction
    sense: str = GREATER

    @classmethod
    def signed(cls, normal, bias, sign):
        """Constraint on the side of ``normal . z = bias`` given by *sign*."""
        return cls(as_vector(normal), as_rational(bias),
                   GREATER if sign > 0 else LESS)

    @property
    def sign(self):
        return 1 if self.sense == GREATER else -1

    def slack(self, point):
        """Signed slack; positive iff *point* strictly satisfies it."""
        return self.sign * (dot(self.normal, point) - self.bias)

    def holds(self, point):
        return self.slack(point) > 0


class StrictLP:
    """A list of strict constraints in R^dimension."""

    __slots__ = ('dimension', 'constraints')

    def __init__(self, dimension, constraints=()):
        constraints = tuple(constraints)
        for c in constraints:
            if c.sense not in SENSES:
                raise ValueError('Unknown sense {!r}'.format(c.sense))
            if len(c.normal) != dimension:
                raise DimensionMismatch(
                    'Constraint normal has length {}, expected {}'.format(
                        len(c.normal), dimension))
            if all(v == 0 for v in c.normal):
                raise ValueError('Constraint normals must be nonzero')
        self.dimension = dimension
        self.constraints = constraints

    def __len__(self):
        return len(self.constraints)

    def extended(self, *constraints):
        """Returns a new StrictLP with *constraints* appended."""
        return StrictLP(self.dimension, self.constraints + constraints)

    def holds(self, point):
        return all(c.holds(point) for c in self.constraints)


class _Tableau:
    """Dictionary-form simplex tableau maximizing ``c . x_N``.

    Basic variables satisfy ``x_B = b - A x_N``; all variables are
    nonnegative.  Pivoting follows Bland's rule.
    """

    def __init__(self, A, b, c):
        self.A = A
        self.b = b
        self.c = c
        self.m = len(A)
        self.n = len(c)
        self.nonbasic = list(range(self.n))
        self.basic = list(range(self.n, self.n + self.m))
        self.value = _ZERO
        self.pivots = 0

    def pivot(self, i, j):
        A, b, c = self.A, self.b, self.c
        row = A[i]
        piv = row[j]
        row = [v / piv for v in row]
        row[j] = 1 / piv
        b_i = b[i] / piv
        A[i] = row
        b[i] = b_i
        for k in range(self.m):
            if k == i:
                continue
            f = A[k][j]
            if f == 0:
                continue
            A[k] = [a - f * r for a, r in zip(A[k], row)]
            A[k][j] = -f / piv
            b[k] -= f * b_i
        f = c[j]
        self.value += f * b_i
        self.c = [a - f * r for a, r in zip(c, row)]
        self.c[j] = -f / piv
        self.nonbasic[j], self.basic[i] = self.basic[i], self.nonbasic[j]
        self.pivots += 1

    def solve(self):
        while True:
            entering = [(self.nonbasic[j], j) for j in range(self.n)
                        if self.c[j] > 0]
            if not entering:
                return
            _, j = min(entering)
            ratios = [(self.b[i] / self.A[i][j], self.basic[i], i)
                      for i in range(self.m) if self.A[i][j] > 0]
            if not ratios:
                # The objective is capped, so this cannot happen.
                raise RuntimeError('Unbounded slack maximization')
            _, _, i = min(ratios)
            self.pivot(i, j)

    def values(self):
        x = [_ZERO] * (self.n + self.m)
        for i, var in enumerate(self.basic):
            x[var] = self.b[i]
        return x


def max_slack(lp):
    """Maximize the common slack of *lp*.

    Returns ``(eps, witness)`` where ``eps`` is the optimal slack in
    ``[0, 1]`` and ``witness`` a point attaining it (``None`` if
    ``eps == 0``).
    """
    d = lp.dimension
    # variables: y+ (d), y- (d), t, eps
    n = 2 * d + 2
    t_idx, eps_idx = 2 * d, 2 * d + 1
    A, b = [], []
    for con in lp.constraints:
        s = con.sign
        row = [-s * v for v in con.normal]
        row += [s * v for v in con.normal]
        row += [s * con.bias, _ONE]
        A.append(row)
        b.append(_ZERO)
    row = [_ZERO] * n
    row[t_idx], row[eps_idx] = -_ONE, _ONE
    A.append(row)
    b.append(_ZERO)
    row = [_ZERO] * n
    row[eps_idx] = _ONE
    A.append(row)
    b.append(_ONE)
    c = [_ZERO] * n
    c[eps_idx] = _ONE

    tableau = _Tableau(A, b, c)
    tableau.solve()
    x = tableau.values()
    eps = x[eps_idx]
    logger.debug('slack LP with %d constraints in R^%d: eps=%s after %d '
                 'pivots', len(lp), d, eps, tableau.pivots)
    if eps <= 0:
        return _ZERO, None
    t = x[t_idx]
    witness = tuple((x[k] - x[d + k]) / t for k in range(d))
    return eps, witness


def strict_feasible(lp):
    """Exact interior witness of the open polyhedron *lp*, or ``None``.

    Every returned point satisfies each constraint strictly.
    """
    if not lp.constraints:
        return (_ZERO,) * lp.dimension
    _, witness = max_slack(lp)
    return witness
