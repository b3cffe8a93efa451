#
# Copyright (C) 2026 the polyteach authors and contributors
#
# This module is part of polyteach and is released under
# the BSD License: https://opensource.org/licenses/BSD-3-Clause

"""Dense linear algebra over the rationals."""

from dataclasses import dataclass
from fractions import Fraction

from polyteach.exact.rational import as_vector
from polyteach.exceptions import DimensionMismatch

UNIQUE = 'unique'
AFFINE_SUBSPACE = 'affine-subspace'
INFEASIBLE = 'infeasible'


class Matrix:
    """Immutable row-major matrix of Fractions."""

    __slots__ = ('rows', 'nrows', 'ncols')

    def __init__(self, rows, ncols=None):
        rows = tuple(as_vector(row) for row in rows)
        if ncols is None:
            if not rows:
                raise DimensionMismatch('Cannot infer the width of an '
                                        'empty matrix')
            ncols = len(rows[0])
        for row in rows:
            if len(row) != ncols:
                raise DimensionMismatch('Ragged matrix: expected {} columns, '
                                        'got {}'.format(ncols, len(row)))
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    def __repr__(self):
        return '<Matrix {}x{} at 0x{:2X}>'.format(self.nrows, self.ncols,
                                                  id(self))

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ncols, self.rows))

    def __getitem__(self, idx):
        return self.rows[idx]


@dataclass(frozen=True)
class LinearSystemSolution:
    """Outcome of :func:`solve_affine`.

    ``particular`` is ``None`` for infeasible systems and ``basis`` spans
    the null space of the coefficient matrix.
    """

    kind: str
    particular: tuple = None
    basis: tuple = ()

    @property
    def dimension(self):
        """Dimension of the solution flat, ``-1`` when empty."""
        if self.kind == INFEASIBLE:
            return -1
        return len(self.basis)


def _rref(rows, ncols):
    """Reduced row echelon form on the first *ncols* columns.

    Returns the reduced rows (as lists) and the list of pivot columns.
    """
    rows = [list(row) for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0),
                     None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m):
    """Exact rank of matrix *m*."""
    if not isinstance(m, Matrix):
        m = Matrix(m)
    _, pivots = _rref(m.rows, m.ncols)
    return len(pivots)


def solve_affine(m, rhs):
    """Solve ``m . y = rhs`` exactly.

    Returns a :class:`LinearSystemSolution` whose kind is ``unique``,
    ``affine-subspace`` or ``infeasible``.
    """
    if not isinstance(m, Matrix):
        m = Matrix(m)
    rhs = as_vector(rhs)
    if len(rhs) != m.nrows:
        raise DimensionMismatch('Right hand side has length {}, matrix has '
                                '{} rows'.format(len(rhs), m.nrows))
    augmented = [row + (b,) for row, b in zip(m.rows, rhs)]
    reduced, pivots = _rref(augmented, m.ncols)
    for row in reduced[len(pivots):]:
        if row[-1] != 0:
            return LinearSystemSolution(INFEASIBLE)

    particular = [Fraction(0)] * m.ncols
    for r, c in enumerate(pivots):
        particular[c] = reduced[r][-1]

    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -reduced[r][f]
        basis.append(tuple(v))

    kind = AFFINE_SUBSPACE if free else UNIQUE
    return LinearSystemSolution(kind, tuple(particular), tuple(basis))
