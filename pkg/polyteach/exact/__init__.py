#
# Copyright (C) 2026 the polyteach authors and contributors
#
# This module is part of polyteach and is released under
# the BSD License: https://opensource.org/licenses/BSD-3-Clause

from polyteach.exact.linalg import Matrix
from polyteach.exact.linalg import LinearSystemSolution
from polyteach.exact.linalg import rank
from polyteach.exact.linalg import solve_affine
from polyteach.exact.linalg import UNIQUE, AFFINE_SUBSPACE, INFEASIBLE

from polyteach.exact.rational import Rational
from polyteach.exact.rational import as_rational
from polyteach.exact.rational import as_vector
from polyteach.exact.rational import dot
from polyteach.exact.rational import format_rational
from polyteach.exact.rational import parse_rational
from polyteach.exact.rational import sign

from polyteach.exact.simplex import Constraint
from polyteach.exact.simplex import StrictLP
from polyteach.exact.simplex import max_slack
from polyteach.exact.simplex import strict_feasible
from polyteach.exact.simplex import GREATER, LESS

__all__ = [
    'Matrix',
    'LinearSystemSolution',
    'rank',
    'solve_affine',
    'UNIQUE',
    'AFFINE_SUBSPACE',
    'INFEASIBLE',

    'Rational',
    'as_rational',
    'as_vector',
    'dot',
    'format_rational',
    'parse_rational',
    'sign',

    'Constraint',
    'StrictLP',
    'max_slack',
    'strict_feasible',
    'GREATER',
    'LESS',
]
