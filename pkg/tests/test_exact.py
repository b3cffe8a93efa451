from fractions import Fraction

import pytest

from polyteach.exact import (AFFINE_SUBSPACE, INFEASIBLE, UNIQUE, Constraint,
                             Matrix, StrictLP, as_rational, dot,
                             format_rational, max_slack, parse_rational, rank,
                             solve_affine, strict_feasible)
from polyteach.exact.rational import to_decimal
from polyteach.exceptions import DimensionMismatch, ParseError


@pytest.mark.parametrize('text, expected', [
    ('3/4', Fraction(3, 4)),
    ('-2', Fraction(-2)),
    ('6/4', Fraction(3, 2)),
    (' 7 / 2 ', Fraction(7, 2)),
    ('+5', Fraction(5)),
])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize('text', ['1/0', 'abc', '1.5', '', '1/-2', '2/'])
def test_parse_rational_malformed(text):
    with pytest.raises(ParseError):
        parse_rational(text)


def test_parse_rational_context():
    with pytest.raises(ParseError, match=r'hyperplanes\[0\]\.bias'):
        parse_rational('1/0', 'hyperplanes[0].bias')


@pytest.mark.parametrize('value, expected', [
    (Fraction(6, 3), '2'),
    (Fraction(-1, 2), '-1/2'),
    (0, '0'),
    (Fraction(22, 7), '22/7'),
])
def test_format_rational(value, expected):
    assert format_rational(value) == expected


def test_format_parse_roundtrip():
    for value in (Fraction(-13, 17), Fraction(5), Fraction(0)):
        assert parse_rational(format_rational(value)) == value


@pytest.mark.parametrize('value', [0.5, True, None, [1]])
def test_as_rational_refuses(value):
    with pytest.raises(TypeError):
        as_rational(value)


def test_as_rational_accepts():
    assert as_rational(3) == 3
    assert as_rational('1/3') == Fraction(1, 3)
    assert as_rational(Fraction(2, 5)) == Fraction(2, 5)


def test_dot_mismatch():
    assert dot((1, 2), (3, 4)) == 11
    with pytest.raises(DimensionMismatch):
        dot((1, 2), (1, 2, 3))


def test_to_decimal():
    assert to_decimal(Fraction(1, 3)) == pytest.approx(0.333333333333)
    assert isinstance(to_decimal(Fraction(18, 7)), float)


@pytest.mark.parametrize('rows, expected', [
    ([[1, 2], [2, 4]], 1),
    ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3),
    ([[0, 0], [0, 0]], 0),
    ([[1, 1, 0], [0, 1, 1], [1, 2, 1]], 2),
    ([['1/2', '1/3'], [3, 2]], 1),
])
def test_rank(rows, expected):
    assert rank(Matrix(rows)) == expected


def test_matrix_ragged():
    with pytest.raises(DimensionMismatch):
        Matrix([[1, 2], [3]])


def test_solve_affine_unique():
    sol = solve_affine(Matrix([[1, 0], [0, 1]]), [1, 2])
    assert sol.kind == UNIQUE
    assert sol.particular == (1, 2)
    assert sol.dimension == 0


def test_solve_affine_subspace():
    m = Matrix([[1, 1]])
    sol = solve_affine(m, [1])
    assert sol.kind == AFFINE_SUBSPACE
    assert sol.dimension == 1
    assert dot(m[0], sol.particular) == 1
    assert dot(m[0], sol.basis[0]) == 0


def test_solve_affine_infeasible():
    sol = solve_affine(Matrix([[1, 0], [1, 0]]), [0, 1])
    assert sol.kind == INFEASIBLE
    assert sol.dimension == -1


def test_solve_affine_rhs_mismatch():
    with pytest.raises(DimensionMismatch):
        solve_affine(Matrix([[1, 0]]), [1, 2])


def _lp(*rows):
    return StrictLP(len(rows[0][0]), [Constraint.signed(normal, bias, s)
                                      for normal, bias, s in rows])


def test_strict_feasible_interval():
    lp = _lp(((1,), 0, 1), ((1,), 1, -1))
    w = strict_feasible(lp)
    assert w is not None
    assert 0 < w[0] < 1
    assert lp.holds(w)


def test_strict_feasible_infeasible():
    assert strict_feasible(_lp(((1,), 1, 1), ((1,), 0, -1))) is None


def test_strict_feasible_open_only():
    # x > 0 and x < 0 share only a boundary point
    assert strict_feasible(_lp(((1,), 0, 1), ((1,), 0, -1))) is None


def test_strict_feasible_no_constraints():
    assert strict_feasible(StrictLP(3)) == (0, 0, 0)


def test_strict_feasible_triangle():
    lp = _lp(((1, 0), 0, 1), ((0, 1), 0, 1), ((1, 1), 1, -1))
    w = strict_feasible(lp)
    assert all(isinstance(c, Fraction) for c in w)
    assert w[0] > 0 and w[1] > 0 and w[0] + w[1] < 1


def test_strict_feasible_unbounded_cone():
    lp = _lp(((1, -1), 0, 1), ((1, 1), 5, 1))
    w = strict_feasible(lp)
    assert lp.holds(w)


def test_max_slack_capped():
    eps, w = max_slack(_lp(((1,), 0, 1)))
    assert 0 < eps <= 1
    assert w[0] > 0


def test_strict_lp_rejects():
    with pytest.raises(DimensionMismatch):
        StrictLP(2, [Constraint.signed((1,), 0, 1)])
    with pytest.raises(ValueError):
        StrictLP(1, [Constraint.signed((0,), 0, 1)])


def test_constraint_sides():
    c = Constraint.signed((1, 1), 1, -1)
    assert c.holds((0, 0))
    assert not c.holds((1, 0))
    assert c.slack((0, 0)) == 1
