#
# Copyright (C) 2026 the polyteach authors and contributors
#
# This module is part of polyteach and is released under
# the BSD License: https://opensource.org/licenses/BSD-3-Clause

"""Exact rational scalars and vectors.

All geometric predicates in polyteach work on :class:`fractions.Fraction`
values, which keep numerator and denominator in lowest terms after every
operation.  Floats are rejected on the way in so that no rounding error
can leak into a sign test.
"""

import re
from fractions import Fraction

from polyteach.exceptions import DimensionMismatch, ParseError

Rational = Fraction

RATIONAL_REGEX = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')


def as_rational(value):
    """Convert *value* to a :class:`Fraction` without rounding.

    Accepts ints, Fractions and strings of the form ``"p"`` or ``"p/q"``.
    Floats are refused because their binary expansion is rarely what the
    caller meant.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError('Expected a rational, got {!r}'.format(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    # numpy integers and friends
    if hasattr(value, '__index__'):
        return Fraction(int(value))
    raise TypeError('Expected a rational, got {!r}'.format(value))


def parse_rational(text, context=None):
    """Parse ``"p/q"`` or ``"p"`` into a Fraction.

    *context* names the field being parsed and is included in the
    :class:`~polyteach.exceptions.ParseError` message.
    """
    where = ' in {}'.format(context) if context else ''
    if not isinstance(text, str):
        raise ParseError('Expected a rational string{}, got {!r}'.format(
            where, text))
    m = RATIONAL_REGEX.match(text)
    if m is None:
        raise ParseError('Malformed rational {!r}{}'.format(text, where))
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ParseError('Zero denominator in {!r}{}'.format(text, where))
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(value):
    """Canonical string form: ``"p/q"`` or ``"p"`` when q is 1."""
    return str(Fraction(value))


def as_vector(values):
    """Return *values* as a tuple of Fractions."""
    return tuple(as_rational(v) for v in values)


def dot(u, v):
    if len(u) != len(v):
        raise DimensionMismatch('Cannot multiply vectors of length {} and {}'
                                .format(len(u), len(v)))
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def sign(value):
    """-1, 0 or +1."""
    return (value > 0) - (value < 0)


def to_decimal(value, digits=12):
    """Decimal rendering for reports; floats appear nowhere else."""
    return float('{:.{}g}'.format(float(Fraction(value)), digits))
