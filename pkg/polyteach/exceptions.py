#
# Copyright (C) 2026 the polyteach authors and contributors
#
# This module is part of polyteach and is released under
# the BSD License: https://opensource.org/licenses/BSD-3-Clause

"""Exceptions used in this package."""


class PolyTeachError(Exception):
    """Base class for exceptions in this package."""


class DimensionMismatch(PolyTeachError):
    """Vectors, matrices or hyperplanes of incompatible dimension."""


class DomainError(PolyTeachError, ValueError):
    """A counting function was called outside its valid domain."""


class ParseError(PolyTeachError):
    """Input file or value does not match the expected schema."""


class ConfigError(PolyTeachError):
    """Invalid experiment configuration."""


# arrangements

class GenerationFailed(PolyTeachError):
    """A random generator exhausted its retry budget."""


class ConstructionFailed(PolyTeachError):
    """The worst-case construction ran out of rational sphere points."""


class OnHyperplane(PolyTeachError):
    """A point lies exactly on a hyperplane of the arrangement."""


class DegenerateChart(PolyTeachError):
    """A hyperplane cannot be parameterized by an affine chart."""


class PositionViolation(PolyTeachError):
    """Input is not in the required relaxed general position."""


# teaching and learning

class EmptyConstraintRegion(PolyTeachError):
    """The labeled constraints define an empty open polytope."""


class ContradictoryQueries(PolyTeachError):
    """A hyperplane was given both labels."""


class StillAmbiguous(PolyTeachError):
    """A label was imputed for a hyperplane that cuts the current cell."""


# dichotomies

class ZeroLastPoint(PolyTeachError):
    """The reference point x^(n) is the zero vector."""


class BasisPoint(PolyTeachError):
    """The point maps to the hyperplane at infinity."""


class NonpositiveLastCoordinate(PolyTeachError):
    """Separator violates the positive-label convention for x^(n)."""


class NotSeparable(PolyTeachError):
    """The dichotomy is not homogeneously linearly separable."""


# rankings

class DuplicateObjects(PolyTeachError):
    """Two embedded objects coincide."""


class OnBisector(PolyTeachError):
    """Reference point is equidistant from two objects."""


class InconsistentCell(PolyTeachError):
    """A cell witness ranking does not reproduce the cell's signs."""
