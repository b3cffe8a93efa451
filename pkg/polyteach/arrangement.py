#
# Copyright (C) 2026 the polyteach authors and contributors
#
# This module is part of polyteach and is released under
# the BSD License: https://opensource.org/licenses/BSD-3-Clause

"""Hyperplane arrangements, their regions and faces."""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from polyteach import utils
from polyteach.exact import (Constraint, Matrix, StrictLP, as_rational,
                             as_vector, dot, rank, sign, solve_affine,
                             strict_feasible)
from polyteach.exceptions import (ConstructionFailed, DegenerateChart,
                                  DimensionMismatch, DomainError,
                                  GenerationFailed, OnHyperplane)

logger = logging.getLogger(__name__)

RELAXED_GENERAL = 'relaxed-general'
VIOLATION = 'violation'

# exhaustive sign-vector oracle limit
MAX_EXHAUSTIVE = 16


@dataclass(frozen=True)
class Hyperplane:
    """The hyperplane ``{z | normal . z = bias}``."""

    normal: tuple
    bias: Fraction
    id: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'normal', as_vector(self.normal))
        object.__setattr__(self, 'bias', as_rational(self.bias))
        if all(v == 0 for v in self.normal):
            raise ValueError('Hyperplane normal must be nonzero')

    @property
    def dimension(self):
        return len(self.normal)

    def evaluate(self, point):
        """``normal . point - bias``."""
        return dot(self.normal, point) - self.bias

    def side(self, point):
        """+1, -1, or 0 when *point* lies on the hyperplane."""
        return sign(self.evaluate(point))

    def contains(self, point):
        return self.evaluate(point) == 0

    def constraint(self, label):
        """The open halfspace labelled *label*."""
        return Constraint.signed(self.normal, self.bias, label)

    def with_id(self, id_):
        return Hyperplane(self.normal, self.bias, id_)


@dataclass(frozen=True)
class PositionReport:
    """Result of :func:`verify_position`.

    On ``relaxed-general`` verdicts ``dprime`` is the class; on
    violations ``subset`` lists the offending hyperplane ids and
    ``observed_dimension`` the dimension of their intersection.
    """

    verdict: str
    dprime: int = None
    subset: tuple = ()
    observed_dimension: int = None

    @property
    def is_relaxed_general(self):
        return self.verdict == RELAXED_GENERAL

    def __str__(self):
        if self.is_relaxed_general:
            return '{}({})'.format(RELAXED_GENERAL, self.dprime)
        return '{}: hyperplanes {} meet in dimension {}'.format(
            VIOLATION, list(self.subset), self.observed_dimension)


class Region:
    """An open cell given by its full sign vector and an interior point.

    Two regions of one arrangement are equal iff their signs agree.
    """

    __slots__ = ('signs', 'witness')

    def __init__(self, signs, witness):
        self.signs = tuple(signs)
        self.witness = as_vector(witness)

    def __eq__(self, other):
        return isinstance(other, Region) and self.signs == other.signs

    def __hash__(self):
        return hash(self.signs)

    def __len__(self):
        return len(self.signs)

    def __repr__(self):
        return "<Region '{}' at 0x{:2X}>".format(self.signature, id(self))

    @property
    def signature(self):
        return utils.signature(self.signs)


class Arrangement:
    """An ordered list of hyperplanes in R^d.

    The position class is computed lazily on first access unless the
    constructor already received a verified report.
    """

    __slots__ = ('hyperplanes', 'dimension', '_position')

    def __init__(self, hyperplanes, dimension=None, position=None):
        planes = []
        for idx, h in enumerate(hyperplanes):
            if not isinstance(h, Hyperplane):
                normal, bias = h
                h = Hyperplane(normal, bias)
            planes.append(h.with_id(idx))
        if dimension is None:
            if not planes:
                raise DimensionMismatch('Cannot infer the dimension of an '
                                        'empty arrangement')
            dimension = planes[0].dimension
        for h in planes:
            if h.dimension != dimension:
                raise DimensionMismatch(
                    'Hyperplane {} lives in R^{}, expected R^{}'.format(
                        h.id, h.dimension, dimension))
        self.hyperplanes = tuple(planes)
        self.dimension = dimension
        self._position = position

    @classmethod
    def from_rows(cls, rows, dimension=None):
        """Build from coefficient rows ``(eta_1, ..., eta_d, b)``."""
        return cls([(row[:-1], row[-1]) for row in rows], dimension)

    def __len__(self):
        return len(self.hyperplanes)

    def __iter__(self):
        return iter(self.hyperplanes)

    def __getitem__(self, idx):
        return self.hyperplanes[idx]

    def __eq__(self, other):
        return (isinstance(other, Arrangement)
                and self.dimension == other.dimension
                and self.hyperplanes == other.hyperplanes)

    def __hash__(self):
        return hash((self.dimension, self.hyperplanes))

    def __repr__(self):
        return '<Arrangement n={} d={} at 0x{:2X}>'.format(
            len(self), self.dimension, id(self))

    @property
    def position(self):
        """The :class:`PositionReport`, computed on first use."""
        if self._position is None:
            self._position = verify_position(self)
        return self._position

    @property
    def position_class(self):
        """Verified d', or ``None`` if the arrangement is in no class."""
        return self.position.dprime

    def signed_lp(self, signs, exclude=()):
        """StrictLP of the halfspaces selected by *signs*.

        *signs* maps hyperplane ids to labels (a full sign vector works
        too); ids in *exclude* are skipped.
        """
        if not isinstance(signs, dict):
            signs = dict(enumerate(signs))
        return StrictLP(self.dimension, [
            self.hyperplanes[i].constraint(s)
            for i, s in sorted(signs.items()) if i not in exclude])


def intersection_dimension(hyperplanes, dimension):
    """Dimension of the common flat of *hyperplanes*, -1 if empty."""
    hyperplanes = list(hyperplanes)
    if not hyperplanes:
        return dimension
    m = Matrix([h.normal for h in hyperplanes], dimension)
    return solve_affine(m, [h.bias for h in hyperplanes]).dimension


def verify_position(a):
    """Position class d' of *a*.

    Every k <= d' hyperplanes must meet in a (d-k)-flat and every d'+1 of
    them must have empty intersection.  With n <= d hyperplanes all
    classes d' >= n coincide and the rank n of the normals is reported.
    Returns a violation report with an offending subset when no d' fits.
    """
    n, d = len(a), a.dimension
    ids = range(n)

    def dim_of(subset):
        return intersection_dimension((a[i] for i in subset), d)

    dprime = min(n, d) if n else d
    for k in range(1, min(n, d) + 1):
        bad = next((s for s in itertools.combinations(ids, k)
                    if dim_of(s) != d - k), None)
        if bad is not None:
            dprime = k - 1
            break
    if dprime == 0:
        # unreachable for nonzero normals
        return PositionReport(VIOLATION, subset=bad,
                              observed_dimension=dim_of(bad))

    for subset in itertools.combinations(ids, dprime + 1):
        observed = dim_of(subset)
        if observed >= 0:
            logger.debug('position violation: %s meet in dimension %d',
                         subset, observed)
            return PositionReport(VIOLATION, subset=subset,
                                  observed_dimension=observed)
    return PositionReport(RELAXED_GENERAL, dprime=dprime)


def enumerate_regions(a):
    """All open cells of *a*, sorted by sign vector (``+`` before ``-``).

    Depth-first search over sign-vector prefixes; a prefix is extended
    only if its open polyhedron is nonempty.  The parent's witness
    already certifies one of the two children, so at most one LP is
    solved per child.
    """
    n = len(a)
    regions = []

    def visit(signs, lp, witness):
        if len(signs) == n:
            regions.append(Region(signs, witness))
            return
        h = a[len(signs)]
        value = h.evaluate(witness)
        for s in (1, -1):
            child = lp.extended(h.constraint(s))
            if value * s > 0:
                w = witness
            else:
                w = strict_feasible(child)
            if w is not None:
                visit(signs + (s,), child, w)

    visit((), StrictLP(a.dimension), (Fraction(0),) * a.dimension)
    regions.sort(key=lambda r: r.signature)
    logger.debug('enumerated %d regions of %r', len(regions), a)
    return regions


def count_regions_exhaustive(a):
    """Region count by testing all 2^n sign vectors independently."""
    if len(a) > MAX_EXHAUSTIVE:
        raise DomainError('Exhaustive region count needs n <= {}, got {}'
                          .format(MAX_EXHAUSTIVE, len(a)))
    return sum(1 for signs in itertools.product((1, -1), repeat=len(a))
               if strict_feasible(a.signed_lp(signs)) is not None)


def find_region(a, signs):
    """Region with sign vector *signs*, or ``None`` if that cell is empty."""
    witness = strict_feasible(a.signed_lp(signs))
    if witness is None:
        return None
    return Region(signs, witness)


def locate_region(a, point):
    """The region containing *point*, which becomes its witness."""
    point = as_vector(point)
    if len(point) != a.dimension:
        raise DimensionMismatch('Point has {} coordinates, arrangement '
                                'lives in R^{}'.format(len(point),
                                                       a.dimension))
    signs = []
    for h in a:
        s = h.side(point)
        if s == 0:
            raise OnHyperplane('Point {} lies on hyperplane {}'.format(
                [str(c) for c in point], h.id))
        signs.append(s)
    return Region(signs, point)


class Chart:
    """Affine parameterization of one hyperplane by d-1 coordinates.

    The pivot is the coordinate of largest absolute normal entry (lowest
    index on ties); the remaining coordinates are free.
    """

    def __init__(self, hyperplane):
        normal = hyperplane.normal
        if all(v == 0 for v in normal):
            raise DegenerateChart('Hyperplane {} has a zero normal'.format(
                hyperplane.id))
        self.hyperplane = hyperplane
        self.pivot = max(range(len(normal)),
                         key=lambda j: (abs(normal[j]), -j))
        self.free = tuple(j for j in range(len(normal)) if j != self.pivot)

    def lift(self, u):
        """Chart coordinates -> point of R^d on the hyperplane."""
        h, p = self.hyperplane, self.pivot
        z = [Fraction(0)] * h.dimension
        for j, value in zip(self.free, u):
            z[j] = value
        z[p] = (h.bias - sum((h.normal[j] * z[j] for j in self.free),
                             Fraction(0))) / h.normal[p]
        return tuple(z)

    def pull_back(self, other):
        """Restriction of *other* to the chart as ``(normal, bias)``."""
        h, p = self.hyperplane, self.pivot
        ratio = other.normal[p] / h.normal[p]
        normal = tuple(other.normal[j] - ratio * h.normal[j]
                       for j in self.free)
        bias = other.bias - ratio * h.bias
        return normal, bias


def restrict_to(a, h):
    """Arrangement induced on hyperplane *h* by the other hyperplanes.

    Returns ``(chart, restricted, source_ids)``; hyperplanes parallel to
    *h* do not cut it and are dropped.
    """
    chart = Chart(h)
    rows, source_ids = [], []
    for g in a:
        if g.id == h.id:
            continue
        normal, bias = chart.pull_back(g)
        if all(v == 0 for v in normal):
            if bias == 0:
                raise DegenerateChart('Hyperplanes {} and {} coincide'.format(
                    h.id, g.id))
            continue
        rows.append((normal, bias))
        source_ids.append(g.id)
    return chart, Arrangement(rows, a.dimension - 1), tuple(source_ids)


@dataclass(frozen=True)
class FaceEnumeration:
    """Faces of an arrangement grouped by hyperplane.

    ``per_hyperplane[i]`` holds the regions of the arrangement induced on
    hyperplane ``i``, in that hyperplane's chart coordinates.
    """

    per_hyperplane: tuple

    @property
    def total(self):
        return sum(len(faces) for faces in self.per_hyperplane)

    @property
    def counts(self):
        return tuple(len(faces) for faces in self.per_hyperplane)


def enumerate_faces(a):
    """Faces of *a*: the cells each hyperplane is cut into by the rest."""
    per_hyperplane = []
    for h in a:
        _, restricted, _ = restrict_to(a, h)
        per_hyperplane.append(tuple(enumerate_regions(restricted)))
    faces = FaceEnumeration(tuple(per_hyperplane))
    logger.debug('enumerated %d faces of %r', faces.total, a)
    return faces


# generators

MAX_RETRIES = 60


def _random_vector(rng, d, bound):
    return [utils.randint(rng, -bound, bound) for _ in range(d)]


def random_arrangement(n, d, dprime, seed, max_retries=MAX_RETRIES):
    """Random integer arrangement verified to be in d'-relaxed position.

    For n <= d' the verified class is n, which has the same counts.

    Normals are random integer combinations of d' spanning directions,
    biases random integers; both ranges widen as retries accumulate.
    """
    if n < 1 or not 1 <= dprime <= d:
        raise DomainError('Need n >= 1 and 1 <= dprime <= d, got n={}, '
                          'd={}, dprime={}'.format(n, d, dprime))
    rng = utils.make_rng(seed)
    bound = 3
    for attempt in range(max_retries):
        if attempt and attempt % 5 == 0:
            bound += 1
        directions = [_random_vector(rng, d, bound) for _ in range(dprime)]
        if rank(Matrix(directions, d)) != dprime:
            continue
        rows = []
        while len(rows) < n:
            coeffs = _random_vector(rng, dprime, bound)
            normal = [sum(c * v[j] for c, v in zip(coeffs, directions))
                      for j in range(d)]
            if any(normal):
                bias = utils.randint(rng, -bound * (n + 2), bound * (n + 2))
                rows.append((normal, bias))
        a = Arrangement(rows, d)
        report = verify_position(a)
        if report.is_relaxed_general and report.dprime == min(n, dprime):
            logger.debug('random arrangement n=%d d=%d dprime=%d after %d '
                         'attempts', n, d, dprime, attempt + 1)
            return Arrangement(a.hyperplanes, d, position=report)
    raise GenerationFailed('No {}-relaxed arrangement of {} hyperplanes in '
                           'R^{} after {} attempts'.format(dprime, n, d,
                                                           max_retries))


MAX_DENOMINATOR = 96


def sphere_points(d, max_denominator=MAX_DENOMINATOR):
    """Rational points of the unit sphere with all coordinates positive.

    Inverse stereographic images of ``u = p / q`` with positive
    numerators and ``|u| < 1``, ordered by denominator.
    """
    for q in range(2, max_denominator + 1):
        for p in itertools.product(range(1, q), repeat=d - 1):
            if gcd(q, *p) != 1 or sum(c * c for c in p) >= q * q:
                continue
            u = [Fraction(c, q) for c in p]
            norm2 = sum(c * c for c in u)
            scale = 1 + norm2
            yield ((1 - norm2) / scale,) + tuple(2 * c / scale for c in u)


def _keeps_general(chosen, point, d):
    for combo in itertools.combinations(chosen, d - 1):
        if rank(Matrix(combo + (point,), d)) != d:
            return False
    for combo in itertools.combinations(chosen, d):
        system = Matrix(combo + (point,), d)
        if solve_affine(system, [1] * (d + 1)).dimension >= 0:
            return False
    return True


def worst_case_arrangement(n, d, max_denominator=MAX_DENOMINATOR):
    """n tangent hyperplanes ``p . z = 1`` to the unit sphere.

    The tangent points lie in the open positive orthant and any d of them
    are linearly independent, so the cell containing the origin has all n
    hyperplanes as faces.
    """
    if not n >= d >= 2:
        raise DomainError('Need n >= d >= 2, got n={}, d={}'.format(n, d))
    chosen = ()
    for point in sphere_points(d, max_denominator):
        if _keeps_general(chosen, point, d):
            chosen += (point,)
            if len(chosen) == n:
                break
    else:
        raise ConstructionFailed(
            'Only {} usable sphere points with denominators up to {}'.format(
                len(chosen), max_denominator))
    a = Arrangement([(p, 1) for p in chosen], d)
    report = verify_position(a)
    return Arrangement(a.hyperplanes, d, position=report)
