#
# Copyright (C) 2026 the polyteach authors and contributors
#
# This module is part of polyteach and is released under
# the BSD License: https://opensource.org/licenses/BSD-3-Clause

"""Homogeneous and phi-separable dichotomies and their dual arrangements.

A point ``x`` of R^d maps to the hyperplane ``x[:-1] . z + x[-1] = 0`` of
R^(d-1) and a separator ``w`` with ``w[-1] > 0`` maps to the point
``w[:-1] / w[-1]``; ``w . x`` and the dual hyperplane evaluated at the
dual point always share their sign.  Once the last point is normalized
to ``e_d`` and labeled positive, separable classes of the points are in
bijection with the regions of the dual arrangement of the other points.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from polyteach import utils
from polyteach.arrangement import (Arrangement, Hyperplane, enumerate_regions,
                                   verify_position)
from polyteach.exact import (Constraint, Matrix, StrictLP, as_vector, dot,
                             rank, sign, strict_feasible)
from polyteach.exceptions import (BasisPoint, DomainError, GenerationFailed,
                                  InconsistentCell,
                                  NonpositiveLastCoordinate, NotSeparable,
                                  ParseError, PositionViolation, ZeroLastPoint)
from polyteach.teaching import TeachingCensus, teaching_set

logger = logging.getLogger(__name__)

IDENTITY = 'identity'
MONOMIAL = 'monomial'
TABLE = 'table'


class FeatureMap:
    """A rational feature lift phi: R^d -> R^d_phi."""

    __slots__ = ('kind', 'degree', 'table')

    def __init__(self, kind=IDENTITY, degree=1, table=None):
        if kind not in (IDENTITY, MONOMIAL, TABLE):
            raise ValueError('Unknown feature map {!r}'.format(kind))
        if kind == MONOMIAL and degree < 1:
            raise ValueError('Monomial degree must be positive')
        if kind == TABLE:
            table = {as_vector(k): as_vector(v) for k, v in table.items()}
        self.kind = kind
        self.degree = degree
        self.table = table

    @classmethod
    def parse(cls, name):
        """``identity``, ``monomial<k>`` (``monomial2`` is quadratic)."""
        if name == IDENTITY:
            return cls()
        if name.startswith(MONOMIAL):
            try:
                return cls(MONOMIAL, int(name[len(MONOMIAL):] or 1))
            except ValueError:
                pass
        raise ParseError('Unknown feature map {!r}'.format(name))

    @classmethod
    def monomial(cls, degree):
        return cls(MONOMIAL, degree)

    @classmethod
    def from_table(cls, table):
        return cls(TABLE, table=table)

    def __repr__(self):
        if self.kind == MONOMIAL:
            return '<FeatureMap monomial{}>'.format(self.degree)
        return '<FeatureMap {}>'.format(self.kind)

    def output_dimension(self, d):
        if self.kind == IDENTITY:
            return d
        if self.kind == MONOMIAL:
            return comb(d + self.degree - 1, self.degree)
        return len(next(iter(self.table.values())))

    def __call__(self, point):
        point = as_vector(point)
        if self.kind == IDENTITY:
            return point
        if self.kind == TABLE:
            return self.table[point]
        features = []
        for idx in itertools.combinations_with_replacement(
                range(len(point)), self.degree):
            value = Fraction(1)
            for j in idx:
                value *= point[j]
            features.append(value)
        return tuple(features)


IDENTITY_MAP = FeatureMap()


class PointSet:
    """Points with the last one normalized to the basis vector e_d."""

    __slots__ = ('points', 'dimension', '_dprime')

    def __init__(self, points):
        points = tuple(as_vector(p) for p in points)
        if not points:
            raise ValueError('A point set needs at least one point')
        d = len(points[-1])
        basis = (Fraction(0),) * (d - 1) + (Fraction(1),)
        if points[-1] != basis:
            raise ValueError('Last point must be e_d; use '
                             'normalize_last_to_basis')
        for i, p in enumerate(points):
            if len(p) != d:
                raise ValueError('Point {} has {} coordinates, expected '
                                 '{}'.format(i, len(p), d))
            if all(v == 0 for v in p):
                raise PositionViolation('Point {} is zero'.format(i))
        self.points = points
        self.dimension = d
        self._dprime = None

    def __len__(self):
        return len(self.points)

    def __getitem__(self, idx):
        return self.points[idx]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other):
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    @property
    def dprime(self):
        """Relaxed general position class, see :func:`point_position`."""
        if self._dprime is None:
            self._dprime = point_position(self.points)
        return self._dprime


def point_position(points):
    """Relaxed general position class d' of *points*.

    d' is the rank of the point matrix; every d' of the points must be
    linearly independent.
    """
    points = [as_vector(p) for p in points]
    d = len(points[0])
    dprime = rank(Matrix(points, d))
    for subset in itertools.combinations(range(len(points)), dprime):
        if rank(Matrix([points[i] for i in subset], d)) != dprime:
            raise PositionViolation(
                'Points {} are linearly dependent; not in {}-general '
                'position'.format(list(subset), dprime))
    return dprime


def normalize_last_to_basis(points):
    """Apply an invertible rational linear map sending the last point to e_d.

    The last point replaces the standard vector at its largest-magnitude
    coordinate (lowest index on ties) in the standard basis and is moved
    to the end; every point is expressed in that basis.
    """
    points = [as_vector(p) for p in points]
    last = points[-1]
    if all(v == 0 for v in last):
        raise ZeroLastPoint('Last point is the zero vector')
    p = max(range(len(last)), key=lambda j: (abs(last[j]), -j))

    def transform(y):
        c = y[p] / last[p]
        return tuple(y[j] - c * last[j]
                     for j in range(len(y)) if j != p) + (c,)

    return PointSet([transform(y) for y in points])


def lift(ps, phi=IDENTITY_MAP):
    """``phi`` applied to every point, renormalized in R^d_phi."""
    if phi.kind == IDENTITY:
        return ps
    return normalize_last_to_basis([phi(x) for x in ps])


@dataclass(frozen=True)
class Dichotomy:
    """Disjoint positive and negative index sets."""

    positive: frozenset
    negative: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, 'positive', frozenset(self.positive))
        object.__setattr__(self, 'negative', frozenset(self.negative))
        if self.positive & self.negative:
            raise ValueError('Indices {} are labeled both ways'.format(
                sorted(self.positive & self.negative)))

    @classmethod
    def from_labels(cls, labels):
        """From a full label vector of +1/-1."""
        return cls({i for i, s in enumerate(labels) if s > 0},
                   {i for i, s in enumerate(labels) if s < 0})

    def __len__(self):
        return len(self.positive) + len(self.negative)

    def labels(self, n):
        return tuple(1 if i in self.positive else -1 for i in range(n))

    def is_partition(self, n):
        return self.positive | self.negative == frozenset(range(n))

    def label(self, i):
        if i in self.positive:
            return 1
        if i in self.negative:
            return -1
        return 0

    def flipped(self):
        return Dichotomy(self.negative, self.positive)

    def canonical(self, n):
        """Class representative labeling index n-1 positive."""
        return self.flipped() if n - 1 in self.negative else self

    def without(self, i):
        return Dichotomy(self.positive - {i}, self.negative - {i})

    def __str__(self):
        return '+{} -{}'.format(sorted(self.positive), sorted(self.negative))


def separator(positives, negatives, dimension):
    """Exact ``w`` with ``w . x > 0`` on *positives* and ``< 0`` on
    *negatives*, or ``None``."""
    lp = StrictLP(dimension,
                  [Constraint(as_vector(x), Fraction(0), '>')
                   for x in positives]
                  + [Constraint(as_vector(x), Fraction(0), '<')
                     for x in negatives])
    return strict_feasible(lp)


def is_separable(ps, dich, phi=IDENTITY_MAP):
    """Separator of *dich* in the phi-induced space, or ``None``."""
    features = [phi(x) for x in ps]
    return separator([features[i] for i in sorted(dich.positive)],
                     [features[i] for i in sorted(dich.negative)],
                     phi.output_dimension(ps.dimension))


def dual_map_point(x):
    """The dual hyperplane ``x[:-1] . z + x[-1] = 0`` of R^(d-1)."""
    x = as_vector(x)
    if all(v == 0 for v in x[:-1]):
        raise BasisPoint('Point {} maps to the hyperplane at '
                         'infinity'.format([str(v) for v in x]))
    return Hyperplane(x[:-1], -x[-1])


def dual_map_separator(w):
    """The dual point ``w[:-1] / w[-1]``."""
    w = as_vector(w)
    if w[-1] <= 0:
        raise NonpositiveLastCoordinate(
            'Separator must have a positive last coordinate, got {}'.format(
                w[-1]))
    return tuple(v / w[-1] for v in w[:-1])


class DualInstance:
    """Dual arrangement of a point set and its class-region table."""

    def __init__(self, point_set, arrangement, regions, classes):
        self.point_set = point_set
        self.arrangement = arrangement
        self.regions = tuple(regions)
        self.classes = tuple(classes)
        self._by_class = dict(zip(self.classes, self.regions))

    def __len__(self):
        return len(self.regions)

    def region_of(self, dich):
        """Dual region of the class of *dich* (``None`` if not separable)."""
        return self._by_class.get(dich.canonical(len(self.point_set)))

    def class_of(self, region):
        return self.classes[self.regions.index(region)]


def build_dual_instance(ps):
    """Dual arrangement of all points but the last, with its class table.

    The arrangement of a d'-general point set must verify as
    (d'-1)-relaxed general; each dual region's witness ``z`` recovers
    its class through the separator ``(z, 1)``.
    """
    dprime = ps.dprime
    if dprime < 2 or len(ps) < 2:
        raise PositionViolation('Duality needs at least two points in '
                                'd\'-general position with d\' >= 2')
    a = Arrangement([dual_map_point(x) for x in ps.points[:-1]],
                    ps.dimension - 1)
    report = verify_position(a)
    if not report.is_relaxed_general or report.dprime != dprime - 1:
        raise PositionViolation(
            'Dual arrangement is {}, expected relaxed-general({})'.format(
                report, dprime - 1))
    a = Arrangement(a.hyperplanes, a.dimension, position=report)
    regions = enumerate_regions(a)
    classes = []
    for region in regions:
        w = region.witness + (Fraction(1),)
        labels = [sign(dot(w, x)) for x in ps]
        if 0 in labels:
            raise InconsistentCell('Dual witness {} lies on a dual '
                                   'hyperplane'.format(region.signature))
        classes.append(Dichotomy.from_labels(labels))
    logger.debug('dual instance: %d points, %d classes', len(ps),
                 len(classes))
    return DualInstance(ps, a, regions, classes)


def is_ambiguous_point(ps, partial, y, phi=IDENTITY_MAP):
    """Whether *y* can take either label given the *partial* dichotomy."""
    features = [phi(x) for x in ps]
    positives = [features[i] for i in sorted(partial.positive)]
    negatives = [features[i] for i in sorted(partial.negative)]
    fy = phi(y)
    d = len(fy)
    return (separator(positives + [fy], negatives, d) is not None
            and separator(positives, negatives + [fy], d) is not None)


@dataclass(frozen=True)
class ExtremeSet:
    """Extreme points of a dichotomy, found in the primal.

    ``dual_indices`` is the preimage of the dual teaching set, which
    never contains the last point since its dual lies at infinity.
    """

    indices: frozenset
    dual_indices: frozenset
    last: int

    def __len__(self):
        return len(self.indices)

    @property
    def last_is_extreme(self):
        return self.last in self.indices


def extreme_points(ps, dich, phi=IDENTITY_MAP, dual=None):
    """Points ambiguous with respect to the rest of the dichotomy.

    The result is checked against the dual teaching set before it is
    returned; only the last point may differ.
    """
    lifted = lift(ps, phi)
    n = len(lifted)
    if is_separable(lifted, dich) is None:
        raise NotSeparable('Dichotomy {} is not separable'.format(dich))
    indices = frozenset(
        i for i in range(n)
        if is_ambiguous_point(lifted, dich.without(i), lifted[i]))

    if dual is None:
        dual = build_dual_instance(lifted)
    region = dual.region_of(dich)
    dual_indices = frozenset(teaching_set(dual.arrangement, region).ids)
    if indices - {n - 1} != dual_indices:
        raise InconsistentCell(
            'Extreme points {} disagree with dual teaching set {}'.format(
                sorted(indices), sorted(dual_indices)))
    if n - 1 in indices:
        logger.info('last point is extreme for %s', dich)
    return ExtremeSet(indices, dual_indices, n - 1)


def separable_classes_bruteforce(ps, phi=IDENTITY_MAP):
    """All separable canonical dichotomies, tested one by one."""
    n = len(ps)
    found = []
    for labels in itertools.product((1, -1), repeat=n - 1):
        dich = Dichotomy.from_labels(labels + (1,))
        if is_separable(ps, dich, phi) is not None:
            found.append(dich)
    return found


@dataclass(frozen=True)
class DichotomyCensus:
    """Teaching sizes of every separable class, via the dual arrangement."""

    classes: tuple
    census: TeachingCensus
    extreme: tuple = ()

    @property
    def sizes(self):
        return self.census.sizes

    @property
    def mean(self):
        return self.census.mean


def class_census(ps, phi=IDENTITY_MAP, extreme=False):
    """Enumerate all separable classes and their teaching-set sizes.

    With *extreme* set, the primal extreme sets are computed as well.
    """
    lifted = lift(ps, phi)
    dual = build_dual_instance(lifted)
    sizes = tuple(len(teaching_set(dual.arrangement, r))
                  for r in dual.regions)
    census = TeachingCensus(dual.regions, sizes)
    extremes = ()
    if extreme:
        extremes = tuple(extreme_points(lifted, c, dual=dual)
                         for c in dual.classes)
    return DichotomyCensus(dual.classes, census, extremes)


MAX_RETRIES = 60


def random_point_set(n, d, seed, phi=IDENTITY_MAP, max_retries=MAX_RETRIES):
    """Random integer points, general in R^d and after the *phi* lift."""
    if n < 2 or d < 2:
        raise DomainError('Need n >= 2 and d >= 2, got n={}, d={}'.format(
            n, d))
    rng = utils.make_rng(seed)
    bound = n + 2
    for attempt in range(max_retries):
        if attempt and attempt % 5 == 0:
            bound += 1
        raw = [tuple(utils.randint(rng, -bound, bound) for _ in range(d))
               for _ in range(n)]
        try:
            ps = normalize_last_to_basis(raw)
            lifted = lift(ps, phi)
            wanted = min(n, phi.output_dimension(d))
            if ps.dprime == min(n, d) and lifted.dprime == wanted:
                return ps
        except (PositionViolation, ZeroLastPoint):
            continue
    raise GenerationFailed('No general set of {} points in R^{} after {} '
                           'attempts'.format(n, d, max_retries))
