#
# Copyright (C) 2026 the polyteach authors and contributors
#
# This module is part of polyteach and is released under
# the BSD License: https://opensource.org/licenses/BSD-3-Clause

"""Rankings realized by distances to a reference point.

Every pair of objects defines its bisecting hyperplane; the cells of the
arrangement of all bisectors are exactly the rankings that some
reference point induces, and labeled bisectors are pairwise
comparisons.
"""

import itertools
import logging
from dataclasses import dataclass

from polyteach import utils
from polyteach.arrangement import (Arrangement, Hyperplane, enumerate_faces,
                                   enumerate_regions)
from polyteach.counting import ranking_cells, ranking_faces
from polyteach.exact import as_vector, dot
from polyteach.exceptions import (DegenerateChart, DimensionMismatch,
                                  DomainError, DuplicateObjects,
                                  GenerationFailed, InconsistentCell,
                                  OnBisector, PositionViolation,
                                  StillAmbiguous)
from polyteach.teaching import teaching_census, teaching_set, version_space

logger = logging.getLogger(__name__)


class RankingInstance:
    """Objects in R^d with the bisector of every pair.

    Hyperplane ``k`` of ``arrangement`` bisects ``pairs[k] = (i, j)``
    with ``i < j``; its positive side is where object ``i`` is closer.
    """

    __slots__ = ('objects', 'dimension', 'pairs', 'arrangement', '_pair_ids')

    def __init__(self, objects, pairs, arrangement):
        self.objects = objects
        self.dimension = arrangement.dimension
        self.pairs = pairs
        self.arrangement = arrangement
        self._pair_ids = {p: k for k, p in enumerate(pairs)}

    def __len__(self):
        return len(self.objects)

    def __repr__(self):
        return '<RankingInstance n={} d={} at 0x{:2X}>'.format(
            len(self), self.dimension, id(self))

    def bisector(self, i, j):
        """The hyperplane of the pair ``{i, j}``."""
        return self.arrangement[self._pair_ids[(min(i, j), max(i, j))]]

    def pair_of(self, hyperplane):
        return self.pairs[hyperplane.id]


@dataclass(frozen=True)
class Ranking:
    """Object indices from most to least preferred."""

    order: tuple

    def __post_init__(self):
        object.__setattr__(self, 'order', tuple(self.order))

    def __len__(self):
        return len(self.order)

    def __str__(self):
        return ' < '.join(str(i) for i in self.order)

    def position(self, i):
        return self.order.index(i)

    def prefers(self, i, j):
        """Whether object *i* ranks before object *j*."""
        return self.position(i) < self.position(j)

    def signs(self, pairs):
        """Comparison labels of *pairs*: +1 where the first object wins."""
        pos = {obj: k for k, obj in enumerate(self.order)}
        return tuple(1 if pos[i] < pos[j] else -1 for i, j in pairs)


def _squared_norm(v):
    return dot(v, v)


def bisectors(objects, generic=False):
    """Ranking instance of *objects* with all n(n-1)/2 bisectors.

    Only distinctness is enforced unless *generic* is set, in which case
    the cell and face counts must match :func:`is_generic`.
    """
    objects = tuple(as_vector(o) for o in objects)
    if len(objects) < 2:
        raise DomainError('A ranking instance needs at least two objects')
    d = len(objects[0])
    for k, o in enumerate(objects):
        if len(o) != d:
            raise DimensionMismatch('Object {} has {} coordinates, expected '
                                    '{}'.format(k, len(o), d))
    pairs, planes = [], []
    for i, j in itertools.combinations(range(len(objects)), 2):
        ti, tj = objects[i], objects[j]
        if ti == tj:
            raise DuplicateObjects('Objects {} and {} coincide'.format(i, j))
        normal = tuple(a - b for a, b in zip(ti, tj))
        bias = (_squared_norm(ti) - _squared_norm(tj)) / 2
        pairs.append((i, j))
        planes.append(Hyperplane(normal, bias))
    instance = RankingInstance(objects, tuple(pairs), Arrangement(planes, d))
    if generic and not is_generic(instance):
        raise PositionViolation('Objects are not in generic position: '
                                'bisector counts differ from n={}, d={}'
                                .format(len(objects), d))
    return instance


def ranking_of(instance, r):
    """Objects sorted by exact squared distance to the reference point *r*."""
    r = as_vector(r)
    if len(r) != instance.dimension:
        raise DimensionMismatch('Reference point has {} coordinates, objects '
                                'live in R^{}'.format(len(r),
                                                      instance.dimension))
    dist = [_squared_norm(tuple(a - b for a, b in zip(o, r)))
            for o in instance.objects]
    order = sorted(range(len(dist)), key=lambda k: (dist[k], k))
    for a, b in zip(order, order[1:]):
        if dist[a] == dist[b]:
            raise OnBisector('Reference point is equidistant from objects '
                             '{} and {}'.format(min(a, b), max(a, b)))
    return Ranking(order)


def ranking_from_signs(instance, signs):
    """Ranking whose comparisons are the labels *signs*."""
    wins = [0] * len(instance)
    for (i, j), s in zip(instance.pairs, signs):
        wins[i if s > 0 else j] += 1
    ranking = Ranking(sorted(range(len(wins)), key=lambda k: -wins[k]))
    if ranking.signs(instance.pairs) != tuple(signs):
        raise InconsistentCell('Comparisons {} are not transitive'.format(
            utils.signature(signs)))
    return ranking


def teach_ranking(instance, target):
    """Minimal set of pairwise comparisons identifying the cell *target*."""
    return teaching_set(instance.arrangement, target)


def implied_ranking(instance, ts, regions=None):
    """The ranking forced by the comparisons of a teaching set."""
    vs = version_space(instance.arrangement, ts.queries, regions)
    if not vs.is_singleton:
        raise StillAmbiguous('{} cells agree with {} comparisons'.format(
            len(vs), len(ts)))
    return ranking_from_signs(instance, vs.regions[0].signs)


def validate_e1(instance, regions=None):
    """Cell to ranking table of the bisector arrangement.

    Each cell's witness must induce a ranking whose comparisons give
    back the cell's sign vector, and distinct cells distinct rankings.
    """
    if regions is None:
        regions = enumerate_regions(instance.arrangement)
    table = []
    seen = set()
    for region in regions:
        ranking = ranking_of(instance, region.witness)
        if ranking.signs(instance.pairs) != region.signs:
            raise InconsistentCell('Cell {} induces ranking {}'.format(
                region.signature, ranking))
        if ranking in seen:
            raise InconsistentCell('Ranking {} appears twice'.format(ranking))
        seen.add(ranking)
        table.append((region, ranking))
    return tuple(table)


def ranking_census(instance, regions=None):
    """Teaching sizes of every cell; see :func:`teaching.teaching_census`."""
    return teaching_census(instance.arrangement, regions)


def is_generic(instance, regions=None):
    """Cell and face counts match the closed forms for n objects in R^d."""
    n, d = len(instance), instance.dimension
    if regions is None:
        regions = enumerate_regions(instance.arrangement)
    if len(regions) != ranking_cells(n, d):
        return False
    try:
        faces = enumerate_faces(instance.arrangement)
    except DegenerateChart:
        return False
    return faces.total == ranking_faces(n, d)


MAX_RETRIES = 60


def random_ranking_instance(n, d, seed, max_retries=MAX_RETRIES):
    """Random integer objects whose bisectors have the generic counts."""
    if n < 2 or d < 1:
        raise DomainError('Need n >= 2 and d >= 1, got n={}, d={}'.format(
            n, d))
    rng = utils.make_rng(seed)
    bound = n + 2
    for attempt in range(max_retries):
        if attempt and attempt % 5 == 0:
            bound += 1
        objects = [tuple(utils.randint(rng, -bound, bound) for _ in range(d))
                   for _ in range(n)]
        if len(set(objects)) < n:
            continue
        instance = bisectors(objects)
        if is_generic(instance):
            logger.debug('ranking instance n=%d d=%d after %d attempts',
                         n, d, attempt + 1)
            return instance
    raise GenerationFailed('No generic ranking instance of {} objects in R^{} '
                           'after {} attempts'.format(n, d, max_retries))
