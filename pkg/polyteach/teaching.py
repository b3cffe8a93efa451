#
# Copyright (C) 2026 the polyteach authors and contributors
#
# This module is part of polyteach and is released under
# the BSD License: https://opensource.org/licenses/BSD-3-Clause

"""Version spaces and minimal teaching sets of arrangement regions."""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from polyteach.arrangement import enumerate_regions
from polyteach.exact import sign, strict_feasible
from polyteach.exceptions import (ContradictoryQueries, DomainError,
                                  EmptyConstraintRegion, StillAmbiguous)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HalfspaceQuery:
    """Label of one hyperplane: the side the target lies on."""

    hyperplane: int
    label: int

    def __str__(self):
        return '(h{}, {})'.format(self.hyperplane,
                                  '+' if self.label > 0 else '-')


class VersionSpace:
    """Regions consistent with a set of queries."""

    __slots__ = ('arrangement', 'queries', 'regions')

    def __init__(self, arrangement, queries, regions):
        self.arrangement = arrangement
        self.queries = tuple(queries)
        self.regions = tuple(regions)

    def __len__(self):
        return len(self.regions)

    def __iter__(self):
        return iter(self.regions)

    def __contains__(self, region):
        return region in self.regions

    @property
    def is_singleton(self):
        return len(self.regions) == 1


@dataclass(frozen=True)
class TeachingSet:
    queries: tuple
    target: object

    def __len__(self):
        return len(self.queries)

    def __iter__(self):
        return iter(self.queries)

    @property
    def ids(self):
        return tuple(q.hyperplane for q in self.queries)


def label_of(region, hyperplane):
    """The side of *hyperplane* that *region* lies on."""
    return region.signs[hyperplane.id]


def queries_of(region, ids=None):
    """Queries labelling the hyperplanes *ids* (default all) by *region*."""
    if ids is None:
        ids = range(len(region))
    return tuple(HalfspaceQuery(i, region.signs[i]) for i in ids)


def _as_labels(queries):
    labels = {}
    for q in queries:
        if labels.get(q.hyperplane, q.label) != q.label:
            raise ContradictoryQueries(
                'Hyperplane {} labeled both ways'.format(q.hyperplane))
        labels[q.hyperplane] = q.label
    return labels


def split(h, lp, witness):
    """Witnesses of both sides of *h* inside the open polytope *lp*.

    *witness* is any interior point of *lp*.  Returns a mapping from
    label to a witness of that side, or ``None`` when the side is empty.
    """
    value = h.evaluate(witness)
    if value == 0:
        return {s: strict_feasible(lp.extended(h.constraint(s)))
                for s in (1, -1)}
    s = sign(value)
    return {s: witness,
            -s: strict_feasible(lp.extended(h.constraint(-s)))}


def _polytope(a, constraints):
    lp = a.signed_lp(_as_labels(constraints))
    witness = strict_feasible(lp)
    if witness is None:
        raise EmptyConstraintRegion('Constraints {} define an empty '
                                    'region'.format(
                                        ', '.join(map(str, constraints))))
    return lp, witness


def is_ambiguous(h, constraints, a):
    """Whether *h* cuts the open polytope of the labeled *constraints*."""
    if any(q.hyperplane == h.id for q in constraints):
        raise ValueError('Hyperplane {} is already constrained'.format(h.id))
    lp, witness = _polytope(a, constraints)
    sides = split(h, lp, witness)
    return all(w is not None for w in sides.values())


def impute_label(h, known, a):
    """The only side of *h* consistent with the *known* labels."""
    lp, witness = _polytope(a, known)
    sides = split(h, lp, witness)
    feasible = [s for s, w in sides.items() if w is not None]
    if len(feasible) > 1:
        raise StillAmbiguous('Hyperplane {} cuts the current cell'.format(
            h.id))
    return feasible[0]


def teaching_set(a, region):
    """Minimal teaching set of *region*.

    A hyperplane belongs to it iff it cuts the polytope cut out by the
    other n-1 labels.  The region's witness already lies on the target
    side, so only the opposite side needs an LP.
    """
    queries = []
    for h in a:
        label = region.signs[h.id]
        lp = a.signed_lp(region.signs, exclude=(h.id,))
        if strict_feasible(lp.extended(h.constraint(-label))) is not None:
            queries.append(HalfspaceQuery(h.id, label))
    return TeachingSet(tuple(queries), region)


def version_space(a, queries, regions=None):
    """Regions of *a* that agree with every query."""
    labels = _as_labels(queries)
    if regions is None:
        regions = enumerate_regions(a)
    consistent = [r for r in regions
                  if all(r.signs[i] == s for i, s in labels.items())]
    return VersionSpace(a, queries, consistent)


def is_teaching_set(a, queries, target, regions=None):
    """Singleton version space ``{target}`` and no redundant query."""
    if regions is None:
        regions = enumerate_regions(a)
    queries = tuple(queries)
    vs = version_space(a, queries, regions)
    if list(vs) != [target]:
        return False
    for i in range(len(queries)):
        rest = queries[:i] + queries[i + 1:]
        if len(version_space(a, rest, regions)) < 2:
            return False
    return True


MAX_BRUTEFORCE = 10


def minimal_teaching_set_bruteforce(a, region, regions=None):
    """Smallest query subset with singleton version space, by search."""
    n = len(a)
    if n > MAX_BRUTEFORCE:
        raise DomainError('Brute-force teaching needs n <= {}, got {}'.format(
            MAX_BRUTEFORCE, n))
    if regions is None:
        regions = enumerate_regions(a)
    for size in range(n + 1):
        for ids in itertools.combinations(range(n), size):
            queries = queries_of(region, ids)
            if version_space(a, queries, regions).is_singleton:
                return TeachingSet(queries, region)
    raise AssertionError('full labeling always identifies the region')


@dataclass(frozen=True)
class TeachingCensus:
    """Teaching-set sizes of every region, in region order."""

    regions: tuple
    sizes: tuple

    @property
    def total(self):
        return sum(self.sizes)

    @property
    def mean(self):
        return Fraction(self.total, len(self.sizes))

    @property
    def histogram(self):
        return dict(sorted(Counter(self.sizes).items()))


def teaching_census(a, regions=None):
    """Teaching sets of all regions with their exact mean size."""
    if regions is None:
        regions = enumerate_regions(a)
    sizes = tuple(len(teaching_set(a, r)) for r in regions)
    census = TeachingCensus(tuple(regions), sizes)
    logger.debug('census of %r: total %d over %d regions', a, census.total,
                 len(sizes))
    return census
