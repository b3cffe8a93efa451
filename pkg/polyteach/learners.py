#
# Copyright (C) 2026 the polyteach authors and contributors
#
# This module is part of polyteach and is released under
# the BSD License: https://opensource.org/licenses/BSD-3-Clause

"""Passive and active learners locating a target region by queries."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from polyteach import utils
from polyteach.arrangement import enumerate_regions
from polyteach.exact import StrictLP
from polyteach.teaching import split, teaching_set

logger = logging.getLogger(__name__)

REQUESTED = 'requested'
IMPUTED = 'imputed'


@dataclass(frozen=True)
class LearnerStep:
    hyperplane: int
    action: str
    label: int


@dataclass(frozen=True)
class LearnerTrace:
    """What a learner did: its hyperplane order and one step per hyperplane.

    ``requested`` counts label requests (M_n); with-replacement passive
    runs may request more labels than there are steps.
    """

    target: object
    order: tuple
    steps: tuple
    requested: int

    def labels(self):
        """Inferred sign vector, indexed by hyperplane id."""
        labels = [0] * len(self.steps)
        for step in self.steps:
            labels[step.hyperplane] = step.label
        return tuple(labels)

    def region_signature(self):
        return utils.signature(self.labels())

    @property
    def correct(self):
        return self.labels() == self.target.signs

    @property
    def requests(self):
        """Per step, whether the label was requested."""
        return tuple(s.action == REQUESTED for s in self.steps)


def _order(a, seed, order):
    if order is not None:
        return tuple(order)
    return tuple(utils.permutation(utils.make_rng(seed), len(a)))


def active_learn(a, target, seed=0, order=None):
    """Query selection: request a label only when the hyperplane is ambiguous.

    Hyperplanes are visited in a seed-determined uniform order (or in
    *order* if given).  A hyperplane that misses the cell of the labels
    seen so far gets the only consistent label imputed.
    """
    order = _order(a, seed, order)
    lp = StrictLP(a.dimension)
    witness = (Fraction(0),) * a.dimension
    steps = []
    requested = 0
    for i in order:
        h = a[i]
        sides = split(h, lp, witness)
        if all(w is not None for w in sides.values()):
            label = target.signs[i]
            action = REQUESTED
            requested += 1
        else:
            label = next(s for s, w in sides.items() if w is not None)
            action = IMPUTED
        witness = sides[label]
        lp = lp.extended(h.constraint(label))
        steps.append(LearnerStep(i, action, label))
    return LearnerTrace(target, order, tuple(steps), requested)


def passive_learn(a, target, seed=0, with_replacement=False, order=None):
    """Request labels of uniformly drawn hyperplanes until one region is left.

    The version space is a singleton exactly when every hyperplane of the
    target's teaching set has been drawn.  Hyperplanes never drawn are
    reported as imputed.
    """
    facets = set(teaching_set(a, target).ids)
    seen = []
    if with_replacement:
        rng = utils.make_rng(seed)
        requested = 0
        while not facets.issubset(seen):
            i = utils.randint(rng, 0, len(a) - 1)
            requested += 1
            if i not in seen:
                seen.append(i)
        tail = [i for i in range(len(a)) if i not in seen]
    else:
        order = _order(a, seed, order)
        for i in order:
            seen.append(i)
            if facets.issubset(seen):
                break
        requested = len(seen)
        tail = list(order[len(seen):])
    steps = [LearnerStep(i, REQUESTED, target.signs[i]) for i in seen]
    steps += [LearnerStep(i, IMPUTED, target.signs[i]) for i in tail]
    return LearnerTrace(target, tuple(s.hyperplane for s in steps),
                        tuple(steps), requested)


@dataclass(frozen=True)
class AmbiguityProfile:
    """Request counts of the active learner per step.

    ``counts[k]`` is the number of trials in which the hyperplane visited
    after k others was ambiguous.
    """

    counts: tuple
    trials: int

    @classmethod
    def from_requests(cls, rows):
        """Profile of per-trial request flags, one row per trial."""
        rows = list(rows)
        counts = [0] * max((len(row) for row in rows), default=0)
        for row in rows:
            for k, requested in enumerate(row):
                counts[k] += bool(requested)
        return cls(tuple(counts), len(rows))

    def rate(self, k):
        return Fraction(self.counts[k], self.trials)

    def tolerance(self, bound):
        """Three binomial standard deviations at success rate *bound*."""
        p = min(float(bound), 1.0)
        return 3 * math.sqrt(p * (1 - p) / self.trials)

    def violations(self, dprime):
        """Steps k in [2d'+1, n-1] whose rate exceeds 2d'/k + 3 sigma."""
        bad = []
        for k in range(2 * dprime + 1, len(self.counts)):
            bound = Fraction(2 * dprime, k)
            if float(self.rate(k)) > float(bound) + self.tolerance(bound):
                bad.append(k)
        return bad


def ambiguity_profile(a, trials, seed, regions=None):
    """Empirical probability that the (k+1)-th visited hyperplane is ambiguous.

    Each trial draws its own target and order from the stream
    ``(seed, trial)``.
    """
    if trials < 1:
        raise ValueError('trials must be positive, got {}'.format(trials))
    if regions is None:
        regions = enumerate_regions(a)
    rows = []
    for trial in range(trials):
        rng = utils.make_rng(seed, trial)
        target = regions[utils.randint(rng, 0, len(regions) - 1)]
        order = utils.permutation(rng, len(a))
        rows.append(active_learn(a, target, order=order).requests)
    profile = AmbiguityProfile.from_requests(rows)
    logger.debug('ambiguity profile over %d trials: %s', trials,
                 profile.counts)
    return profile
