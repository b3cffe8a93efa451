#
# Copyright (C) 2026 the polyteach authors and contributors
#
# This module is part of polyteach and is released under
# the BSD License: https://opensource.org/licenses/BSD-3-Clause

"""Seeded experiment campaigns with per-trial records and a verdict.

Trial ``t`` of a run with seed ``s`` draws its randomness from the
stream ``(s, t)`` only, so records do not depend on how trials are
scheduled.  Every summary is recomputable from the records.
"""

import csv
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import partial

from polyteach import counting, utils
from polyteach.arrangement import (enumerate_faces, enumerate_regions,
                                   random_arrangement, worst_case_arrangement)
from polyteach.dichotomy import (FeatureMap, class_census, lift,
                                 random_point_set,
                                 separable_classes_bruteforce)
from polyteach.exact import format_rational
from polyteach.exact.rational import to_decimal
from polyteach.exceptions import ConfigError, ParseError
from polyteach.learners import AmbiguityProfile, active_learn, passive_learn
from polyteach.ranking import random_ranking_instance, validate_e1
from polyteach.serialize import dumps
from polyteach.teaching import teaching_census, teaching_set

logger = logging.getLogger(__name__)

TEACH_CENSUS = 'teach-census'
ACTIVE = 'active'
PASSIVE = 'passive'
DICHOTOMY = 'dichotomy'
RANKING = 'ranking'
COUNT_VERIFY = 'count-verify'
WORST_CASE = 'worst-case'

MODES = (TEACH_CENSUS, ACTIVE, PASSIVE, DICHOTOMY, RANKING, COUNT_VERIFY,
         WORST_CASE)

PASS = 'pass'
FAIL = 'fail'

# brute-force class counts are only cross-checked up to this many points
MAX_BRUTEFORCE_POINTS = 10


@dataclass(frozen=True)
class ExperimentConfig:
    mode: str
    n: int
    d: int
    dprime: int
    trials: int = 1
    seed: int = 0
    jobs: int = 1
    sample: int = None
    with_replacement: bool = False
    phi: str = 'identity'


def _int_option(options, name, default=None, minimum=None):
    value = options.get(name)
    if value is None:
        if default is None:
            raise ConfigError('Missing option {}'.format(name))
        return default
    if isinstance(value, bool):
        raise ConfigError('Invalid value for {}: {!r}'.format(name, value))
    try:
        value = int(value)
    except (ValueError, TypeError):
        raise ConfigError('Invalid value for {}: {!r}'.format(name, value))
    if minimum is not None and value < minimum:
        raise ConfigError('Invalid value for {}: {!r} (must be >= {})'.format(
            name, value, minimum))
    return value


def validate_config(options):
    """Validates experiment options and returns an :class:`ExperimentConfig`.

    Unknown keys are ignored so CLI namespaces can be passed directly.
    """
    mode = options.get('mode')
    if mode not in MODES:
        raise ConfigError('Unknown mode: {!r}'.format(mode))

    n = _int_option(options, 'n', minimum=1)
    d = _int_option(options, 'd', minimum=1)
    dprime = _int_option(options, 'dprime', default=d, minimum=1)
    if dprime > d:
        raise ConfigError('Invalid value for dprime: {} (must be <= d = {})'
                          .format(dprime, d))
    trials = _int_option(options, 'trials', default=1, minimum=1)
    seed = _int_option(options, 'seed', default=0)
    jobs = _int_option(options, 'jobs', default=1, minimum=1)

    sample = options.get('sample')
    if sample is not None:
        if mode != TEACH_CENSUS:
            raise ConfigError('Option sample only applies to {}'.format(
                TEACH_CENSUS))
        sample = _int_option(options, 'sample', minimum=1)

    with_replacement = options.get('with_replacement', False)
    if with_replacement not in [True, False]:
        raise ConfigError('Invalid value for with_replacement: '
                          '{!r}'.format(with_replacement))

    phi = options.get('phi') or 'identity'
    try:
        FeatureMap.parse(phi)
    except ParseError:
        raise ConfigError('Invalid value for phi: {!r}'.format(phi))

    if mode in (DICHOTOMY, WORST_CASE) and d < 2:
        raise ConfigError('Mode {} needs d >= 2'.format(mode))
    if mode == WORST_CASE and n < d:
        raise ConfigError('Mode {} needs n >= d'.format(mode))
    if mode == RANKING and n < 2:
        raise ConfigError('Mode {} needs n >= 2'.format(mode))

    return ExperimentConfig(mode, n, d, dprime, trials, seed, jobs, sample,
                            with_replacement, phi)


@dataclass
class ExperimentReport:
    """Per-trial records and the summary derived from them.

    ``value`` names the record column the summary aggregates.
    """

    config: ExperimentConfig
    records: list
    value: str
    bound: tuple
    summary: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.summary:
            self.summary = summarize(self.records, self.value, self.bound)

    @property
    def passed(self):
        return self.summary['verdict'] == PASS

    def to_dict(self):
        return {
            'config': asdict(self.config),
            'summary': self.summary,
            'records': [_plain(r) for r in self.records],
        }


def _format_value(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return value


def _plain(record):
    return {k: _format_value(v) for k, v in record.items()}


def _format_bound(value):
    if value is None:
        return None
    if isinstance(value, float):
        return to_decimal(value)
    return format_rational(value)


def summarize(records, value, bound):
    """``{mean, max, min, bound, verdict}`` over the *value* column.

    The verdict passes iff every record is ``ok`` and the mean lies
    within the ``(low, high)`` *bound* (``None`` for no limit).
    """
    values = [Fraction(r[value]) for r in records]
    mean = sum(values, Fraction(0)) / len(values)
    low, high = bound
    ok = all(r['ok'] for r in records)
    if low is not None and mean < low:
        ok = False
    if high is not None and mean > high:
        ok = False
    return {
        'value': value,
        'trials': len(records),
        'mean': format_rational(mean),
        'mean_decimal': to_decimal(mean),
        'max': format_rational(max(values)),
        'min': format_rational(min(values)),
        'bound': [_format_bound(low), _format_bound(high)],
        'verdict': PASS if ok else FAIL,
    }


# trials

def _census_trial(cfg, setup, trial):
    a = random_arrangement(cfg.n, cfg.d, cfg.dprime,
                           utils.trial_seed(cfg.seed, trial))
    regions = enumerate_regions(a)
    expected = counting.avg_teaching(cfg.n, cfg.dprime)
    if cfg.sample is None:
        census = teaching_census(a, regions)
        mean = census.mean
        ok = (census.total == 2 * counting.faces_relaxed(cfg.n, cfg.dprime)
              and mean == expected)
    else:
        rng = utils.make_rng(cfg.seed, trial, 1)
        picked = [regions[utils.randint(rng, 0, len(regions) - 1)]
                  for _ in range(cfg.sample)]
        sizes = [len(teaching_set(a, r)) for r in picked]
        mean = Fraction(sum(sizes), len(sizes))
        ok = True
    return {'trial': trial, 'regions': len(regions), 'mean': mean,
            'expected': expected, 'ok': ok}


def _learning_setup(cfg):
    a = random_arrangement(cfg.n, cfg.d, cfg.dprime, cfg.seed)
    return a, tuple(enumerate_regions(a))


def _target_and_order(cfg, setup, trial):
    a, regions = setup
    rng = utils.make_rng(cfg.seed, trial)
    target = regions[utils.randint(rng, 0, len(regions) - 1)]
    return a, target, utils.permutation(rng, len(a))


def _active_trial(cfg, setup, trial):
    a, target, order = _target_and_order(cfg, setup, trial)
    trace = active_learn(a, target, order=order)
    steps = ''.join('1' if r else '0' for r in trace.requests)
    return {'trial': trial, 'target': target.signature,
            'requested': trace.requested, 'steps': steps,
            'ok': trace.correct}


def add_profile(summary, records, dprime):
    """Ambiguity profile of active records, folded into *summary*.

    ``profile_violations`` lists the steps whose request rate exceeds
    2d'/k by more than three binomial standard deviations.
    """
    profile = AmbiguityProfile.from_requests(
        [[c == '1' for c in r['steps']] for r in records])
    summary['profile'] = list(profile.counts)
    summary['profile_violations'] = profile.violations(dprime)
    return summary


def _passive_trial(cfg, setup, trial):
    a, target, order = _target_and_order(cfg, setup, trial)
    active = active_learn(a, target, order=order)
    if cfg.with_replacement:
        trace = passive_learn(a, target, utils.trial_seed(cfg.seed, trial),
                              with_replacement=True)
    else:
        trace = passive_learn(a, target, order=order)
    return {'trial': trial, 'target': target.signature,
            'requested': trace.requested, 'active_requested': active.requested,
            'ok': trace.correct and trace.requested >= active.requested}


def _dichotomy_trial(cfg, setup, trial):
    phi = FeatureMap.parse(cfg.phi)
    ps = random_point_set(cfg.n, cfg.d, utils.trial_seed(cfg.seed, trial),
                          phi)
    dprime = lift(ps, phi).dprime
    census = class_census(ps, phi)
    expected = counting.regions_relaxed(cfg.n - 1, dprime - 1)
    record = {'trial': trial, 'classes': len(census.classes),
              'expected': expected, 'mean': census.mean}
    ok = len(census.classes) == expected
    if cfg.n <= MAX_BRUTEFORCE_POINTS:
        brute = len(separable_classes_bruteforce(ps, phi))
        record['bruteforce'] = brute
        ok = ok and brute == expected
    if cfg.n - 1 > 2 * (dprime - 1):
        ok = ok and census.mean <= 2 * (dprime - 1)
    record['ok'] = ok
    return record


def _ranking_trial(cfg, setup, trial):
    instance = random_ranking_instance(cfg.n, cfg.d,
                                       utils.trial_seed(cfg.seed, trial))
    regions = enumerate_regions(instance.arrangement)
    table = validate_e1(instance, regions)
    census = teaching_census(instance.arrangement, regions)
    faces = counting.ranking_faces(cfg.n, cfg.d)
    return {'trial': trial, 'cells': len(table),
            'expected': counting.ranking_cells(cfg.n, cfg.d),
            'faces': faces, 'mean': census.mean,
            'ok': (len(table) == counting.ranking_cells(cfg.n, cfg.d)
                   and census.total == 2 * faces)}


def _count_trial(cfg, setup, trial):
    a = random_arrangement(cfg.n, cfg.d, cfg.dprime,
                           utils.trial_seed(cfg.seed, trial))
    regions = enumerate_regions(a)
    faces = enumerate_faces(a)
    census = teaching_census(a, regions)
    expected_regions = counting.regions_relaxed(cfg.n, cfg.dprime)
    expected_faces = counting.faces_relaxed(cfg.n, cfg.dprime)
    return {'trial': trial, 'regions': len(regions),
            'expected_regions': expected_regions, 'faces': faces.total,
            'expected_faces': expected_faces,
            'teaching_total': census.total,
            'ok': (len(regions) == expected_regions
                   and faces.total == expected_faces
                   and census.total == 2 * faces.total)}


def worst_case_instance(n, d):
    """Tangent arrangement and its cell around the origin."""
    a = worst_case_arrangement(n, d)
    region = next(r for r in enumerate_regions(a)
                  if all(s < 0 for s in r.signs))
    return a, region


def _worst_case_setup(cfg):
    return worst_case_instance(cfg.n, cfg.d)


def _worst_case_trial(cfg, setup, trial):
    a, region = setup
    size = len(teaching_set(a, region))
    return {'trial': trial, 'target': region.signature, 'size': size,
            'ok': size == cfg.n}


def _no_setup(cfg):
    return None


# mode -> (setup, trial, value column)
_MODES = {
    TEACH_CENSUS: (_no_setup, _census_trial, 'mean'),
    ACTIVE: (_learning_setup, _active_trial, 'requested'),
    PASSIVE: (_learning_setup, _passive_trial, 'requested'),
    DICHOTOMY: (_no_setup, _dichotomy_trial, 'mean'),
    RANKING: (_no_setup, _ranking_trial, 'mean'),
    COUNT_VERIFY: (_no_setup, _count_trial, 'regions'),
    WORST_CASE: (_worst_case_setup, _worst_case_trial, 'size'),
}


def mode_bound(cfg):
    """``(low, high)`` limits of the summary mean for *cfg*."""
    n, d, dprime = cfg.n, cfg.d, cfg.dprime
    if cfg.mode == TEACH_CENSUS and n > 2 * dprime:
        return counting.average_bounds(n, dprime)
    if cfg.mode == ACTIVE:
        return None, 2 * dprime * math.log2(n)
    if cfg.mode == PASSIVE and not cfg.with_replacement:
        return None, Fraction(n)
    if cfg.mode == RANKING:
        return Fraction(d, 4), Fraction(3 * d)
    if cfg.mode == COUNT_VERIFY:
        expected = counting.regions_relaxed(n, dprime)
        return Fraction(expected), Fraction(expected)
    if cfg.mode == WORST_CASE:
        return Fraction(n), Fraction(n)
    return None, None


def run_experiment(cfg):
    """Run all trials of *cfg* and summarize them against the mode's bound."""
    setup_fn, trial_fn, value = _MODES[cfg.mode]
    setup = setup_fn(cfg)
    run_trial = partial(trial_fn, cfg, setup)
    logger.info('running %s: n=%d d=%d dprime=%d, %d trials', cfg.mode,
                cfg.n, cfg.d, cfg.dprime, cfg.trials)
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            records = list(pool.map(run_trial, range(cfg.trials)))
    else:
        records = [run_trial(t) for t in range(cfg.trials)]
    report = ExperimentReport(cfg, records, value, mode_bound(cfg))
    if cfg.mode == ACTIVE:
        add_profile(report.summary, records, cfg.dprime)
    logger.info('%s: mean %s, verdict %s', cfg.mode, report.summary['mean'],
                report.summary['verdict'])
    return report


def write_rows(stream, rows):
    """CSV of dict *rows*, columns in the order of the first row."""
    writer = csv.DictWriter(stream, fieldnames=list(rows[0]),
                            lineterminator='\n')
    writer.writeheader()
    writer.writerows(rows)


def write_csv(report, stream):
    write_rows(stream, [_plain(r) for r in report.records])


def write_json(report, stream):
    stream.write(dumps(report.to_dict()))
