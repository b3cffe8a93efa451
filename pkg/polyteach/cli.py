#!/usr/bin/env python
#
# Copyright (C) 2026 the polyteach authors and contributors
#
# This module is part of polyteach and is released under
# the BSD License: https://opensource.org/licenses/BSD-3-Clause

"""Module that contains the command line app.

Kept apart from ``__main__`` so that importing it never runs the app.
Exit status is 0 on success, 1 when an experiment misses its bound and
2 on errors.
"""

import argparse
import logging
import sys

import polyteach
from polyteach import counting, experiments, serialize, utils
from polyteach.arrangement import (enumerate_faces, enumerate_regions,
                                   find_region)
from polyteach.dichotomy import (FeatureMap, class_census,
                                 normalize_last_to_basis)
from polyteach.exact import format_rational
from polyteach.exceptions import EmptyConstraintRegion, PolyTeachError
from polyteach.ranking import bisectors, ranking_census, validate_e1
from polyteach.teaching import teaching_census, teaching_set

EXIT_OK = 0
EXIT_BOUND = 1
EXIT_ERROR = 2

_FORMATS = ['json', 'csv']


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    group = common.add_argument_group('Run Options')
    group.add_argument(
        '--seed',
        dest='seed',
        default=0,
        type=int,
        help='base random seed (defaults to 0)')
    group.add_argument(
        '--trials',
        dest='trials',
        default=1,
        type=int,
        help='number of trials (defaults to 1)')
    group.add_argument(
        '-o', '--out',
        dest='out',
        metavar='FILE',
        help='write output to FILE (defaults to stdout)')
    group.add_argument(
        '-f', '--format',
        dest='format',
        choices=_FORMATS,
        default='json',
        help='output format, one of {} (defaults to json)'.format(
            ', '.join('"{}"'.format(x) for x in _FORMATS)))
    group.add_argument(
        '-v', '--verbose',
        dest='verbose',
        action='count',
        default=0,
        help='log progress to stderr (-vv for debug output)')
    return common


def _add_sizes(parser, dprime=True):
    parser.add_argument('--n', dest='n', type=int, required=True,
                        help='number of hyperplanes, points or objects')
    parser.add_argument('--d', dest='d', type=int, default=2,
                        help='ambient dimension (defaults to 2)')
    if dprime:
        parser.add_argument('--dprime', dest='dprime', type=int,
                            help='relaxed general position class '
                                 '(defaults to d)')


def create_parser():
    common = _common_options()

    parser = argparse.ArgumentParser(
        prog='polyteach',
        description='Count, enumerate, teach and learn the regions of '
                    'hyperplane arrangements with exact arithmetic.',
    )
    parser.add_argument(
        '--version',
        action='version',
        version=polyteach.__version__)

    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('count', parents=[common],
                       help='closed-form region and face counts')
    _add_sizes(p)

    p = sub.add_parser('enumerate', parents=[common],
                       help='regions (and faces) of an arrangement file')
    p.add_argument('--arrangement', required=True, metavar='FILE')
    p.add_argument('--faces', action='store_true', default=False,
                   help='also enumerate faces')

    p = sub.add_parser('teach', parents=[common],
                       help='minimal teaching set of one region')
    p.add_argument('--arrangement', required=True, metavar='FILE')
    p.add_argument('--region', required=True, metavar='SIGNS',
                   help='sign vector such as "+-+"')

    p = sub.add_parser('census', parents=[common],
                       help='teaching-set sizes of all regions')
    p.add_argument('--arrangement', required=True, metavar='FILE')

    for name, help_ in (('learn-active', 'run the active learner'),
                        ('learn-passive', 'run the passive learner')):
        p = sub.add_parser(name, parents=[common], help=help_)
        _add_sizes(p)
        if name == 'learn-passive':
            p.add_argument('--with-replacement', dest='with_replacement',
                           action='store_true', default=False)

    p = sub.add_parser('dichotomy', parents=[common],
                       help='separable classes of a point file')
    p.add_argument('--points', required=True, metavar='FILE')
    p.add_argument('--phi', default='identity',
                   help='feature map: identity or monomial<k> '
                        '(defaults to identity)')
    p.add_argument('--extreme', action='store_true', default=False,
                   help='list extreme points of every class')

    p = sub.add_parser('rank', parents=[common],
                       help='rankings realized by an object file')
    p.add_argument('--objects', required=True, metavar='FILE')
    p.add_argument('--census', action='store_true', default=False,
                   help='add the teaching census of the cells')
    p.add_argument('--generic', action='store_true', default=False,
                   help='reject objects whose bisectors are degenerate')

    p = sub.add_parser('worst-case', parents=[common],
                       help='arrangement with an n-facet region')
    _add_sizes(p, dprime=False)

    p = sub.add_parser('experiment', parents=[common],
                       help='seeded experiment campaign')
    p.add_argument('--mode', required=True, choices=experiments.MODES)
    _add_sizes(p)
    p.add_argument('--sample', type=int, metavar='K',
                   help='teach-census: estimate from K sampled regions')
    p.add_argument('--jobs', type=int, default=1,
                   help='worker processes (defaults to 1)')
    p.add_argument('--with-replacement', dest='with_replacement',
                   action='store_true', default=False)
    p.add_argument('--phi', default='identity')

    return parser


def _error(msg):
    """Print msg and return the error exit status."""
    sys.stderr.write('[ERROR] {}\n'.format(msg))
    return EXIT_ERROR


def _setup_logging(verbose):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level,
                        format='%(levelname)s %(name)s: %(message)s')


def _emit(args, stream, document, rows):
    if args.format == 'csv':
        experiments.write_rows(stream, rows)
    else:
        stream.write(serialize.dumps(document))
    return EXIT_OK


def _count(args, stream):
    n, dprime = args.n, args.dprime or args.d
    document = {
        'regions': counting.regions_relaxed(n, dprime),
        'faces': counting.faces_relaxed(n, dprime),
        'avg_teaching': format_rational(counting.avg_teaching(n, dprime)),
        'bounds': None,
    }
    if n > 2 * dprime:
        low, high = counting.region_bounds(n, dprime)
        avg_low, avg_high = counting.average_bounds(n, dprime)
        document['bounds'] = {
            'regions': [format_rational(low), format_rational(high)],
            'avg_teaching': [format_rational(avg_low),
                             format_rational(avg_high)],
        }
    rows = [{'regions': document['regions'], 'faces': document['faces'],
             'avg_teaching': document['avg_teaching']}]
    return _emit(args, stream, document, rows)


def _enumerate(args, stream):
    a = serialize.load_arrangement(args.arrangement)
    regions = enumerate_regions(a)
    document = {
        'position': str(a.position),
        'count': len(regions),
        'regions': [serialize.region_to_dict(r) for r in regions],
    }
    if args.faces:
        faces = enumerate_faces(a)
        document['faces'] = {'total': faces.total,
                             'per_hyperplane': list(faces.counts)}
    rows = [{'signs': r.signature,
             'witness': ' '.join(format_rational(c) for c in r.witness)}
            for r in regions]
    return _emit(args, stream, document, rows)


def _teach(args, stream):
    a = serialize.load_arrangement(args.arrangement)
    signs = utils.parse_signature(args.region, len(a))
    region = find_region(a, signs)
    if region is None:
        raise EmptyConstraintRegion('Region {} is empty'.format(args.region))
    document = serialize.teaching_set_to_dict(teaching_set(a, region))
    return _emit(args, stream, document, document['queries'])


def _census_document(census):
    return {
        'regions': len(census.sizes),
        'total': census.total,
        'mean': format_rational(census.mean),
        'histogram': {str(k): v for k, v in census.histogram.items()},
    }


def _census(args, stream):
    a = serialize.load_arrangement(args.arrangement)
    census = teaching_census(a)
    rows = [{'signs': r.signature, 'size': s}
            for r, s in zip(census.regions, census.sizes)]
    return _emit(args, stream, _census_document(census), rows)


def _run(args, stream, options):
    options = dict(vars(args), **options)
    cfg = experiments.validate_config(options)
    report = experiments.run_experiment(cfg)
    if args.format == 'csv':
        experiments.write_csv(report, stream)
        sys.stderr.write(serialize.dumps(report.summary))
    else:
        experiments.write_json(report, stream)
    return EXIT_OK if report.passed else EXIT_BOUND


def _dichotomy(args, stream):
    phi = FeatureMap.parse(args.phi)
    ps = normalize_last_to_basis(serialize.load_points(args.points))
    census = class_census(ps, phi, extreme=args.extreme)
    document = {
        'points': len(ps),
        'classes': len(census.classes),
        'census': _census_document(census.census),
    }
    rows = [{'positive': ' '.join(map(str, sorted(c.positive))),
             'negative': ' '.join(map(str, sorted(c.negative))),
             'size': s} for c, s in zip(census.classes, census.sizes)]
    if args.extreme:
        document['extreme'] = [
            {'positive': sorted(c.positive), 'negative': sorted(c.negative),
             'extreme': sorted(e.indices)}
            for c, e in zip(census.classes, census.extreme)]
    return _emit(args, stream, document, rows)


def _rank(args, stream):
    instance = bisectors(serialize.load_points(args.objects),
                         generic=args.generic)
    regions = enumerate_regions(instance.arrangement)
    table = validate_e1(instance, regions)
    document = {
        'objects': len(instance),
        'cells': len(table),
        'rankings': [{'signs': r.signature, 'ranking': list(k.order)}
                     for r, k in table],
    }
    if args.census:
        document['census'] = _census_document(
            ranking_census(instance, regions))
    rows = [{'signs': r.signature, 'ranking': str(k)} for r, k in table]
    return _emit(args, stream, document, rows)


def _worst_case(args, stream):
    cfg = experiments.validate_config(dict(vars(args),
                                           mode=experiments.WORST_CASE))
    a, region = experiments.worst_case_instance(cfg.n, cfg.d)
    size = len(teaching_set(a, region))
    document = {
        'arrangement': serialize.arrangement_to_dict(a),
        'target': region.signature,
        'teaching_size': size,
    }
    _emit(args, stream, document,
          [{'target': region.signature, 'teaching_size': size}])
    return EXIT_OK if size == args.n else EXIT_BOUND


_COMMANDS = {
    'count': _count,
    'enumerate': _enumerate,
    'teach': _teach,
    'census': _census,
    'learn-active': lambda args, stream: _run(
        args, stream, {'mode': experiments.ACTIVE}),
    'learn-passive': lambda args, stream: _run(
        args, stream, {'mode': experiments.PASSIVE}),
    'dichotomy': _dichotomy,
    'rank': _rank,
    'worst-case': _worst_case,
    'experiment': lambda args, stream: _run(args, stream, {}),
}


def main(args=None):
    parser = create_parser()
    args = parser.parse_args(args)
    _setup_logging(args.verbose)

    close_stream = False
    if args.out:
        try:
            stream = open(args.out, 'w', encoding='utf-8', newline='')
            close_stream = True
        except OSError as e:
            return _error('Failed to open {}: {}'.format(args.out, e))
    else:
        stream = sys.stdout

    try:
        status = _COMMANDS[args.command](args, stream)
    except PolyTeachError as e:
        return _error(e)
    finally:
        stream.flush()
        if close_stream:
            stream.close()
    return status
