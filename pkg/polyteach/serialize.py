#
# Copyright (C) 2026 the polyteach authors and contributors
#
# This module is part of polyteach and is released under
# the BSD License: https://opensource.org/licenses/BSD-3-Clause

"""JSON reading and writing of arrangements, point sets and regions.

Rationals are written as strings ``"p/q"`` (``"p"`` when q is 1); plain
JSON integers are accepted on input.  :func:`dumps` is canonical, so
parse -> serialize -> parse reproduces a file byte for byte.
"""

import json

from polyteach import utils
from polyteach.arrangement import Arrangement, Region
from polyteach.exact import format_rational, parse_rational
from polyteach.exceptions import DimensionMismatch, ParseError


def _rational(value, context):
    if isinstance(value, int) and not isinstance(value, bool):
        value = str(value)
    return parse_rational(value, context)


def _vector(values, context, dimension=None):
    if not isinstance(values, list):
        raise ParseError('Expected a list in {}, got {!r}'.format(
            context, values))
    if dimension is not None and len(values) != dimension:
        raise ParseError('Expected {} entries in {}, got {}'.format(
            dimension, context, len(values)))
    return tuple(_rational(v, '{}[{}]'.format(context, i))
                 for i, v in enumerate(values))


def _field(data, key, context):
    if not isinstance(data, dict):
        raise ParseError('Expected an object in {}'.format(context or 'input'))
    try:
        return data[key]
    except KeyError:
        raise ParseError('Missing field {!r}{}'.format(
            key, ' in {}'.format(context) if context else ''))


def _dimension(data):
    d = _field(data, 'dimension', None)
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise ParseError('Invalid dimension {!r}'.format(d))
    return d


def _format_vector(v):
    return [format_rational(c) for c in v]


def arrangement_from_dict(data):
    d = _dimension(data)
    rows = _field(data, 'hyperplanes', None)
    if not isinstance(rows, list):
        raise ParseError('Expected a list in hyperplanes')
    planes = []
    for i, row in enumerate(rows):
        context = 'hyperplanes[{}]'.format(i)
        normal = _vector(_field(row, 'normal', context),
                         context + '.normal', d)
        bias = _rational(_field(row, 'bias', context), context + '.bias')
        if all(c == 0 for c in normal):
            raise ParseError('Zero normal in {}'.format(context))
        planes.append((normal, bias))
    return Arrangement(planes, d)


def arrangement_to_dict(a):
    return {
        'dimension': a.dimension,
        'hyperplanes': [{'normal': _format_vector(h.normal),
                         'bias': format_rational(h.bias)} for h in a],
    }


def points_from_dict(data):
    """Point list of a ``{"dimension", "points"}`` object, unnormalized."""
    d = _dimension(data)
    points = _field(data, 'points', None)
    if not isinstance(points, list) or not points:
        raise ParseError('Expected a nonempty list in points')
    return [_vector(p, 'points[{}]'.format(i), d)
            for i, p in enumerate(points)]


def points_to_dict(points):
    points = list(points)
    if not points:
        raise DimensionMismatch('Cannot infer the dimension of no points')
    return {'dimension': len(points[0]),
            'points': [_format_vector(p) for p in points]}


def region_to_dict(region):
    return {'signs': region.signature,
            'witness': _format_vector(region.witness)}


def region_from_dict(data, context='region'):
    signs = _field(data, 'signs', context)
    if not isinstance(signs, str):
        raise ParseError('Expected a sign string in {}.signs'.format(context))
    witness = _vector(_field(data, 'witness', context), context + '.witness')
    return Region(utils.parse_signature(signs), witness)


def teaching_set_to_dict(ts):
    return {
        'target': ts.target.signature,
        'size': len(ts),
        'queries': [{'hyperplane': q.hyperplane,
                     'label': utils.SIGN_CHARS[q.label]} for q in ts],
    }


def dumps(data):
    """Canonical JSON text of *data*."""
    return json.dumps(data, indent=2, ensure_ascii=True) + '\n'


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError('Invalid JSON at line {}, column {}: {}'.format(
            e.lineno, e.colno, e.msg))


def _read(path):
    try:
        with open(path, encoding='utf-8') as f:
            return loads(f.read())
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError('Failed to read {}: {}'.format(path, e))


def load_arrangement(path):
    return arrangement_from_dict(_read(path))


def load_points(path):
    return points_from_dict(_read(path))


def dump_arrangement(a, path):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(dumps(arrangement_to_dict(a)))
