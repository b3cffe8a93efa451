from fractions import Fraction

import pytest

from polyteach import serialize
from polyteach.arrangement import Region, find_region
from polyteach.exceptions import DimensionMismatch, ParseError
from polyteach.teaching import teaching_set


def test_arrangement_roundtrip(filepath, load_file):
    a = serialize.load_arrangement(filepath('triangle.json'))
    assert len(a) == 3
    assert a[2].normal == (1, 1)
    text = serialize.dumps(serialize.arrangement_to_dict(a))
    assert text == load_file('triangle.json')


def test_dump_arrangement(triangle, filepath, load_file, tmpdir):
    path = str(tmpdir.join('out.json'))
    serialize.dump_arrangement(triangle, path)
    assert serialize.load_arrangement(path) == triangle
    with open(path, encoding='utf-8') as f:
        assert f.read() == load_file('triangle.json')


def test_integer_entries(filepath, parallel):
    assert serialize.load_arrangement(filepath('parallel.json')) == parallel


def test_zero_denominator(filepath):
    with pytest.raises(ParseError, match=r'hyperplanes\[0\]\.bias'):
        serialize.load_arrangement(filepath('zero_denominator.json'))


@pytest.mark.parametrize('data, match', [
    ({'dimension': 2, 'hyperplanes': [{'normal': [0.5, 1], 'bias': 0}]},
     r'hyperplanes\[0\]\.normal\[0\]'),
    ({'dimension': 2, 'hyperplanes': [{'normal': [1, 1]}]},
     r"Missing field 'bias' in hyperplanes\[0\]"),
    ({'dimension': 2, 'hyperplanes': [{'normal': [1], 'bias': 0}]},
     r'Expected 2 entries'),
    ({'dimension': 2, 'hyperplanes': [{'normal': [0, 0], 'bias': 1}]},
     r'Zero normal'),
    ({'dimension': 0, 'hyperplanes': []}, r'Invalid dimension'),
    ({'dimension': True, 'hyperplanes': []}, r'Invalid dimension'),
    ({'hyperplanes': []}, r"Missing field 'dimension'"),
    ({'dimension': 2, 'hyperplanes': {}}, r'Expected a list'),
    ([], r'Expected an object'),
])
def test_arrangement_schema(data, match):
    with pytest.raises(ParseError, match=match):
        serialize.arrangement_from_dict(data)


def test_points(filepath):
    points = serialize.load_points(filepath('points4.json'))
    assert points == [(1, 0), (1, 1), (1, 2), (0, 1)]
    assert serialize.points_to_dict(points) == {
        'dimension': 2,
        'points': [['1', '0'], ['1', '1'], ['1', '2'], ['0', '1']]}


def test_points_schema():
    with pytest.raises(ParseError):
        serialize.points_from_dict({'dimension': 2, 'points': []})
    with pytest.raises(ParseError, match=r'points\[1\]'):
        serialize.points_from_dict({'dimension': 2,
                                    'points': [[1, 2], [3]]})
    with pytest.raises(DimensionMismatch):
        serialize.points_to_dict([])


def test_region_dict():
    region = Region((1, -1), (Fraction(1, 2), -3))
    data = serialize.region_to_dict(region)
    assert data == {'signs': '+-', 'witness': ['1/2', '-3']}
    back = serialize.region_from_dict(data)
    assert back == region
    assert back.witness == region.witness


def test_region_schema():
    with pytest.raises(ParseError, match='signs'):
        serialize.region_from_dict({'signs': 3, 'witness': []})
    with pytest.raises(ParseError):
        serialize.region_from_dict({'signs': '+x', 'witness': [1]})


def test_teaching_set_dict(triangle):
    ts = teaching_set(triangle, find_region(triangle, (-1, -1, -1)))
    assert serialize.teaching_set_to_dict(ts) == {
        'target': '---',
        'size': 2,
        'queries': [{'hyperplane': 0, 'label': '-'},
                    {'hyperplane': 1, 'label': '-'}],
    }


def test_loads_syntax_error():
    with pytest.raises(ParseError, match='line 2, column'):
        serialize.loads('{\n  "dimension": 2,,\n}')


def test_read_missing(filepath):
    with pytest.raises(ParseError, match='Failed to read'):
        serialize.load_arrangement(filepath('missing.json'))


def test_read_not_utf8(filepath):
    with pytest.raises(ParseError, match='Failed to read'):
        serialize.load_arrangement(filepath('not_utf8.json'))


def test_dumps_is_ascii():
    assert serialize.dumps({'a': 'ä'}) == '{\n  "a": "\\u00e4"\n}\n'
