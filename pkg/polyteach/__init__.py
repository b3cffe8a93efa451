#
# Copyright (C) 2026 the polyteach authors and contributors
#
# This module is part of polyteach and is released under
# the BSD License: https://opensource.org/licenses/BSD-3-Clause

"""Teaching and learning regions of hyperplane arrangements, exactly."""

# Setup namespace
from polyteach import exact
from polyteach import arrangement
from polyteach import counting
from polyteach import teaching
from polyteach import learners
from polyteach import dichotomy
from polyteach import ranking
from polyteach import serialize
from polyteach import experiments
from polyteach import cli

from polyteach.exceptions import EmptyConstraintRegion
from polyteach.utils import parse_signature


__version__ = '0.1.0.dev0'
__all__ = ['exact', 'arrangement', 'counting', 'teaching', 'learners',
           'dichotomy', 'ranking', 'serialize', 'experiments', 'cli']


def regions(hyperplanes, dimension=None):
    """Enumerate the regions of an arrangement.

    :param hyperplanes: An :class:`~polyteach.arrangement.Arrangement` or
        a list of ``(normal, bias)`` pairs.
    :param dimension: Ambient dimension (optional for nonempty input).
    :returns: A list of :class:`~polyteach.arrangement.Region` instances
        sorted by sign vector.
    """
    return arrangement.enumerate_regions(_as_arrangement(hyperplanes,
                                                         dimension))


def teach(hyperplanes, signs, dimension=None):
    """Minimal teaching set of the region with sign vector *signs*.

    :param signs: A tuple of +1/-1 or a string such as ``"+-+"``.
    :returns: A :class:`~polyteach.teaching.TeachingSet`.
    """
    a = _as_arrangement(hyperplanes, dimension)
    if isinstance(signs, str):
        signs = parse_signature(signs, len(a))
    region = arrangement.find_region(a, signs)
    if region is None:
        raise EmptyConstraintRegion('Region {} is empty'.format(signs))
    return teaching.teaching_set(a, region)


def census(hyperplanes, dimension=None):
    """Teaching-set sizes of all regions with their exact mean.

    :returns: A :class:`~polyteach.teaching.TeachingCensus`.
    """
    return teaching.teaching_census(_as_arrangement(hyperplanes, dimension))


def _as_arrangement(hyperplanes, dimension):
    if isinstance(hyperplanes, arrangement.Arrangement):
        return hyperplanes
    return arrangement.Arrangement(hyperplanes, dimension)
