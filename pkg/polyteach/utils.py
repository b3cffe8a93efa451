#
# Copyright (C) 2026 the polyteach authors and contributors
#
# This module is part of polyteach and is released under
# the BSD License: https://opensource.org/licenses/BSD-3-Clause

import numpy as np

from polyteach.exceptions import ParseError

_SEED_MOD = 2 ** 64

SIGN_CHARS = {1: '+', -1: '-'}


def make_rng(seed, *stream):
    """Random generator for *seed*, optionally split into a sub-stream.

    ``make_rng(seed, i)`` is the generator for trial ``i``; it depends on
    nothing but ``(seed, i)``, so trials can run in any order.
    """
    entropy = [int(seed) % _SEED_MOD] + [int(s) % _SEED_MOD for s in stream]
    return np.random.default_rng(np.random.SeedSequence(entropy))


def randint(rng, low, high):
    """Uniform integer in the closed range ``[low, high]`` as a plain int."""
    return int(rng.integers(low, high + 1))


def permutation(rng, n):
    return [int(i) for i in rng.permutation(n)]


def signature(signs):
    """``(1, -1, 1)`` -> ``'+-+'``."""
    return ''.join(SIGN_CHARS[s] for s in signs)


def parse_signature(text, length=None):
    """``'+-+'`` -> ``(1, -1, 1)``."""
    text = text.strip()
    if not text or any(ch not in '+-' for ch in text):
        raise ParseError('Sign vector must consist of "+" and "-", got '
                         '{!r}'.format(text))
    if length is not None and len(text) != length:
        raise ParseError('Sign vector {!r} has length {}, expected {}'.format(
            text, len(text), length))
    return tuple(1 if ch == '+' else -1 for ch in text)


def trial_seed(seed, trial):
    """Integer seed of trial *trial*, for generators that take a seed."""
    return int(make_rng(seed, trial).integers(2 ** 63))
