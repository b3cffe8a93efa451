#!/usr/bin/env python
#
# Copyright (C) 2026 the polyteach authors and contributors
#
# This module is part of polyteach and is released under
# the BSD License: https://opensource.org/licenses/BSD-3-Clause

"""Entrypoint module for `python -m polyteach`."""

import sys

from polyteach.cli import main

if __name__ == '__main__':
    sys.exit(main())
