#!/usr/bin/env python
#
# Copyright (C) 2026 the polyteach authors and contributors
#
# This setup script is part of polyteach and is released under
# the BSD License: https://opensource.org/licenses/BSD-3-Clause

from setuptools import setup


setup()
