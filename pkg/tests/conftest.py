# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest

from bqkit.util import package_path
from bqkit.verify import Fixtures


@pytest.fixture(scope='session')
def fixtures():
    return Fixtures()


@pytest.fixture(scope='session')
def fixture_path():
    def path(name):
        return package_path('fixtures', name)
    return path
