# -*- coding: utf-8 -*-
from __future__ import absolute_import, print_function, unicode_literals

import os


def package_path(*parts):
    """ Builds a path to a resource shipped inside the package.
    """
    abspath = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    return os.path.join(abspath, *parts)
