# -*- coding: utf-8 -*-
"""
Access to a directory of fixture files.
"""
from __future__ import absolute_import, print_function, unicode_literals

import os
import glob

from ..algebra import load_biquandle
from ..diagram import load_diagram
from ..presentation import load_presentation
from ..util import package_path

DIAGRAM_EXT = '.pd'
TARGET_EXT = '.json'
PRESENTATION_EXT = '.txt'


def bundled_dir():
    return package_path('fixtures')


class Fixtures(object):
    """ Loads fixtures by name from one directory, caching diagrams and
    targets.
    """
    def __init__(self, folder=None):
        self.folder = os.path.abspath(folder or bundled_dir())
        self._cache = {}

    def path(self, name, ext):
        return os.path.join(self.folder, name + ext)

    def _load(self, loader, name, ext):
        key = (name, ext)
        if key not in self._cache:
            self._cache[key] = loader(self.path(name, ext))
        return self._cache[key]

    def diagram(self, name):
        return self._load(load_diagram, name, DIAGRAM_EXT)

    def target(self, name):
        return self._load(load_biquandle, name, TARGET_EXT)

    def presentation(self, name):
        return self._load(load_presentation, name, PRESENTATION_EXT)

    def diagram_names(self):
        pattern = os.path.join(self.folder, '*' + DIAGRAM_EXT)
        return sorted(os.path.splitext(os.path.basename(it))[0]
                      for it in glob.glob(pattern))

    def diagrams(self):
        return [self.diagram(it) for it in self.diagram_names()]
