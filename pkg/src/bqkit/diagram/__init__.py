# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, unicode_literals

from .errors import *
from .diagram import (
    POSITIVE, NEGATIVE, Crossing, Diagram, parse_pd, load_diagram, format_pd,
    crossing_relations, components,
)
