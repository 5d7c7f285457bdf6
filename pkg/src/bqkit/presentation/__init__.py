# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, unicode_literals

from .errors import *
from .presentation import (
    Presentation, fundamental_presentation, topological_presentation,
    materialize_R, r_relations, format_presentation, parse_presentation,
    load_presentation,
)
from .tietze import tietze_eliminate
from ..terms import substitute
