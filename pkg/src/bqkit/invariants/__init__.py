# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, unicode_literals

from .errors import *
from .coloring import (
    CountResult, RChecker, SeedPlan, count_colorings, enumerate_colorings,
    brute_force_colorings,
)
from .homcount import hom_count_presentation, iter_homs
from .separation import (
    Distinction, Separated, ProvedEqual, Unknown, distinguish,
    separate_terms,
)
from .engine import CountEngine, CountRunner, load_manifest
