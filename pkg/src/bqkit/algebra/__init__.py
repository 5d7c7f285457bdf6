# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, unicode_literals

from .errors import *
from .biquandle import (
    FiniteBiquandle, AxiomReport, AxiomFailure, RViolation,
    check_axioms, validate_biquandle, bar_tables, is_quandle, satisfies_R,
    bar_identity_failures,
    r_consequences,
)
from .homs import homomorphisms, preserves_bars
from .search import enumerate_biquandles, enumerate_up_to
from .codec import parse_biquandle, check_file, load_biquandle, dump_biquandle
from . import families
