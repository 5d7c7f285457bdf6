# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, unicode_literals

from .errors import *
from .criteria import Criterion, criterion, all_criteria, get_criterion
from .fixtures import Fixtures, bundled_dir
from .runner import Outcome, run_criterion, run_criteria
