# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals
"""
Intended to provide the definitions of significant signals.
"""

COUNT_STARTED = 'count.started'
COUNT_FINISHED = 'count.finished'

BATCH_FINISHED = 'batch.finished'

CRITERION_PASSED = 'criterion.passed'
CRITERION_FAILED = 'criterion.failed'
