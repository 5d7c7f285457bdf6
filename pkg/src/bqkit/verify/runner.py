# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import time
import logging
from collections import namedtuple

from ..core import BiquandleError, signals
from .. import settings as default_settings
from .criteria import all_criteria, get_criterion
from .fixtures import Fixtures

_logger = logging.getLogger(__name__)


class Outcome(namedtuple('Outcome', 'key title passed detail ms')):
    __slots__ = ()

    def to_dict(self):
        return self._asdict()


def run_criterion(item, fx, seed):
    started = time.time()
    try:
        item.func(fx, seed)
        passed, detail = True, ''
    except (BiquandleError, IOError, OSError) as ex:
        _logger.debug("Criterion %s failed", item.key, exc_info=True)
        passed, detail = False, str(ex)
    ms = int(round((time.time() - started) * 1000))
    return Outcome(item.key, item.title, passed, detail, ms)


def run_criteria(fixtures_dir=None, keys=None, seed=None, ctx=None):
    """ Runs the named criteria, or all of them, in registration order.

    :param ctx: a core Context to send progress signals through.
    :return: list of Outcome.
    """
    if seed is None:
        seed = default_settings.RANDOM_SEED
    fx = Fixtures(fixtures_dir)
    if keys:
        items = [get_criterion(it) for it in keys]
    else:
        items = all_criteria()

    outcomes = []
    for item in items:
        _logger.info("Running criterion %s", item.key)
        outcome = run_criterion(item, fx, seed)
        if ctx is not None:
            signal = (signals.CRITERION_PASSED if outcome.passed
                      else signals.CRITERION_FAILED)
            ctx.send(signal, outcome=outcome)
        outcomes.append(outcome)
    return outcomes
