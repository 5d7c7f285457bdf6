# -*- coding: utf-8 -*-
"""
Batch counting on a pool of greenlets.
"""
from __future__ import absolute_import, print_function, unicode_literals

import io
import os
import json
import logging

import gevent
from gevent import Greenlet
from gevent.pool import Pool

from ..core import signals
from ..core.defines import KINDS
from ..algebra import load_biquandle
from ..diagram import load_diagram
from .coloring import count_colorings
from .errors import ManifestError

_logger = logging.getLogger(__name__)


class CountRunner(Greenlet):
    """ One count query running as a greenlet.
    """
    def __init__(self, query_id, diagram, target, mode, oracle=False,
                 limit=None):
        super(CountRunner, self).__init__()
        self._query_id = query_id
        self.diagram = diagram
        self.target = target
        self.mode = mode
        self.oracle = oracle
        self.limit = limit

    @property
    def query_id(self):
        return self._query_id

    def _run(self):
        return count_colorings(self.diagram, self.target, self.mode,
                               oracle=self.oracle, limit=self.limit)

    def __hash__(self):
        return hash(self._query_id)

    def __eq__(self, other):
        return (isinstance(other, CountRunner) and
                self.query_id == other.query_id)


class CountEngine(object):

    def __init__(self, workers=1, oracle_limit=None):
        self.context = None
        self.workers = max(1, workers)
        self.oracle_limit = oracle_limit
        self._pool = None
        self._runners = []

    def start(self, ctx):
        _logger.debug("Starting count engine with %d worker(s)...",
                      self.workers)
        self.context = ctx
        self.context['countengine'] = self
        self._pool = Pool(self.workers)

    def stop(self, ctx):
        _logger.debug("Stopping count engine...")
        if self._pool is not None:
            self._pool.kill()
        self._runners = []
        ctx.unbind('countengine')

    def _send(self, signal, **kwargs):
        if self.context is not None:
            self.context.send(signal, **kwargs)

    def submit(self, diagram, target, mode, oracle=False):
        """ Queues one count.

        :return: the CountRunner; its value is a CountResult.
        """
        runner = CountRunner(len(self._runners), diagram, target, mode,
                             oracle=oracle, limit=self.oracle_limit)
        self._runners.append(runner)
        self._send(signals.COUNT_STARTED, query_id=runner.query_id,
                   diagram=diagram.name, target=target.ident, mode=mode)
        self._pool.start(runner)
        return runner

    def run_batch(self, diagrams, targets, modes, oracle=False):
        """ Counts every (diagram, target, mode) combination.

        :return: CountResults ordered by diagram, target and mode position.
        """
        runners = [self.submit(d, bq, mode, oracle=oracle)
                   for d in diagrams for bq in targets for mode in modes]
        gevent.joinall(runners, raise_error=True)
        results = []
        for runner in runners:
            result = runner.value
            self._send(signals.COUNT_FINISHED, result=result)
            results.append(result)
        self._send(signals.BATCH_FINISHED, results=results)
        _logger.info("Batch of %d count(s) finished", len(results))
        return results


def load_manifest(path):
    """ Reads a batch manifest, resolving paths against its directory.

    :return: (diagrams, targets, modes)
    :raise ManifestError: when the manifest is unreadable or malformed.
    """
    try:
        with io.open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except (IOError, OSError, ValueError) as ex:
        raise ManifestError(path, str(ex))
    if not isinstance(data, dict):
        raise ManifestError(path, "expected a JSON object")

    for field in ('diagrams', 'targets'):
        if not isinstance(data.get(field), list) or not data[field]:
            raise ManifestError(path, "%r must be a non-empty list" % field)
    modes = data.get('modes', [KINDS[0]])
    for mode in modes:
        if mode not in KINDS:
            raise ManifestError(path, "unknown mode %r" % mode)

    folder = os.path.dirname(os.path.abspath(path))

    def resolve(it):
        return it if os.path.isabs(it) else os.path.join(folder, it)

    diagrams = [load_diagram(resolve(it)) for it in data['diagrams']]
    targets = [load_biquandle(resolve(it)) for it in data['targets']]
    return diagrams, targets, list(modes)
