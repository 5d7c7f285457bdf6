# -*- coding: utf-8 -*-
"""
Counting colourings of diagrams by finite biquandles.

A colouring assigns an element to every semiarc so that each crossing
relation holds; in topological mode the R identities must additionally
hold on the set of colours used.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import time
import logging
import itertools

from gevent.pool import Pool
from six.moves import range

from ..core.defines import FUNDAMENTAL, TOPOLOGICAL, KINDS
from ..diagram import components
from .errors import OracleTooLarge

_logger = logging.getLogger(__name__)

_FORWARD = 'forward'
_BACKWARD = 'backward'


class CountResult(object):
    """ One count query: diagram id, target id, mode, count and elapsed ms.
    """
    def __init__(self, diagram, target, mode, count, ms=0):
        self.diagram = diagram
        self.target = target
        self.mode = mode
        self.count = count
        self.ms = ms

    def to_dict(self):
        return dict(diagram=self.diagram, target=self.target, mode=self.mode,
                    count=self.count, ms=self.ms)

    @classmethod
    def from_dict(cls, data):
        return cls(data['diagram'], data['target'], data['mode'],
                   data['count'], data.get('ms', 0))

    def __eq__(self, other):
        return (isinstance(other, CountResult) and
                (self.diagram, self.target, self.mode, self.count) ==
                (other.diagram, other.target, other.mode, other.count))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return '<CountResult %s/%s %s: %d>' % (self.diagram, self.target,
                                               self.mode, self.count)


class RChecker(object):
    """ Checks the R identities over sets of colours, caching per set.
    """
    def __init__(self, bq):
        self.bq = bq
        self._cache = {}

    def holds(self, colours):
        key = frozenset(colours)
        ok = self._cache.get(key)
        if ok is None:
            ok = self._check(sorted(key))
            self._cache[key] = ok
        return ok

    def _check(self, values):
        up, down = self.bq.up, self.bq.down
        bar_up, bar_down = self.bq.bar_up, self.bq.bar_down
        for a in values:
            for b in values:
                for c in values:
                    if up[a][down[b][c]] != up[a][b]:
                        return False
                    if bar_up[a][down[b][c]] != bar_up[a][b]:
                        return False
                    if down[a][up[b][c]] != down[a][b]:
                        return False
                    if bar_down[a][up[b][c]] != bar_down[a][b]:
                        return False
        return True


def _check_mode(mode):
    if mode not in KINDS:
        raise ValueError("unknown mode %r" % mode)


def _crossing_indices(d):
    index = dict((name, i) for i, name in enumerate(d.semiarcs))
    return [(c.sign, index[c.under_in], index[c.over_in],
             index[c.under_out], index[c.over_out]) for c in d.crossings]


def _crossings_hold(crossings, colours, bq):
    up, down, bar_up, bar_down = bq.up, bq.down, bq.bar_up, bq.bar_down
    for sign, ui, oi, uo, oo in crossings:
        u, o = colours[ui], colours[oi]
        if sign > 0:
            if up[u][o] != colours[uo] or down[o][u] != colours[oo]:
                return False
        else:
            if bar_up[u][o] != colours[uo] or bar_down[o][u] != colours[oo]:
                return False
    return True


class SeedPlan(object):
    """ Seed semiarcs plus the crossing steps that determine all others.

    Seeds are taken greedily: the first semiarc of each component, then the
    first semiarc still undetermined. After each seed, a crossing with both
    in-roles known yields its out-roles, one with both out-roles known yields
    its in-roles through the inverse of S.
    """
    def __init__(self, d):
        self.size = len(d.semiarcs)
        self.crossings = _crossing_indices(d)
        index = dict((name, i) for i, name in enumerate(d.semiarcs))

        known = set()
        self.seeds = []
        self.steps = []
        candidates = [index[comp[0]] for comp in components(d)]
        candidates.extend(range(self.size))
        for i in candidates:
            if len(known) == self.size:
                break
            if i in known:
                continue
            self.seeds.append(i)
            known.add(i)
            self._close(known)
        _logger.debug("Seed plan for %s: %d seed(s), %d step(s)",
                      d.name, len(self.seeds), len(self.steps))

    def _close(self, known):
        changed = True
        while changed:
            changed = False
            for ci, (_, ui, oi, uo, oo) in enumerate(self.crossings):
                if set((ui, oi, uo, oo)) <= known:
                    continue
                if ui in known and oi in known:
                    self.steps.append((_FORWARD, ci))
                    known.update((uo, oo))
                    changed = True
                elif uo in known and oo in known:
                    self.steps.append((_BACKWARD, ci))
                    known.update((ui, oi))
                    changed = True

    def propagate(self, seed_values, bq):
        """ Fills a colour list from seed values.

        :return: the colour list, or None on a conflict.
        """
        up, down, bar_up, bar_down = bq.up, bq.down, bq.bar_up, bq.bar_down
        colours = [None] * self.size
        for i, v in zip(self.seeds, seed_values):
            colours[i] = v

        def put(i, v):
            if colours[i] is None:
                colours[i] = v
                return True
            return colours[i] == v

        for direction, ci in self.steps:
            sign, ui, oi, uo, oo = self.crossings[ci]
            if direction == _FORWARD:
                u, o = colours[ui], colours[oi]
                if sign > 0:
                    ok = put(uo, up[u][o]) and put(oo, down[o][u])
                else:
                    ok = put(uo, bar_up[u][o]) and put(oo, bar_down[o][u])
            else:
                a, b = colours[oo], colours[uo]
                if sign > 0:
                    ok = put(ui, bar_up[b][a]) and put(oi, bar_down[a][b])
                else:
                    ok = put(ui, up[b][a]) and put(oi, down[a][b])
            if not ok:
                return None
        if not _crossings_hold(self.crossings, colours, bq):
            return None
        return colours


def _accept(colours, mode, checker):
    return mode == FUNDAMENTAL or checker.holds(colours)


def _propagated(plan, bq, mode, first_values=None):
    checker = RChecker(bq)
    ranges = [range(bq.order) for _ in plan.seeds]
    if first_values is not None and ranges:
        ranges[0] = first_values
    for seed_values in itertools.product(*ranges):
        colours = plan.propagate(seed_values, bq)
        if colours is not None and _accept(colours, mode, checker):
            yield colours


def _as_coloring(d, colours):
    return dict(zip(d.semiarcs, colours))


def _canonical(d, colour_lists):
    return [_as_coloring(d, it) for it in sorted(colour_lists)]


def enumerate_colorings(d, bq, mode=FUNDAMENTAL):
    """ All colourings of d by bq, ordered by their colour tuples in
    semiarc order.

    :return: list of dicts from semiarc name to element.
    """
    _check_mode(mode)
    plan = SeedPlan(d)
    return _canonical(d, [tuple(it) for it in _propagated(plan, bq, mode)])


def brute_force_colorings(d, bq, mode=FUNDAMENTAL, limit=None):
    """ The oracle: tries every assignment of elements to semiarcs.

    :param limit: the largest number of assignments tried.
    :raise OracleTooLarge: when order ** semiarcs exceeds limit.
    """
    _check_mode(mode)
    size = bq.order ** len(d.semiarcs)
    if limit is not None and size > limit:
        raise OracleTooLarge(size, limit)
    crossings = _crossing_indices(d)
    checker = RChecker(bq)
    found = []
    for colours in itertools.product(range(bq.order),
                                     repeat=len(d.semiarcs)):
        if (_crossings_hold(crossings, colours, bq) and
                _accept(colours, mode, checker)):
            found.append(colours)
    return _canonical(d, found)


def _split(values, parts):
    chunks = [values[i::parts] for i in range(parts)]
    return [it for it in chunks if it]


def count_colorings(d, bq, mode=FUNDAMENTAL, oracle=False, workers=1,
                    limit=None):
    """ Counts colourings of d by bq.

    :param oracle: use the brute-force search instead of propagation.
    :param workers: greenlets sharing the values of the first seed.
    :param limit: assignment limit passed to the oracle.
    :return: a CountResult.
    """
    _check_mode(mode)
    started = time.time()
    if oracle:
        count = len(brute_force_colorings(d, bq, mode, limit=limit))
    else:
        plan = SeedPlan(d)
        if workers > 1 and plan.seeds:
            pool = Pool(workers)
            parts = _split(list(range(bq.order)), workers)
            counts = pool.map(
                lambda part: sum(1 for _ in _propagated(plan, bq, mode,
                                                        part)),
                parts)
            count = sum(counts)
        else:
            count = sum(1 for _ in _propagated(plan, bq, mode))
    ms = int(round((time.time() - started) * 1000))
    _logger.info("%s into %s (%s): %d colouring(s)", d.name, bq.ident, mode,
                 count)
    return CountResult(d.name, bq.ident, mode, count, ms)


__all__ = ['CountResult', 'RChecker', 'SeedPlan', 'enumerate_colorings',
           'brute_force_colorings', 'count_colorings', 'FUNDAMENTAL',
           'TOPOLOGICAL']
