# -*- coding: utf-8 -*-
"""
Exhaustive search for all biquandles of a small order.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

from six.moves import range

from .biquandle import FiniteBiquandle, check_axioms
from .errors import OrderOutOfRange

_logger = logging.getLogger(__name__)

MAX_ORDER = 4

_UP = 0
_DOWN = 1

# order -> tuple of biquandles; the search is deterministic.
_found_cache = {}


def _cell_order(n):
    # completes the sub-tables on {0..k} before touching k+1.
    cells = [(a, b) for a in range(n) for b in range(n)]
    cells.sort(key=lambda ab: (max(ab), ab[0], ab[1]))
    return [(t, a, b) for a, b in cells for t in (_UP, _DOWN)]


class _PartialTables(object):
    """ Operation tables under construction; unknown entries are None.
    """
    def __init__(self, n):
        self.n = n
        self.up = [[None] * n for _ in range(n)]
        self.down = [[None] * n for _ in range(n)]

    def tables(self, t):
        return self.up if t == _UP else self.down

    @staticmethod
    def at(table, a, b):
        if a is None or b is None:
            return None
        return table[a][b]

    def column_free(self, t, a, b, v):
        table = self.tables(t)
        return all(table[x][b] != v for x in range(self.n) if x != a)

    def plausible(self):
        n, up, down, at = self.n, self.up, self.down, self.at

        images = set()
        for x in range(n):
            for y in range(n):
                p = down[y][x]
                q = up[x][y]
                if p is not None and q is not None:
                    if (p, q) in images:
                        return False
                    images.add((p, q))

        for a in range(n):
            for x in range(n):
                if up[x][a] == a:
                    d = down[a][x]
                    if d is not None and d != x:
                        return False
                if down[x][a] == a:
                    u = up[a][x]
                    if u is not None and u != x:
                        return False

        for a in range(n):
            for b in range(n):
                for c in range(n):
                    left = at(up, up[a][b], c)
                    if left is not None:
                        right = at(up, at(up, a, down[c][b]), up[b][c])
                        if right is not None and left != right:
                            return False
                    left = at(up, down[a][b], at(down, c, up[b][a]))
                    if left is not None:
                        right = at(down, up[a][c], at(up, b, down[c][a]))
                        if right is not None and left != right:
                            return False
                    left = at(down, down[a][b], c)
                    if left is not None:
                        right = at(down, at(down, a, up[c][b]), down[b][c])
                        if right is not None and left != right:
                            return False
        return True


def enumerate_biquandles(n, limit=MAX_ORDER):
    """ Generates every biquandle of order n, each exactly once, in
    row-major order of the (up, down) table encodings.

    :param n: the order.
    :param limit: the largest order accepted.
    :return: an iterator of FiniteBiquandle.
    """
    if not 1 <= n <= limit:
        raise OrderOutOfRange(n, limit)

    if n in _found_cache:
        return iter(_found_cache[n])

    cells = _cell_order(n)
    state = _PartialTables(n)
    found = []

    def extend(i):
        if i == len(cells):
            report = check_axioms(state.up, state.down)
            if report.passed:
                found.append(FiniteBiquandle(state.up, state.down,
                                             report=report))
            return
        t, a, b = cells[i]
        table = state.tables(t)
        for v in range(n):
            if not state.column_free(t, a, b, v):
                continue
            table[a][b] = v
            if state.plausible():
                extend(i + 1)
        table[a][b] = None

    extend(0)
    found.sort(key=lambda bq: bq.key)
    _found_cache[n] = tuple(found)
    _logger.info("Found %d biquandle(s) of order %d", len(found), n)
    return iter(found)


def enumerate_up_to(max_order, limit=MAX_ORDER):
    """ All biquandles of order 1..max_order, order by order.
    """
    targets = []
    for n in range(1, max_order + 1):
        targets.extend(enumerate_biquandles(n, limit=limit))
    return targets
