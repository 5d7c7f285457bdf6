# -*- coding: utf-8 -*-
"""
Homomorphisms between finite biquandles.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

from six.moves import range

_logger = logging.getLogger(__name__)


def _consistent(src, dst, f, k):
    """ Checks every product whose three elements are assigned and one of
    which is the newest, k.
    """
    for a in range(k + 1):
        for b in range(k + 1):
            for table_x, table_y in ((src.up, dst.up), (src.down, dst.down)):
                c = table_x[a][b]
                if c > k:
                    continue
                if k not in (a, b, c):
                    continue
                if f[c] != table_y[f[a]][f[b]]:
                    return False
    return True


def preserves_bars(src, dst, f):
    n = src.order
    return all(f[src.bar_up[a][b]] == dst.bar_up[f[a]][f[b]] and
               f[src.bar_down[a][b]] == dst.bar_down[f[a]][f[b]]
               for a in range(n) for b in range(n))


def homomorphisms(src, dst):
    """ Enumerates all maps f with f(a^b) = f(a)^f(b) and
    f(a_b) = f(a)_f(b).

    :return: list of tuples (f(0), ..., f(n-1)) in lexicographic order.
    """
    n = src.order
    m = dst.order
    found = []
    f = [None] * n

    def extend(k):
        if k == n:
            found.append(tuple(f))
            return
        for v in range(m):
            f[k] = v
            if _consistent(src, dst, f, k):
                extend(k + 1)
        f[k] = None

    extend(0)

    for it in found:
        # bar operations come for free with any homomorphism.
        assert preserves_bars(src, dst, it), it

    _logger.debug("%d homomorphism(s) %r -> %r", len(found), src, dst)
    return found
