# -*- coding: utf-8 -*-
"""
Standard families of finite biquandles. Every constructor validates its
tables and raises AxiomViolation if the parameters give no biquandle.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

from six.moves import range

from .biquandle import FiniteBiquandle


def _tables(n, up_fn, down_fn):
    up = [[up_fn(a, b) % n for b in range(n)] for a in range(n)]
    down = [[down_fn(a, b) % n for b in range(n)] for a in range(n)]
    return up, down


def trivial(n):
    """ Both operations are the first-argument projection. """
    up, down = _tables(n, lambda a, b: a, lambda a, b: a)
    return FiniteBiquandle(up, down, name='trivial-%d' % n)


def shift(n):
    """ a^b = a+1, a_b = a-1 (mod n). """
    up, down = _tables(n, lambda a, b: a + 1, lambda a, b: a - 1)
    return FiniteBiquandle(up, down, name='shift-%d' % n)


def dihedral(n):
    """ The dihedral quandle: a^b = 2b-a, down is the projection. """
    up, down = _tables(n, lambda a, b: 2 * b - a, lambda a, b: a)
    return FiniteBiquandle(up, down, name='dihedral-%d' % n)


def alexander(n, s, t):
    """ Alexander biquandle on Z_n: a^b = t*a + (1-s*t)*b, a_b = s*a.

    Valid whenever s and t are units mod n.
    """
    up, down = _tables(n, lambda a, b: t * a + (1 - s * t) * b,
                       lambda a, b: s * a)
    return FiniteBiquandle(up, down, name='alexander-%d-%d-%d' % (n, s, t))
