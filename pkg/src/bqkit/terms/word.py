# -*- coding: utf-8 -*-
"""
Freely reduced words over signed generator letters.

A word is a tuple of Letter values. Exponents are +1 or -1 only; powers
are written out.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

from collections import namedtuple

from .term import NAME_PATTERN


class Letter(namedtuple('Letter', 'name exp')):
    __slots__ = ()

    def inverse(self):
        return Letter(self.name, -self.exp)

    def __str__(self):
        return '%s%s' % (self.name, '+' if self.exp > 0 else '-')


EMPTY = ()


def letter(name, exp=1):
    return Letter(name, 1 if exp > 0 else -1)


def reduce_word(letters):
    """ Cancels adjacent inverse pairs until none is left.
    """
    out = []
    for it in letters:
        if out and out[-1].name == it.name and out[-1].exp == -it.exp:
            out.pop()
        else:
            out.append(it)
    return tuple(out)


def word(*items):
    """ Builds a reduced word from letters or (name, exp) pairs.
    """
    return reduce_word(it if isinstance(it, Letter) else letter(*it)
                       for it in items)


def word_concat(u, v):
    return reduce_word(tuple(u) + tuple(v))


def word_invert(u):
    return tuple(it.inverse() for it in reversed(u))


def word_conjugate(g, v):
    """ The reduced form of v^-1 g v for a single letter g.
    """
    return reduce_word(word_invert(v) + (g,) + tuple(v))


def mentions(u, name):
    return any(it.name == name for it in u)


def format_word(u):
    return ','.join(str(it) for it in u)


def parse_word(text):
    text = text.strip()
    if not text:
        return EMPTY
    letters = []
    for item in text.split(','):
        item = item.strip()
        if (len(item) < 2 or item[-1] not in '+-' or
                NAME_PATTERN.fullmatch(item[:-1]) is None):
            raise ValueError("bad letter %r" % item)
        letters.append(letter(item[:-1], 1 if item[-1] == '+' else -1))
    return reduce_word(letters)
