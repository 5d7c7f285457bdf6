# -*- coding: utf-8 -*-
"""
The free topological model: triples (base, up-word, down-word) standing for
base^w1_w2.

A letter g+ in an up-word is the meridian around semiarc g taken through
the up-operation, g- through the bar-up operation; down-words likewise.
Triples (a, a^k w1, a^k w2) and (a, w1, w2) denote the same element, so
every triple is kept in canonical form: the leading run of base letters is
moved off the up-word and its inverse put in front of the down-word.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import re
from collections import namedtuple

from .errors import TripleSyntaxError, UnboundGenerator
from .term import (
    Generator, Up, Down, BarUp, BarDown, UP, DOWN, BAR_UP, BAR_DOWN,
    NAME_PATTERN,
)
from .word import (
    EMPTY, Letter, reduce_word, word_concat, word_invert, word_conjugate,
    format_word, parse_word, mentions as word_mentions,
)


class TopTriple(namedtuple('TopTriple', 'base up down')):
    __slots__ = ()

    def __str__(self):
        return format_triple(self)

    def mentions(self, name):
        return (self.base == name or word_mentions(self.up, name) or
                word_mentions(self.down, name))

    @property
    def size(self):
        return len(self.up) + len(self.down)


def canonical(base, up, down):
    up = reduce_word(up)
    down = reduce_word(down)
    m = 0
    while m < len(up) and up[m].name == base:
        m += 1
    if m:
        # all letters in the run share a sign in a reduced word.
        shift = tuple(Letter(base, -up[0].exp) for _ in range(m))
        up = up[m:]
        down = reduce_word(shift + down)
    return TopTriple(base, up, down)


def generator(name):
    return TopTriple(name, EMPTY, EMPTY)


def top_up(x, y):
    return canonical(x.base, word_concat(x.up, word_conjugate(
        Letter(y.base, 1), y.up)), x.down)


def top_bar_up(x, y):
    return canonical(x.base, word_concat(x.up, word_conjugate(
        Letter(y.base, -1), y.up)), x.down)


def top_down(x, y):
    return canonical(x.base, x.up, word_concat(x.down, word_conjugate(
        Letter(y.base, 1), y.down)))


def top_bar_down(x, y):
    return canonical(x.base, x.up, word_concat(x.down, word_conjugate(
        Letter(y.base, -1), y.down)))


TOP_OPERATIONS = {
    UP: top_up, DOWN: top_down, BAR_UP: top_bar_up, BAR_DOWN: top_bar_down,
}


def normalize(t):
    """ Rewrites a term to its triple normal form by structural recursion.
    """
    if isinstance(t, Generator):
        return generator(t.name)
    return TOP_OPERATIONS[t.symbol](normalize(t.target), normalize(t.operand))


def eval_triple(x, env, bq):
    """ Folds the up-word, then the down-word, onto env[base].

    :raise UnboundGenerator: when env lacks a generator of x.
    """
    def lookup(name):
        try:
            return env[name]
        except KeyError:
            raise UnboundGenerator(name)

    v = lookup(x.base)
    for it in x.up:
        table = bq.up if it.exp > 0 else bq.bar_up
        v = table[v][lookup(it.name)]
    for it in x.down:
        table = bq.down if it.exp > 0 else bq.bar_down
        v = table[v][lookup(it.name)]
    return v


def triple_to_term(x):
    """ The term base^l1^l2..._m1_m2... spelling a triple letter by letter.
    """
    t = Generator(x.base)
    for it in x.up:
        t = (Up if it.exp > 0 else BarUp)(t, Generator(it.name))
    for it in x.down:
        t = (Down if it.exp > 0 else BarDown)(t, Generator(it.name))
    return t


def substitute_triple(x, name, definition):
    """ Replaces generator name by the triple definition.

    Letters of name in the up-word become conjugates by the definition's
    up-word, letters in the down-word conjugates by its down-word.
    """
    def rewrite(u, conjugator):
        out = []
        for it in u:
            if it.name == name:
                out.extend(word_conjugate(Letter(definition.base, it.exp),
                                          conjugator))
            else:
                out.append(it)
        return reduce_word(out)

    up = rewrite(x.up, definition.up)
    down = rewrite(x.down, definition.down)
    if x.base == name:
        return canonical(definition.base, word_concat(definition.up, up),
                         word_concat(definition.down, down))
    return canonical(x.base, up, down)


def solve_base(side, other):
    """ From side = other, where side.base occurs nowhere else, derives the
    definition of side.base: other with side's words undone.
    """
    return canonical(other.base, word_concat(other.up, word_invert(side.up)),
                     word_concat(other.down, word_invert(side.down)))


def format_triple(x):
    return '%s ^[%s] _[%s]' % (x.base, format_word(x.up), format_word(x.down))


_TRIPLE = re.compile(r'^\s*(%s)\s*\^\[([^\]]*)\]\s*_\[([^\]]*)\]\s*$' %
                     NAME_PATTERN.pattern)


def parse_triple(text):
    """ Parses the text form ``base ^[w1] _[w2]`` into a canonical triple.
    """
    m = _TRIPLE.match(text)
    if m is None:
        raise TripleSyntaxError(text)
    try:
        up = parse_word(m.group(2))
        down = parse_word(m.group(3))
    except ValueError:
        raise TripleSyntaxError(text)
    return canonical(m.group(1), up, down)
