# -*- coding: utf-8 -*-
"""
Terms over generators with the four biquandle operations.

Concrete syntax is fully parenthesised infix::

    term := name | "(" term op term ")"
    op   := "^" | "_" | "^-" | "_-"
    name := [a-z0-9]+
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import re
from collections import namedtuple

from .errors import TermSyntaxError, UnboundGenerator

UP = '^'
DOWN = '_'
BAR_UP = '^-'
BAR_DOWN = '_-'

NAME_PATTERN = re.compile(r'[a-z0-9]+')


class Generator(namedtuple('Generator', 'name')):
    __slots__ = ()

    def __str__(self):
        return format_term(self)


class Operation(tuple):
    """ Base of the four binary operation nodes. """
    __slots__ = ()
    symbol = None

    def __new__(cls, target, operand):
        return tuple.__new__(cls, (target, operand))

    @property
    def target(self):
        return self[0]

    @property
    def operand(self):
        return self[1]

    def __eq__(self, other):
        return type(self) is type(other) and tuple.__eq__(self, other)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.symbol, tuple(self)))

    def __repr__(self):
        return '%s(%r, %r)' % (type(self).__name__, self[0], self[1])

    def __str__(self):
        return format_term(self)


class Up(Operation):
    __slots__ = ()
    symbol = UP


class Down(Operation):
    __slots__ = ()
    symbol = DOWN


class BarUp(Operation):
    __slots__ = ()
    symbol = BAR_UP


class BarDown(Operation):
    __slots__ = ()
    symbol = BAR_DOWN


OPERATIONS = {UP: Up, DOWN: Down, BAR_UP: BarUp, BAR_DOWN: BarDown}


def generators_of(t):
    """ The generator names of a term, in first-occurrence order. """
    seen = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Generator):
            if node.name not in seen:
                seen.append(node.name)
        else:
            stack.append(node.operand)
            stack.append(node.target)
    return seen


def term_size(t):
    if isinstance(t, Generator):
        return 1
    return term_size(t.target) + term_size(t.operand)


class _Parser(object):

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message, pos=None):
        return TermSyntaxError(message, self.pos if pos is None else pos,
                               self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch):
        self.skip()
        if self.text[self.pos:self.pos + 1] != ch:
            raise self.error("expected %r" % ch)
        self.pos += 1

    def term(self):
        self.skip()
        if self.pos >= len(self.text):
            raise self.error("unexpected end of input")
        if self.text[self.pos] == '(':
            self.pos += 1
            target = self.term()
            op = self.operator()
            operand = self.term()
            self.expect(')')
            return OPERATIONS[op](target, operand)
        m = NAME_PATTERN.match(self.text, self.pos)
        if m is None:
            raise self.error("expected a generator name or '('")
        self.pos = m.end()
        return Generator(m.group(0))

    def operator(self):
        self.skip()
        ch = self.text[self.pos:self.pos + 1]
        if ch not in (UP, DOWN):
            raise self.error("expected an operator")
        self.pos += 1
        if self.text[self.pos:self.pos + 1] == '-':
            self.pos += 1
            return ch + '-'
        return ch

    def parse(self):
        t = self.term()
        self.skip()
        if self.pos != len(self.text):
            raise self.error("unexpected %r" % self.text[self.pos])
        return t


def parse_term(text):
    """ Parses a term.

    :raise TermSyntaxError: with the 0-based position of the problem.
    """
    return _Parser(text).parse()


def format_term(t):
    if isinstance(t, Generator):
        return t.name
    return '(%s %s %s)' % (format_term(t.target), t.symbol,
                           format_term(t.operand))


def operation_tables(bq):
    return {UP: bq.up, DOWN: bq.down, BAR_UP: bq.bar_up,
            BAR_DOWN: bq.bar_down}


def eval_term(t, env, bq, tables=None):
    """ Evaluates a term in a finite biquandle.

    :param env: mapping from generator name to element.
    :raise UnboundGenerator: when env lacks a generator of t.
    """
    if tables is None:
        tables = operation_tables(bq)
    if isinstance(t, Generator):
        try:
            return env[t.name]
        except KeyError:
            raise UnboundGenerator(t.name)
    x = eval_term(t.target, env, bq, tables)
    y = eval_term(t.operand, env, bq, tables)
    return tables[t.symbol][x][y]


def substitute(t, name, replacement):
    """ Replaces every Generator(name) leaf by replacement. """
    if isinstance(t, Generator):
        return replacement if t.name == name else t
    target = substitute(t.target, name, replacement)
    operand = substitute(t.operand, name, replacement)
    if target is t.target and operand is t.operand:
        return t
    return type(t)(target, operand)
