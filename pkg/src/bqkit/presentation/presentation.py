# -*- coding: utf-8 -*-
"""
Biquandle presentations: generators, relations, and a kind flag.

A topological presentation carries the R schema implicitly: for every
ordered triple of generators (a, b, c), a^(b_c) = a^b, a^-(b_c) = a^-b,
a_(b^c) = a_b and a_-(b^c) = a_-b.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import io
import logging
import itertools

from ..core.defines import FUNDAMENTAL, TOPOLOGICAL, KINDS
from ..diagram import crossing_relations
from ..terms import (
    Generator, Up, Down, BarUp, BarDown, parse_term, format_term,
    generators_of, TermSyntaxError,
)
from .errors import PresentationSyntaxError, UndeclaredGenerator

_logger = logging.getLogger(__name__)


class Presentation(object):
    """
    Generators plus relation equations between terms.

    :param eliminated: (generator, definition) pairs recorded by Tietze
        elimination, in elimination order.
    """
    def __init__(self, generators, relations, kind=FUNDAMENTAL,
                 eliminated=()):
        if kind not in KINDS:
            raise ValueError("unknown presentation kind %r" % kind)
        self.generators = tuple(generators)
        self.relations = tuple((lhs, rhs) for lhs, rhs in relations)
        self.kind = kind
        self.eliminated = tuple(eliminated)

        declared = set(self.generators)
        for lhs, rhs in self.relations:
            for name in generators_of(lhs) + generators_of(rhs):
                if name not in declared:
                    raise UndeclaredGenerator(name)

    @property
    def is_topological(self):
        return self.kind == TOPOLOGICAL

    def with_kind(self, kind):
        return Presentation(self.generators, self.relations, kind,
                            self.eliminated)

    def __eq__(self, other):
        return (isinstance(other, Presentation) and
                self.generators == other.generators and
                self.relations == other.relations and
                self.kind == other.kind)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return '<Presentation %s: %d generator(s), %d relation(s)>' % (
            self.kind, len(self.generators), len(self.relations))


def fundamental_presentation(d):
    return Presentation(d.semiarcs, crossing_relations(d), FUNDAMENTAL)


def topological_presentation(d):
    return Presentation(d.semiarcs, crossing_relations(d), TOPOLOGICAL)


def r_relations(a, b, c):
    """ The four R equations for one ordered triple of generator names.
    """
    a, b, c = Generator(a), Generator(b), Generator(c)
    return [
        (Up(a, Down(b, c)), Up(a, b)),
        (BarUp(a, Down(b, c)), BarUp(a, b)),
        (Down(a, Up(b, c)), Down(a, b)),
        (BarDown(a, Up(b, c)), BarDown(a, b)),
    ]


def materialize_R(generators):
    """ All 4*n^3 R equations, triples taken in product order with repeats.
    """
    relations = []
    for a, b, c in itertools.product(generators, repeat=3):
        relations.extend(r_relations(a, b, c))
    return relations


def format_presentation(p):
    lines = ['kind: %s' % p.kind, 'gens: %s' % ' '.join(p.generators)]
    lines.extend('%s = %s' % (format_term(lhs), format_term(rhs))
                 for lhs, rhs in p.relations)
    return '\n'.join(lines) + '\n'


def parse_presentation(text):
    """ Parses the presentation text format.

    ``kind:`` defaults to fundamental; ``gens:`` is required.
    """
    kind = FUNDAMENTAL
    generators = None
    relations = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if line.startswith('kind:'):
            kind = line[len('kind:'):].strip()
            if kind not in KINDS:
                raise PresentationSyntaxError(line_no, raw, 'unknown kind')
            continue
        if line.startswith('gens:'):
            generators = line[len('gens:'):].split()
            continue
        if line.count('=') != 1:
            raise PresentationSyntaxError(line_no, raw,
                                          'expected one "=" per relation')
        lhs, rhs = line.split('=')
        try:
            relations.append((parse_term(lhs), parse_term(rhs)))
        except TermSyntaxError as ex:
            raise PresentationSyntaxError(line_no, raw, str(ex))
    if generators is None:
        raise PresentationSyntaxError(0, '', 'missing "gens:" line')
    return Presentation(generators, relations, kind)


def load_presentation(path):
    with io.open(path, 'r', encoding='utf-8') as f:
        return parse_presentation(f.read())
