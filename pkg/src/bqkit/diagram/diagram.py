# -*- coding: utf-8 -*-
"""
Link diagrams as semiarcs and signed crossings.

Each crossing record is ``sign underIn overIn underOut overOut``. At a
positive crossing the under-strand leaves as underIn^overIn and the
over-strand as overIn_underIn; a negative crossing uses the bar
operations. A crossingless component is a single semiarc, ``O name``.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import io
import os
import logging
from collections import namedtuple

from ..terms import Generator, Up, Down, BarUp, BarDown
from ..terms.term import NAME_PATTERN
from .errors import DiagramSyntaxError, DuplicateRole, DanglingSemiarc

_logger = logging.getLogger(__name__)

POSITIVE = 1
NEGATIVE = -1

_SIGNS = {'+': POSITIVE, '-': NEGATIVE}


class Crossing(namedtuple('Crossing',
                          'sign under_in over_in under_out over_out')):
    __slots__ = ()

    @property
    def names(self):
        return self.under_in, self.over_in, self.under_out, self.over_out

    def __str__(self):
        return '%s %s' % ('+' if self.sign > 0 else '-', ' '.join(self.names))


class Diagram(object):
    """
    A validated link diagram.
    """
    def __init__(self, crossings=(), loops=(), name=None):
        self.crossings = tuple(crossings)
        self.loops = tuple(loops)
        self.name = name
        self.semiarcs = _validate(self.crossings, self.loops)

    def __eq__(self, other):
        return (isinstance(other, Diagram) and
                self.crossings == other.crossings and
                self.loops == other.loops)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return '<Diagram %s: %d semiarc(s), %d crossing(s)>' % (
            self.name, len(self.semiarcs), len(self.crossings))


def _validate(crossings, loops):
    semiarcs = []
    ins = set()
    outs = set()
    for c in crossings:
        for role, names in (('in', (c.under_in, c.over_in)),
                            ('out', (c.under_out, c.over_out))):
            seen = ins if role == 'in' else outs
            for it in names:
                if it in seen:
                    raise DuplicateRole(it, role)
                seen.add(it)
        for it in c.names:
            if it not in semiarcs:
                semiarcs.append(it)

    for it in semiarcs:
        if it not in ins:
            raise DanglingSemiarc(it, 'in')
        if it not in outs:
            raise DanglingSemiarc(it, 'out')

    for it in loops:
        if it in semiarcs:
            raise DuplicateRole(it, 'component')
        semiarcs.append(it)
    return tuple(semiarcs)


def parse_pd(text, name=None):
    """ Parses the line-based diagram format.

    :raise DiagramSyntaxError: on a malformed line.
    :raise DuplicateRole, DanglingSemiarc: when incidences do not close up.
    """
    crossings = []
    loops = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        for it in fields[1:]:
            if NAME_PATTERN.fullmatch(it) is None:
                raise DiagramSyntaxError(line_no, raw,
                                         'bad semiarc name %r' % it)
        if fields[0] in _SIGNS and len(fields) == 5:
            crossings.append(Crossing(_SIGNS[fields[0]], *fields[1:]))
        elif fields[0] == 'O' and len(fields) == 2:
            loops.append(fields[1])
        else:
            raise DiagramSyntaxError(line_no, raw)
    d = Diagram(crossings, loops, name=name)
    _logger.debug("Parsed %r", d)
    return d


def load_diagram(path):
    with io.open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    return parse_pd(text, name=os.path.splitext(os.path.basename(path))[0])


def format_pd(d):
    lines = [str(c) for c in d.crossings]
    lines.extend('O %s' % it for it in d.loops)
    return '\n'.join(lines) + '\n'


def crossing_relations(d):
    """ Two equations per crossing, as (term, generator) pairs.
    """
    relations = []
    for c in d.crossings:
        under, over = Generator(c.under_in), Generator(c.over_in)
        if c.sign > 0:
            relations.append((Up(under, over), Generator(c.under_out)))
            relations.append((Down(over, under), Generator(c.over_out)))
        else:
            relations.append((BarUp(under, over), Generator(c.under_out)))
            relations.append((BarDown(over, under), Generator(c.over_out)))
    return relations


def components(d):
    """ Partitions the semiarcs into link components, each listed in strand
    order from its first semiarc.
    """
    successor = {}
    for c in d.crossings:
        successor[c.under_in] = c.under_out
        successor[c.over_in] = c.over_out

    result = []
    placed = set()
    for it in d.semiarcs:
        if it in placed:
            continue
        strand = [it]
        placed.add(it)
        nxt = successor.get(it)
        while nxt is not None and nxt not in placed:
            strand.append(nxt)
            placed.add(nxt)
            nxt = successor.get(nxt)
        result.append(tuple(strand))
    return result
