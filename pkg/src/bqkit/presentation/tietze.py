# -*- coding: utf-8 -*-
"""
Tietze-style generator elimination.

Fundamental presentations only substitute definitions of the shape
g = t. Topological presentations are worked on as canonical triples, where
a side g^w1_w2 can also be solved for its base g.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

from ..core.defines import TOPOLOGICAL
from ..terms import (
    Generator, generators_of, substitute, normalize, generator,
    triple_to_term, substitute_triple, solve_base, canonical, word_concat,
    word_invert, format_term, format_triple,
)
from ..terms.word import mentions as word_mentions
from .presentation import Presentation

_logger = logging.getLogger(__name__)


def tietze_eliminate(p, keep=()):
    """ Eliminates generators until no relation defines one.

    :param keep: generator names that must survive.
    :return: a new Presentation of the same kind with the elimination log
        in its ``eliminated`` attribute.
    """
    keep = frozenset(keep)
    if p.kind == TOPOLOGICAL:
        return _eliminate_topological(p, keep)
    return _eliminate_fundamental(p, keep)


def _first_definition(relations, generators, keep):
    for i, (lhs, rhs) in enumerate(relations):
        for side, other in ((rhs, lhs), (lhs, rhs)):
            if not isinstance(side, Generator):
                continue
            g = side.name
            if g in keep or g not in generators:
                continue
            if g in generators_of(other):
                continue
            return i, g, other
    return None


def _eliminate_fundamental(p, keep):
    generators = list(p.generators)
    relations = [(lhs, rhs) for lhs, rhs in p.relations if lhs != rhs]
    eliminated = list(p.eliminated)

    while True:
        found = _first_definition(relations, generators, keep)
        if found is None:
            break
        i, g, t = found
        _logger.debug("Eliminating %s := %s", g, format_term(t))
        eliminated.append((g, t))
        generators.remove(g)
        del relations[i]
        relations = [(substitute(lhs, g, t), substitute(rhs, g, t))
                     for lhs, rhs in relations]
        relations = [(lhs, rhs) for lhs, rhs in relations if lhs != rhs]

    _logger.info("Reduced to %d generator(s), %d relation(s)",
                 len(generators), len(relations))
    return Presentation(generators, relations, p.kind, eliminated)


def _candidates(relations, generators, keep):
    for i, (lhs, rhs) in enumerate(relations):
        for side_no, (side, other) in enumerate(((rhs, lhs), (lhs, rhs))):
            g = side.base
            if g in keep or g not in generators:
                continue
            if word_mentions(side.up, g) or word_mentions(side.down, g):
                continue
            if other.mentions(g):
                continue
            definition = solve_base(side, other)
            rank = (len(definition.up), definition.size, i, side_no)
            yield rank, i, g, definition


def _relator_form(lhs, rhs):
    # b^w1_w2 = b^u1_u2 becomes b^(w1 u1^-1)_(w2 u2^-1) = b.
    if lhs.base != rhs.base:
        return lhs, rhs
    return (canonical(lhs.base, word_concat(lhs.up, word_invert(rhs.up)),
                      word_concat(lhs.down, word_invert(rhs.down))),
            generator(lhs.base))


def _eliminate_topological(p, keep):
    generators = list(p.generators)
    relations = [(normalize(lhs), normalize(rhs)) for lhs, rhs in p.relations]
    relations = [(lhs, rhs) for lhs, rhs in relations if lhs != rhs]
    eliminated = list(p.eliminated)

    while True:
        candidates = list(_candidates(relations, generators, keep))
        if not candidates:
            break
        rank, i, g, definition = min(candidates, key=lambda c: c[0])
        _logger.debug("Eliminating %s := %s", g, format_triple(definition))
        eliminated.append((g, triple_to_term(definition)))
        generators.remove(g)
        del relations[i]
        relations = [(substitute_triple(lhs, g, definition),
                      substitute_triple(rhs, g, definition))
                     for lhs, rhs in relations]
        relations = [(lhs, rhs) for lhs, rhs in relations if lhs != rhs]

    relations = [_relator_form(lhs, rhs) for lhs, rhs in relations]
    relations = [(lhs, rhs) for lhs, rhs in relations if lhs != rhs]

    _logger.info("Reduced to %d generator(s), %d relation(s)",
                 len(generators), len(relations))
    return Presentation(
        generators,
        [(triple_to_term(lhs), triple_to_term(rhs)) for lhs, rhs in relations],
        p.kind, eliminated)
