# -*- coding: utf-8 -*-
"""
Telling diagrams and terms apart with finite targets.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging
from collections import namedtuple

from ..algebra import enumerate_up_to
from ..core.defines import FUNDAMENTAL
from ..presentation import UndeclaredGenerator
from ..terms import generators_of, eval_term, normalize, format_term
from .coloring import count_colorings
from .homcount import iter_homs

_logger = logging.getLogger(__name__)


class Distinction(namedtuple('Distinction', 'target first second')):
    """ A target whose colouring counts differ on two diagrams. """
    __slots__ = ()

    def to_dict(self):
        return dict(target=self.target.ident, first=self.first,
                    second=self.second)


class Separated(namedtuple('Separated', 'target coloring values')):
    """ A colouring evaluating two terms to different elements. """
    __slots__ = ()
    verdict = 'separated'

    def to_dict(self):
        return dict(verdict=self.verdict, target=self.target.ident,
                    coloring=dict(self.coloring), values=list(self.values))


class ProvedEqual(namedtuple('ProvedEqual', 'reason')):
    __slots__ = ()
    verdict = 'proved-equal'

    def to_dict(self):
        return dict(verdict=self.verdict, reason=self.reason)


class Unknown(namedtuple('Unknown', 'searched')):
    """ No separating colouring among the searched targets, no proof. """
    __slots__ = ()
    verdict = 'unknown'

    def to_dict(self):
        return dict(verdict=self.verdict, searched=self.searched)


def distinguish(d1, d2, targets, mode=FUNDAMENTAL):
    """ The first target in the given order whose counts differ.

    :return: a Distinction, or None when every target agrees.
    """
    for bq in targets:
        first = count_colorings(d1, bq, mode).count
        second = count_colorings(d2, bq, mode).count
        if first != second:
            _logger.info("%s and %s separated by %s: %d vs %d",
                         d1.name, d2.name, bq.ident, first, second)
            return Distinction(bq, first, second)
    return None


def separate_terms(p, t1, t2, max_order=3, targets=None):
    """ Decides whether t1 and t2 differ in the biquandle presented by p.

    Equality is claimed only syntactically or, for topological
    presentations, through equal triple normal forms.

    :param targets: targets to search, by default every biquandle of order
        1..max_order in canonical order.
    :raise UndeclaredGenerator: when a term uses a generator p lacks.
    """
    declared = set(p.generators)
    for name in generators_of(t1) + generators_of(t2):
        if name not in declared:
            raise UndeclaredGenerator(name)

    if t1 == t2:
        return ProvedEqual('syntactic')
    if p.is_topological and normalize(t1) == normalize(t2):
        return ProvedEqual('normal form')

    if targets is None:
        targets = enumerate_up_to(max_order)
    for bq in targets:
        for env in iter_homs(p, bq):
            v1 = eval_term(t1, env, bq)
            v2 = eval_term(t2, env, bq)
            if v1 != v2:
                _logger.info("%s and %s separated by %s", format_term(t1),
                             format_term(t2), bq.ident)
                return Separated(bq, env, (v1, v2))
    return Unknown(len(targets))
