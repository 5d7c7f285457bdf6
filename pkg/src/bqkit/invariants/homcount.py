# -*- coding: utf-8 -*-
"""
Homomorphisms out of a presented biquandle, counted by backtracking over
generator assignments.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

from six.moves import range

from ..terms import Generator, generators_of, eval_term, operation_tables
from .coloring import RChecker

_logger = logging.getLogger(__name__)


class _Step(object):
    __slots__ = ('name', 'rule', 'checks')

    def __init__(self, name, rule=None):
        self.name = name
        # a term over earlier generators computing this one, or None.
        self.rule = rule
        self.checks = []


def _plan(p):
    """ Orders the generators so that as many as possible are computed from
    earlier ones through a relation g = t.
    """
    relations = list(p.relations)
    relgens = [set(generators_of(lhs)) | set(generators_of(rhs))
               for lhs, rhs in relations]
    remaining = list(p.generators)
    placed = set()
    steps = []

    def place(name, rule=None):
        remaining.remove(name)
        placed.add(name)
        steps.append(_Step(name, rule))

    while remaining:
        progress = True
        while progress:
            progress = False
            for lhs, rhs in relations:
                for side, other in ((lhs, rhs), (rhs, lhs)):
                    if not isinstance(side, Generator):
                        continue
                    if side.name not in remaining:
                        continue
                    if set(generators_of(other)) <= placed:
                        place(side.name, other)
                        progress = True
        if remaining:
            place(remaining[0])

    position = dict((step.name, i) for i, step in enumerate(steps))
    for rel, names in zip(relations, relgens):
        steps[max(position[n] for n in names)].checks.append(rel)
    return steps


def iter_homs(p, bq):
    """ Generates every generator assignment satisfying the relations of p,
    plus the R identities on its colours when p is topological.

    :return: an iterator of dicts from generator name to element.
    """
    steps = _plan(p)
    tables = operation_tables(bq)
    checker = RChecker(bq) if p.is_topological else None
    env = {}

    def extend(i):
        if i == len(steps):
            if checker is None or checker.holds(env.values()):
                yield dict(env)
            return
        step = steps[i]
        if step.rule is not None:
            values = (eval_term(step.rule, env, bq, tables),)
        else:
            values = range(bq.order)
        for v in values:
            env[step.name] = v
            if all(eval_term(lhs, env, bq, tables) ==
                   eval_term(rhs, env, bq, tables)
                   for lhs, rhs in step.checks):
                for it in extend(i + 1):
                    yield it
        env.pop(step.name, None)

    return extend(0)


def hom_count_presentation(p, bq):
    count = sum(1 for _ in iter_homs(p, bq))
    _logger.debug("%r into %s: %d", p, bq.ident, count)
    return count
