# -*- coding: utf-8 -*-
"""
Sampling and exhaustive listing of elements of the free topological model,
and the identity checks run on them.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import itertools

from six.moves import range

from ..algebra.biquandle import (
    AXIOM_1, AXIOM_2, UP_INTERCHANGES, RULE_OF_FIVE, DOWN_INTERCHANGES,
)
from ..terms import (
    Generator, Letter, OPERATIONS, EMPTY, canonical, reduce_word,
    top_up, top_down, top_bar_up, top_bar_down,
)

up, down, bar_up, bar_down = top_up, top_down, top_bar_up, top_bar_down


def _letters(gens):
    return [Letter(g, e) for g in gens for e in (1, -1)]


def random_word(rng, gens, max_len):
    letters = _letters(gens)
    return reduce_word(rng.choice(letters)
                       for _ in range(rng.randint(0, max_len)))


def random_triple(rng, gens, max_len):
    return canonical(rng.choice(gens), random_word(rng, gens, max_len),
                     random_word(rng, gens, max_len))


def words_up_to(gens, max_len):
    """ Every reduced word of length at most max_len. """
    found = set([EMPTY])
    letters = _letters(gens)
    for n in range(1, max_len + 1):
        for letters_n in itertools.product(letters, repeat=n):
            w = reduce_word(letters_n)
            if len(w) == n:
                found.add(w)
    return sorted(found)


def triples_up_to(gens, max_len):
    """ Every canonical triple whose two words have total length at most
    max_len before canonicalisation.
    """
    words = words_up_to(gens, max_len)
    found = set()
    for base in gens:
        for w1 in words:
            for w2 in words:
                if len(w1) + len(w2) <= max_len:
                    found.add(canonical(base, w1, w2))
    return sorted(found)


def random_term(rng, gens, depth):
    """ A random term of depth at most depth. """
    if depth == 0 or rng.random() < 0.25:
        return Generator(rng.choice(gens))
    op = OPERATIONS[rng.choice(sorted(OPERATIONS))]
    return op(random_term(rng, gens, depth - 1),
              random_term(rng, gens, depth - 1))


def axiom_failures(x, y, z):
    """ Names the axioms failing at the triples x, y, z. """
    failed = []
    # S(x, y) = (y_x, x^y), inverted by the bar operations.
    a, b = down(y, x), up(x, y)
    if (bar_up(b, a), bar_down(a, b)) != (x, y):
        failed.append(AXIOM_1)
    p, q = bar_up(y, x), bar_down(x, y)
    if (down(q, p), up(p, q)) != (x, y):
        failed.append(AXIOM_1)
    if bar_up(up(x, y), y) != x or bar_down(down(x, y), y) != x:
        failed.append(AXIOM_1)

    x0 = bar_up(x, x)
    y0 = bar_down(x, x)
    if up(x0, x) != x or down(x, x0) != x0:
        failed.append(AXIOM_2)
    if down(y0, x) != x or up(x, y0) != y0:
        failed.append(AXIOM_2)

    if up(up(x, y), z) != up(up(x, down(z, y)), up(y, z)):
        failed.append(UP_INTERCHANGES)
    if (up(down(x, y), down(z, up(y, x))) !=
            down(up(x, z), up(y, down(z, x)))):
        failed.append(RULE_OF_FIVE)
    if down(down(x, y), z) != down(down(x, up(z, y)), down(y, z)):
        failed.append(DOWN_INTERCHANGES)
    return sorted(set(failed))


def pair_identity_failures(a, b):
    """ Same-operand cancellation. """
    checks = (
        ('a^b^-b = a', bar_up(up(a, b), b)),
        ('a^-b^b = a', up(bar_up(a, b), b)),
        ('a_b_-b = a', bar_down(down(a, b), b)),
        ('a_-b_b = a', down(bar_down(a, b), b)),
    )
    return [name for name, v in checks if v != a]


_OPERATIONS = (('^', up), ('^-', bar_up), ('_', down), ('_-', bar_down))


def operation_cache(elements):
    """ Every operation on every ordered pair of elements, keyed by
    (symbol, x, y).
    """
    return dict(((name, x, y), op(x, y)) for name, op in _OPERATIONS
                for x in elements for y in elements)


def _operations(cache):
    if cache is None:
        return dict(_OPERATIONS)

    def cached(name, op):
        def apply(x, y):
            found = cache.get((name, x, y))
            return op(x, y) if found is None else found
        return apply
    return dict((name, cached(name, op)) for name, op in _OPERATIONS)


def triple_identity_failures(a, b, c, cache=None):
    """ Up/down commutation, operand independence and the conjugation
    identities.

    :param cache: an operation_cache looked up before computing.
    """
    ops = _operations(cache)
    ups = [(name, ops[name]) for name in ('^', '^-')]
    downs = [(name, ops[name]) for name in ('_', '_-')]
    failed = []
    for u_name, u in ups:
        for d_name, d in downs:
            if d(u(a, b), c) != u(d(a, c), b):
                failed.append('a%sb%sc = a%sc%sb' % (u_name, d_name,
                                                     d_name, u_name))
    for u_name, u in ups:
        for d_name, d in downs:
            if u(a, d(b, c)) != u(a, b):
                failed.append('a%s(b%sc) = a%sb' % (u_name, d_name, u_name))
            if d(a, u(b, c)) != d(a, b):
                failed.append('a%s(b%sc) = a%sb' % (d_name, u_name, d_name))
    up_, bar_up_ = ops['^'], ops['^-']
    down_, bar_down_ = ops['_'], ops['_-']
    if up_(a, up_(b, c)) != up_(up_(bar_up_(a, c), b), c):
        failed.append('a^(b^c) = a^-c^b^c')
    if down_(a, down_(b, c)) != down_(down_(bar_down_(a, c), b), c):
        failed.append('a_(b_c) = a_-c_b_c')
    return failed


def triple_identity_sweep(gens, max_len):
    """ Runs triple_identity_failures over every ordered triple of listed
    elements whose first base is gens[0].

    Renaming generators is an automorphism of the free model, so the first
    base can be fixed.

    :return: list of (failures, (a, b, c)), empty when all hold.
    """
    listed = triples_up_to(gens, max_len)
    cache = operation_cache(listed)
    found = []
    for a in listed:
        if a.base != gens[0]:
            continue
        for b in listed:
            for c in listed:
                failed = triple_identity_failures(a, b, c, cache)
                if failed:
                    found.append((failed, (a, b, c)))
    return found
