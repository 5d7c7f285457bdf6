# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import random
import itertools
import unittest

import pytest

from bqkit.algebra import enumerate_up_to, families, satisfies_R
from bqkit.terms import (
    TripleSyntaxError, canonical, generator, normalize, parse_term,
    parse_triple, format_triple, eval_term, eval_triple, triple_to_term,
    substitute_triple, solve_base, word, top_up, top_bar_up, top_down,
    top_bar_down,
)
from bqkit.verify import freemodel
from bqkit.verify.criteria import normal_form_mismatch


@pytest.mark.parametrize('text, expected', [
    ('(a ^ (b _ c))', 'a ^[b+] _[]'),
    ('((a ^ b) _ c)', 'a ^[b+] _[c+]'),
    ('(a ^ (b ^ c))', 'a ^[c-,b+,c+] _[]'),
    ('((a _ b) ^ c)', 'a ^[c+] _[b+]'),
    ('(a ^ a)', 'a ^[] _[a-]'),
    ('((a ^- b) ^ b)', 'a ^[] _[]'),
    ('(a _ (b _- c))', 'a ^[] _[c+,b+,c-]'),
])
def test_normal_forms(text, expected):
    assert format_triple(normalize(parse_term(text))) == expected


class TestCanonicalForm(unittest.TestCase):

    def test_leading_base_run_moves_to_down_word(self):
        x = canonical('a', word(('a', 1), ('a', 1), ('b', 1)),
                      word(('c', 1)))
        self.assertEqual('a ^[b+] _[a-,a-,c+]', format_triple(x))

    def test_other_letters_stay(self):
        x = canonical('a', word(('b', 1), ('a', 1)), ())
        self.assertEqual(word(('b', 1), ('a', 1)), x.up)

    def test_parse_triple(self):
        x = parse_triple('b ^[f+,l+] _[f+, l+]')
        self.assertEqual('b ^[f+,l+] _[f+,l+]', format_triple(x))
        self.assertEqual(x, parse_triple(format_triple(x)))

    def test_parse_triple_canonicalizes(self):
        self.assertEqual(parse_triple('a ^[] _[a-]'),
                         parse_triple('a ^[a+] _[]'))

    def test_bad_triples(self):
        for text in ('a ^[b+]', 'a ^[b] _[]', 'A ^[] _[]', 'a ^[b+-] _[]',
                     'a ^[] _[c,d+]'):
            with pytest.raises(TripleSyntaxError):
                parse_triple(text)


class TestRewriting(unittest.TestCase):

    def test_substitute_in_words(self):
        x = parse_triple('b ^[a+] _[]')
        d = parse_triple('c ^[d+] _[]')
        self.assertEqual('b ^[d-,c+,d+] _[]',
                         format_triple(substitute_triple(x, 'a', d)))

    def test_substitute_base(self):
        x = parse_triple('a ^[b+] _[c+]')
        d = parse_triple('c ^[d+] _[e+]')
        self.assertEqual('c ^[d+,b+] _[e+,c+]',
                         format_triple(substitute_triple(x, 'a', d)))

    def test_solve_base(self):
        side = parse_triple('g ^[b+] _[c+]')
        other = generator('h')
        self.assertEqual('h ^[b-] _[c-]',
                         format_triple(solve_base(side, other)))

    def test_triple_to_term(self):
        x = parse_triple('b ^[f+,l-] _[f-]')
        self.assertEqual('(((b ^ f) ^- l) _- f)',
                         str(triple_to_term(x)))
        self.assertEqual(x, normalize(triple_to_term(x)))


class TestFreeModel(unittest.TestCase):

    def test_random_instances_satisfy_axioms(self):
        rng = random.Random(7)
        for _ in range(200):
            gens = ['a', 'b', 'c', 'd'][:rng.randint(1, 4)]
            x, y, z = (freemodel.random_triple(rng, gens, 4)
                       for _ in range(3))
            self.assertEqual([], freemodel.axiom_failures(x, y, z))

    def test_operations_cancel(self):
        x = parse_triple('a ^[b+] _[c-]')
        y = parse_triple('b ^[c+,a-] _[a+]')
        self.assertEqual(x, top_bar_up(top_up(x, y), y))
        self.assertEqual(x, top_up(top_bar_up(x, y), y))
        self.assertEqual(x, top_bar_down(top_down(x, y), y))
        self.assertEqual(x, top_down(top_bar_down(x, y), y))

    def test_small_identities(self):
        small = freemodel.triples_up_to(['a', 'b'], 2)
        for p, q in itertools.product(small, repeat=2):
            self.assertEqual([], freemodel.pair_identity_failures(p, q))
        cache = freemodel.operation_cache(small)
        for p in (generator('a'), parse_triple('a ^[b+] _[b-]')):
            for q, r in itertools.product(small, repeat=2):
                self.assertEqual(
                    [], freemodel.triple_identity_failures(p, q, r, cache))
        x, y = small[1], small[-1]
        self.assertEqual(top_up(x, y), cache[('^', x, y)])
        self.assertEqual(top_bar_down(x, y), cache[('_-', x, y)])

    def test_listing_has_no_duplicates(self):
        words = freemodel.words_up_to(['a'], 2)
        self.assertEqual(5, len(words))
        triples = freemodel.triples_up_to(['a'], 1)
        self.assertEqual(len(set(triples)), len(triples))


def test_eval_triple_folds_words():
    r3 = families.dihedral(3)
    x = parse_triple('a ^[b+] _[c+]')
    env = dict(a=0, b=1, c=2)
    assert eval_triple(x, env, r3) == r3.down[r3.up[0][1]][2]


def test_normal_form_soundness_sample():
    rng = random.Random(11)
    targets = [bq for bq in enumerate_up_to(3) if satisfies_R(bq)[0]]
    assert len(targets) == 29
    for _ in range(60):
        t = freemodel.random_term(rng, ['a', 'b'], 4)
        for bq in targets:
            assert normal_form_mismatch(t, bq) is None, (str(t), bq)
