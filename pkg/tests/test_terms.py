# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import unittest

import pytest

from bqkit.algebra import families
from bqkit.terms import (
    Generator, Up, Down, BarUp, BarDown, Letter, TermSyntaxError,
    UnboundGenerator, parse_term, format_term, eval_term, substitute,
    generators_of, term_size, reduce_word, word, word_concat, word_invert,
    word_conjugate, format_word, parse_word,
)

a, b, c = Generator('a'), Generator('b'), Generator('c')


class TestWords(unittest.TestCase):

    def test_reduce(self):
        w = reduce_word([Letter('a', 1), Letter('a', -1), Letter('b', 1)])
        self.assertEqual((Letter('b', 1),), w)

    def test_nested_cancellation(self):
        w = word(('a', 1), ('b', 1), ('b', -1), ('a', -1), ('c', -1))
        self.assertEqual((Letter('c', -1),), w)

    def test_invert_and_concat(self):
        w = word(('a', 1), ('b', -1))
        self.assertEqual(word(('b', 1), ('a', -1)), word_invert(w))
        self.assertEqual((), word_concat(w, word_invert(w)))

    def test_conjugate(self):
        w = word_conjugate(Letter('a', 1), word(('b', 1)))
        self.assertEqual('b-,a+,b+', format_word(w))
        self.assertEqual((Letter('a', -1),),
                         word_conjugate(Letter('a', -1), ()))

    def test_parse_word(self):
        self.assertEqual(word(('a', 1), ('b1', -1)), parse_word('a+, b1-'))
        self.assertEqual((), parse_word('  '))
        with pytest.raises(ValueError):
            parse_word('a')

    def test_parse_word_checks_names(self):
        for text in ('b+-', 'B+', 'a+, +', 'a b+'):
            with pytest.raises(ValueError):
                parse_word(text)


class TestParser(unittest.TestCase):

    def test_parse_nested(self):
        t = parse_term('(a ^ (b _- c))')
        self.assertEqual(Up(a, BarDown(b, c)), t)
        self.assertEqual('(a ^ (b _- c))', format_term(t))

    def test_whitespace_is_optional(self):
        self.assertEqual(BarUp(a, Down(b, c)), parse_term('(a^-(b_c))'))

    def test_operation_types_differ(self):
        self.assertNotEqual(Up(a, b), Down(a, b))
        self.assertNotEqual(hash(Up(a, b)), hash(BarUp(a, b)))

    def test_digit_names(self):
        self.assertEqual(Up(Generator('12'), Generator('x1')),
                         parse_term('(12 ^ x1)'))


@pytest.mark.parametrize('text, position', [
    ('', 0),
    ('(a ^ b', 6),
    ('(a * b)', 3),
    ('a b', 2),
    ('A', 0),
    ('(a ^ )', 5),
])
def test_syntax_error_positions(text, position):
    with pytest.raises(TermSyntaxError) as info:
        parse_term(text)
    assert info.value.position == position
    assert ('position %d' % position) in str(info.value)


def test_generators_and_size():
    t = parse_term('((b ^ a) _ (b ^- c))')
    assert generators_of(t) == ['b', 'a', 'c']
    assert term_size(t) == 4


def test_eval_in_dihedral():
    r3 = families.dihedral(3)
    env = dict(a=0, b=1)
    assert eval_term(parse_term('(a ^ b)'), env, r3) == 2
    assert eval_term(parse_term('(a _ b)'), env, r3) == 0
    assert eval_term(parse_term('((a ^ b) ^- b)'), env, r3) == 0


def test_eval_unbound():
    with pytest.raises(UnboundGenerator) as info:
        eval_term(parse_term('(a ^ c)'), dict(a=0), families.trivial(2))
    assert info.value.name == 'c'


def test_substitute():
    t = parse_term('((a ^ b) _ a)')
    s = substitute(t, 'a', parse_term('(c _- b)'))
    assert format_term(s) == '(((c _- b) ^ b) _ (c _- b))'
    assert substitute(t, 'z', c) is t
