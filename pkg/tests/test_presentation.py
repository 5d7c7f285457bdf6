# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import itertools
import unittest

import pytest

from bqkit.algebra import (
    families, enumerate_biquandles, enumerate_up_to, satisfies_R,
)
from bqkit.algebra.biquandle import R_UP, R_BAR_UP, R_DOWN, R_BAR_DOWN
from bqkit.core.defines import FUNDAMENTAL, TOPOLOGICAL
from bqkit.diagram import parse_pd
from bqkit.invariants import hom_count_presentation
from bqkit.presentation import (
    Presentation, PresentationSyntaxError, UndeclaredGenerator,
    fundamental_presentation, topological_presentation, materialize_R,
    r_relations, format_presentation, parse_presentation, tietze_eliminate,
)
from bqkit.terms import (
    Generator, Up, Down, format_term, normalize, parse_triple, generator,
    eval_term, operation_tables,
)

a, b = Generator('a'), Generator('b')

L6N1_RELATIONS = [
    '(l ^ a) = i', '(a _ l) = b', '(f ^ k) = g', '(k _ f) = l',
    '(g ^ d) = h', '(d _ g) = a', '(c ^ j) = d', '(j _ c) = k',
    '(i ^ h) = j', '(h _ i) = e', '(b ^ e) = c', '(e _ b) = f',
]


def _lines(p):
    return ['%s = %s' % (format_term(lhs), format_term(rhs))
            for lhs, rhs in p.relations]


class TestPresentation(unittest.TestCase):

    def test_l6n1_relations(self):
        from bqkit.verify import Fixtures
        p = fundamental_presentation(Fixtures().diagram('l6n1'))
        self.assertEqual(12, len(p.generators))
        self.assertEqual(L6N1_RELATIONS, _lines(p))
        self.assertEqual(FUNDAMENTAL, p.kind)

    def test_unknot(self):
        p = topological_presentation(parse_pd('O u\n'))
        self.assertEqual(('u',), p.generators)
        self.assertEqual((), p.relations)
        self.assertTrue(p.is_topological)

    def test_undeclared_generator(self):
        with pytest.raises(UndeclaredGenerator) as info:
            Presentation(['a'], [(Up(a, b), a)])
        self.assertEqual('b', info.value.name)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            Presentation(['a'], [], kind='virtual')

    def test_with_kind(self):
        p = Presentation(['a', 'b'], [(Up(a, b), a)])
        q = p.with_kind(TOPOLOGICAL)
        self.assertEqual(p.relations, q.relations)
        self.assertNotEqual(p, q)


class TestTextFormat(unittest.TestCase):

    def test_format_then_parse(self):
        p = Presentation(['a', 'b'], [(Up(a, Down(b, a)), b)], TOPOLOGICAL)
        text = format_presentation(p)
        self.assertEqual('kind: topological\ngens: a b\n'
                         '(a ^ (b _ a)) = b\n', text)
        self.assertEqual(p, parse_presentation(text))

    def test_kind_defaults_to_fundamental(self):
        p = parse_presentation('# comment\ngens: a\n(a ^ a) = a\n')
        self.assertEqual(FUNDAMENTAL, p.kind)

    def test_syntax_errors(self):
        for text in ('(a ^ a) = a\n',
                     'gens: a\n(a ^ a) = a = a\n',
                     'kind: virtual\ngens: a\n',
                     'gens: a\n(a ^ ) = a\n'):
            with pytest.raises(PresentationSyntaxError):
                parse_presentation(text)

    def test_undeclared_in_text(self):
        with pytest.raises(UndeclaredGenerator):
            parse_presentation('gens: a\n(a ^ b) = a\n')


def test_r_relations():
    relations = r_relations('a', 'b', 'a')
    assert relations[0] == (Up(a, Down(b, a)), Up(a, b))
    assert len(materialize_R(['a', 'b'])) == 32
    assert materialize_R(['a'])[0] == (Up(a, Down(a, a)), Up(a, a))


def _violated(relations, env, bq, tables):
    return [(lhs, rhs) for lhs, rhs in relations
            if eval_term(lhs, env, bq, tables) != eval_term(rhs, env, bq, tables)]


def test_materialized_r_agrees_with_satisfies_r():
    names = ['a', 'b', 'c']
    relations = materialize_R(names)
    order = [R_UP, R_BAR_UP, R_DOWN, R_BAR_DOWN]
    for bq in enumerate_up_to(3):
        tables = operation_tables(bq)
        holds, violation = satisfies_R(bq)
        broken = any(
            _violated(relations, dict(zip(names, values)), bq, tables)
            for values in itertools.product(bq.elements(), repeat=3))
        assert broken == (not holds), bq
        if violation is not None:
            env = dict(zip(names, violation.triple))
            lhs, rhs = r_relations(*names)[order.index(violation.identity)]
            assert eval_term(lhs, env, bq) == violation.left
            assert eval_term(rhs, env, bq) == violation.right


class TestFundamentalElimination(unittest.TestCase):

    def test_kink_keeps_both_generators(self):
        p = fundamental_presentation(parse_pd('+ a b b a\n'))
        q = tietze_eliminate(p)
        self.assertEqual(('a', 'b'), q.generators)
        self.assertEqual(2, len(q.relations))

    def test_l6n1_reduces_to_three_generators(self):
        from bqkit.verify import Fixtures
        p = fundamental_presentation(Fixtures().diagram('l6n1'))
        q = tietze_eliminate(p)
        self.assertEqual(set('cfj'), set(q.generators))
        self.assertEqual(9, len(q.eliminated))
        for bq in [families.dihedral(3), families.shift(3),
                   families.trivial(2)]:
            self.assertEqual(hom_count_presentation(p, bq),
                             hom_count_presentation(q, bq))

    def test_keep(self):
        p = Presentation(['a', 'b'], [(Up(a, a), b)])
        self.assertEqual(('a',), tietze_eliminate(p).generators)
        self.assertEqual(('a', 'b'),
                         tietze_eliminate(p, keep=['b']).generators)


class TestTopologicalElimination(unittest.TestCase):

    def test_kink_reduces_to_one_generator(self):
        q = tietze_eliminate(topological_presentation(parse_pd('+ a b b a\n')))
        self.assertEqual(1, len(q.generators))
        self.assertEqual((), q.relations)

    def test_kink_elimination_log(self):
        q = tietze_eliminate(topological_presentation(
            parse_pd('+ a b b a\n')))
        self.assertEqual(('b',), q.generators)
        self.assertEqual([('a', Down(b, b))], list(q.eliminated))

    def test_l6n1_with_kept_generators(self):
        from bqkit.verify import Fixtures
        p = topological_presentation(Fixtures().diagram('l6n1'))
        q = tietze_eliminate(p, keep=('b', 'f', 'l'))
        self.assertEqual(set('bfl'), set(q.generators))
        self.assertTrue(q.is_topological)
        relators = set((normalize(lhs), normalize(rhs))
                       for lhs, rhs in q.relations)
        self.assertEqual(set([
            (parse_triple('b ^[f+,l+] _[f+,l+]'), generator('b')),
            (parse_triple('f ^[l+,b+] _[l+,b+]'), generator('f')),
            (parse_triple('l ^[b+,f+] _[b+,f+]'), generator('l')),
        ]), relators)

    def test_l6n1_default_order(self):
        from bqkit.verify import Fixtures
        p = topological_presentation(Fixtures().diagram('l6n1'))
        q = tietze_eliminate(p)
        self.assertEqual(set('cfi'), set(q.generators))

    def test_fundamental_counts_preserved(self):
        from bqkit.verify import Fixtures
        fx = Fixtures()
        for name in ('trefoil', 'trefoil_r2', 'kink_c'):
            p = fundamental_presentation(fx.diagram(name))
            q = tietze_eliminate(p)
            for bq in list(enumerate_biquandles(2)) + [families.shift(3)]:
                self.assertEqual(hom_count_presentation(p, bq),
                                 hom_count_presentation(q, bq))


@pytest.mark.slow
@pytest.mark.parametrize('build', [fundamental_presentation,
                                   topological_presentation])
def test_elimination_preserves_counts_on_fixtures(build):
    from bqkit.verify import Fixtures
    targets = enumerate_up_to(3)
    for d in Fixtures().diagrams():
        p = build(d)
        q = tietze_eliminate(p)
        for bq in targets:
            assert (hom_count_presentation(p, bq)
                    == hom_count_presentation(q, bq)), (d, bq)
