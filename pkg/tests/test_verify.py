# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import unittest

import pytest

from bqkit.core import Context, signals
from bqkit.verify import (
    UnknownCriterion, all_criteria, get_criterion, run_criteria, Fixtures,
    bundled_dir,
)
from bqkit.verify.criteria import expect, CriterionFailed


class TestRegistry(unittest.TestCase):

    def test_keys_in_order(self):
        self.assertEqual(
            ['axiom-suite', 'bar-identities', 'hom-bars', 'free-model',
             'normal-form', 'l6n1', 'counts', 'quotient', 'oracle'],
            [it.key for it in all_criteria()])

    def test_unknown_key(self):
        with pytest.raises(UnknownCriterion):
            get_criterion('no-such-check')

    def test_expect(self):
        expect(True, "never raised")
        with pytest.raises(CriterionFailed) as info:
            expect(False, "%s counts %d", 'trefoil', 4)
        self.assertEqual('trefoil counts 4', info.value.message)


def test_fixture_names():
    fx = Fixtures()
    assert fx.folder == bundled_dir()
    names = fx.diagram_names()
    assert 'trefoil' in names
    assert 'l6n1' in names
    assert names == sorted(names)
    assert fx.diagram('trefoil') is fx.diagram('trefoil')


def test_axiom_suite_passes():
    outcomes = run_criteria(keys=['axiom-suite'])
    assert len(outcomes) == 1
    assert outcomes[0].passed, outcomes[0].detail
    assert outcomes[0].key == 'axiom-suite'


def test_missing_fixtures_fail(tmp_path):
    ctx = Context(sender='verify-test')
    failed = []

    def on_failed(outcome):
        failed.append(outcome.key)

    ctx.connect(on_failed, signal=signals.CRITERION_FAILED)
    try:
        outcomes = run_criteria(fixtures_dir=str(tmp_path),
                                keys=['axiom-suite'], ctx=ctx)
    finally:
        ctx.disconnect(on_failed, signal=signals.CRITERION_FAILED)
    assert not outcomes[0].passed
    assert outcomes[0].detail
    assert failed == ['axiom-suite']


def test_unknown_key_in_run():
    with pytest.raises(UnknownCriterion):
        run_criteria(keys=['no-such-check'])


@pytest.mark.slow
@pytest.mark.parametrize('key', [it.key for it in all_criteria()])
def test_criterion_passes(key):
    outcome, = run_criteria(keys=[key])
    assert outcome.key == key
    assert outcome.passed, outcome.detail
