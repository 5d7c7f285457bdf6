# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import json

import pytest

from bqkit.algebra import families
from bqkit.core import Context, signals
from bqkit.invariants import (
    CountEngine, ManifestError, load_manifest, count_colorings,
)


@pytest.fixture
def ctx():
    return Context(sender='engine-test')


@pytest.fixture
def engine(ctx):
    engine = CountEngine(workers=2)
    engine.start(ctx)
    yield engine
    engine.stop(ctx)


def test_engine_binds_itself(ctx, engine):
    assert ctx.lookup('countengine') is engine


def test_engine_unbinds_on_stop(ctx):
    engine = CountEngine()
    engine.start(ctx)
    engine.stop(ctx)
    assert 'countengine' not in ctx


def test_run_batch(ctx, engine, fixtures):
    diagrams = [fixtures.diagram('trefoil'), fixtures.diagram('unknot')]
    r3 = families.dihedral(3)
    targets = [r3, families.trivial(2)]
    modes = ['fundamental', 'topological']

    finished = []

    def on_finished(result):
        finished.append(result)

    batches = []

    def on_batch(results):
        batches.append(results)

    ctx.connect(on_finished, signal=signals.COUNT_FINISHED)
    ctx.connect(on_batch, signal=signals.BATCH_FINISHED)
    try:
        results = engine.run_batch(diagrams, targets, modes)
    finally:
        ctx.disconnect(on_finished, signal=signals.COUNT_FINISHED)
        ctx.disconnect(on_batch, signal=signals.BATCH_FINISHED)

    assert len(results) == 8
    assert [(it.diagram, it.target, it.mode) for it in results[:4]] == [
        ('trefoil', 'dihedral-3', 'fundamental'),
        ('trefoil', 'dihedral-3', 'topological'),
        ('trefoil', 'trivial-2', 'fundamental'),
        ('trefoil', 'trivial-2', 'topological'),
    ]
    assert results[0].count == 9
    assert results[4].count == 3
    for result, (d, bq, mode) in zip(results, [
            (d, bq, mode) for d in diagrams for bq in targets
            for mode in modes]):
        assert result == count_colorings(d, bq, mode)
    assert finished == results
    assert batches == [results]


def test_started_signal(ctx, engine, fixtures):
    started = []

    def on_started(query_id, diagram, target, mode):
        started.append((query_id, diagram, target, mode))

    ctx.connect(on_started, signal=signals.COUNT_STARTED)
    try:
        engine.run_batch([fixtures.diagram('unknot')],
                         [families.trivial(1)], ['fundamental'])
    finally:
        ctx.disconnect(on_started, signal=signals.COUNT_STARTED)
    assert started == [(0, 'unknot', 'trivial-1', 'fundamental')]


def test_load_manifest(tmp_path, fixture_path):
    manifest = tmp_path / 'batch.json'
    manifest.write_text(json.dumps({
        'diagrams': [fixture_path('trefoil.pd')],
        'targets': [fixture_path('r3.json')],
        'modes': ['topological'],
    }))
    diagrams, targets, modes = load_manifest(str(manifest))
    assert [d.name for d in diagrams] == ['trefoil']
    assert targets == [families.dihedral(3)]
    assert modes == ['topological']


def test_manifest_paths_are_relative(tmp_path, fixture_path):
    (tmp_path / 'knot.pd').write_text('O u\n')
    (tmp_path / 'batch.json').write_text(json.dumps({
        'diagrams': ['knot.pd'],
        'targets': [fixture_path('trivial2.json')],
    }))
    diagrams, targets, modes = load_manifest(str(tmp_path / 'batch.json'))
    assert diagrams[0].semiarcs == ('u',)
    assert modes == ['fundamental']


@pytest.mark.parametrize('content', [
    'not json',
    '[1, 2]',
    '{"diagrams": [], "targets": ["r3.json"]}',
    '{"diagrams": ["a.pd"], "targets": ["r3.json"], "modes": ["virtual"]}',
])
def test_bad_manifest(tmp_path, content):
    manifest = tmp_path / 'batch.json'
    manifest.write_text(content)
    with pytest.raises(ManifestError):
        load_manifest(str(manifest))


def test_missing_manifest(tmp_path):
    with pytest.raises(ManifestError) as info:
        load_manifest(str(tmp_path / 'none.json'))
    assert 'none.json' in str(info.value)
