# -*- coding: utf-8 -*-

import os
import unittest

from bqkit.core import Context
from bqkit.core.defines import BQKIT_POD_FOLDER, BQKIT_WORKERS
from bqkit.runtime import settings
from bqkit.runtime import environ
from bqkit.runtime.config import worker_cap, load_conf


class TestRuntimeConfig(unittest.TestCase):

    def test_should_have_dir_settings(self):
        self.assertIsNotNone(settings.get('conf_dir'))
        self.assertIsNotNone(settings.get('data_dir'))
        self.assertIsNotNone(settings.get('logs_dir'))
        self.assertTrue(os.path.isdir(settings['fixtures_dir']))

    def test_should_have_default_settings(self):
        self.assertIn('MAX_ENUM_ORDER', settings)
        self.assertGreaterEqual(settings['WORKERS'], 1)
        self.assertIn('bqkit', settings['LOGGING']['loggers'])

    def test_missing_conf_is_empty(self):
        self.assertEqual({}, load_conf('/no/such/bqkit.json'))


class TestWorkerCap(unittest.TestCase):

    def test_no_cap(self):
        self.assertEqual(4, worker_cap(4, env={}))

    def test_cap_applies(self):
        self.assertEqual(2, worker_cap(4, env={BQKIT_WORKERS: '2'}))
        self.assertEqual(4, worker_cap(4, env={BQKIT_WORKERS: '8'}))

    def test_at_least_one(self):
        self.assertEqual(1, worker_cap(4, env={BQKIT_WORKERS: '0'}))
        self.assertEqual(1, worker_cap(0, env={}))

    def test_bad_cap_is_ignored(self):
        self.assertEqual(3, worker_cap(3, env={BQKIT_WORKERS: 'many'}))


def test_pod_folder_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv(BQKIT_POD_FOLDER, str(tmp_path))
    env = environ.Environment()
    assert env.pod_dir == os.path.abspath(str(tmp_path))
    assert env.conf_dir == os.path.join(env.pod_dir, 'conf')
    assert env.logs_dir == os.path.join(env.pod_dir, 'logs')
    assert os.path.isfile(os.path.join(env.fixtures_dir, 'trefoil.pd'))


def test_context_signals():
    ctx = Context(sender='test-context')
    received = []

    def receiver(signal, sender, value):
        received.append((signal, value))

    ctx.connect(receiver, signal='ping')
    ctx.send('ping', value=1)
    ctx.disconnect(receiver, signal='ping')
    ctx.send('ping', value=2)
    ctx.disconnect(receiver, signal='ping')
    assert received == [('ping', 1)]


def test_context_bindings():
    ctx = Context()
    ctx['engine'] = 42
    assert 'engine' in ctx
    assert ctx.lookup('engine') == 42
    ctx.unbind('engine')
    assert ctx.lookup('engine', 'none') == 'none'
