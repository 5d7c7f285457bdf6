# -*- coding: utf-8 -*-

"""
Configuration file reading.
"""
from __future__ import absolute_import, division, print_function, \
    unicode_literals

import os
import io
import json
import logging
import logging.config

from string import Template

from .. import settings as default_settings
from ..core.defines import BQKIT_WORKERS
from ..runtime import environ

_logger = logging.getLogger(__name__)

TOOLKIT_CONF = os.path.join(environ.conf_dir(), 'bqkit.json')

settings = dict(pod_dir=environ.pod_dir().replace("\\", "/"),
                conf_dir=environ.conf_dir().replace("\\", "/"),
                data_dir=environ.data_dir().replace("\\", "/"),
                logs_dir=environ.logs_dir().replace("\\", "/"),
                fixtures_dir=environ.fixtures_dir().replace("\\", "/"),
                )

for attr_name in dir(default_settings):
    if attr_name.isupper():
        settings[attr_name] = getattr(default_settings, attr_name)


def load_conf(conf_file):
    if not os.path.exists(conf_file):
        return {}

    with io.open(conf_file, 'r', encoding='utf-8') as f:
        data = f.read()
    if len(data.strip()) == 0:
        return {}

    template = Template(data)
    data = template.substitute(**settings)
    return json.loads(data)


def worker_cap(value, env=None):
    """ Applies the worker cap from the environment, if any.

    :param value: the configured worker count.
    :param env: mapping to read the variable from, defaults to os.environ.
    :return: the effective worker count, at least 1.
    """
    env = os.environ if env is None else env
    cap = env.get(BQKIT_WORKERS)
    if cap:
        try:
            value = min(value, int(cap))
        except ValueError:
            _logger.warning("Ignoring non-integer %s=%r", BQKIT_WORKERS, cap)
    return max(1, value)


def _ensure_log_dirs(logging_conf):
    for handler in logging_conf.get('handlers', {}).values():
        filename = handler.get('filename')
        if filename:
            folder = os.path.dirname(filename)
            if folder and not os.path.isdir(folder):
                os.makedirs(folder)


settings.update(load_conf(TOOLKIT_CONF))
settings['WORKERS'] = worker_cap(settings['WORKERS'])

if settings['DEBUG']:
    print("Configuration file:", TOOLKIT_CONF)

# configure logging
_ensure_log_dirs(settings['LOGGING'])
logging.config.dictConfig(settings['LOGGING'])
