# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals
"""
Default settings which can be overridden by configuration files.
"""

DEBUG = False

# greenlets used for batch and split counting.
WORKERS = 4

# largest order enumerate_biquandles accepts.
MAX_ENUM_ORDER = 4

# the brute-force oracle refuses searches larger than this.
ORACLE_MAX_ASSIGNMENTS = 5 * 10 ** 6

RANDOM_SEED = 20151

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "simple": {
            "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        }
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "level": "DEBUG",
            "formatter": "simple",
            "stream": "ext://sys.stderr"
        }
    },
    "loggers": {
        "bqkit": {
            "level": "WARNING",
            "handlers": [
                "console"
            ],
            "propagate": False
        }
    }
}
