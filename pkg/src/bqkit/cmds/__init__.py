# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from .cli import cli, main
from .info import version, info, config
from .tables import check, enumerate_cmd
from .present import present, simplify, normalize_term
from .count import count, separate
from .verify import verify_paper
