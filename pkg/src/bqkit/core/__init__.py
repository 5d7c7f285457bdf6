# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, unicode_literals

from .context import Context, get_core_context
from .errors import BiquandleError
