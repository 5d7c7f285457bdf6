# -*- coding: utf-8 -*-
"""
Base exceptions.
"""
from __future__ import absolute_import, division, print_function, unicode_literals


class BiquandleError(Exception):
    """
    Raised when an error is toolkit-related but no specific error exists.
    """
    def __init__(self, *args, **kwargs):
        super(BiquandleError, self).__init__(*args)


__all__ = ['BiquandleError']
