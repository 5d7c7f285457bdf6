# -*- coding: utf-8 -*-
from __future__ import absolute_import, print_function, unicode_literals

from ..core import BiquandleError


class CriterionFailed(BiquandleError):
    """ Raised by a criterion whose check does not hold.
    """
    def __init__(self, message):
        super(CriterionFailed, self).__init__(message)
        self.message = message

    def __str__(self):
        return self.message


class UnknownCriterion(BiquandleError):
    def __init__(self, key):
        super(UnknownCriterion, self).__init__(key)
        self.key = key

    def __str__(self):
        return "No criterion named %r." % self.key


__all__ = ['CriterionFailed', 'UnknownCriterion']
