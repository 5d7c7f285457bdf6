# -*- coding: utf-8 -*-
from __future__ import absolute_import, print_function, unicode_literals

from ..core import BiquandleError


class ManifestError(BiquandleError):
    """ Raised for a batch manifest that cannot be used.
    """
    def __init__(self, path, reason):
        super(ManifestError, self).__init__(path, reason)
        self.path = path
        self.reason = reason

    def __str__(self):
        return "Bad manifest %s: %s" % (self.path, self.reason)


class OracleTooLarge(BiquandleError):
    """ Raised when a brute-force search exceeds the configured size.
    """
    def __init__(self, assignments, limit):
        super(OracleTooLarge, self).__init__(assignments, limit)
        self.assignments = assignments
        self.limit = limit

    def __str__(self):
        return "Brute force needs %d assignments, limit is %d." % (
            self.assignments, self.limit)


__all__ = ['ManifestError', 'OracleTooLarge']
