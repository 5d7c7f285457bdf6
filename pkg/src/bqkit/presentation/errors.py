# -*- coding: utf-8 -*-
from __future__ import absolute_import, print_function, unicode_literals

from ..core import BiquandleError


class PresentationSyntaxError(BiquandleError):
    def __init__(self, line_no, line, reason):
        super(PresentationSyntaxError, self).__init__(line_no, line, reason)
        self.line_no = line_no
        self.line = line
        self.reason = reason

    def __str__(self):
        return "Line %d: %s: %r" % (self.line_no, self.reason, self.line)


class UndeclaredGenerator(BiquandleError):
    """ Raised when a relation mentions a generator the presentation does
    not declare.
    """
    def __init__(self, name):
        super(UndeclaredGenerator, self).__init__(name)
        self.name = name

    def __str__(self):
        return "Generator %s is not declared." % self.name


__all__ = [
    'PresentationSyntaxError', 'UndeclaredGenerator',
]
