# -*- coding: utf-8 -*-
from __future__ import absolute_import, print_function, unicode_literals

from ..core import BiquandleError


class TermSyntaxError(BiquandleError):
    """ Raised when a term does not follow the grammar.
    """
    def __init__(self, message, position, text=None):
        super(TermSyntaxError, self).__init__(message, position)
        self.message = message
        self.position = position
        self.text = text

    def __str__(self):
        return "%s at position %d" % (self.message, self.position)


class TripleSyntaxError(BiquandleError):
    def __init__(self, text):
        super(TripleSyntaxError, self).__init__(text)
        self.text = text

    def __str__(self):
        return "Not a triple: %r" % self.text


class UnboundGenerator(BiquandleError):
    """ Raised when evaluation meets a generator the environment lacks.
    """
    def __init__(self, name):
        super(UnboundGenerator, self).__init__(name)
        self.name = name

    def __str__(self):
        return "Generator %s is not bound." % self.name


__all__ = [
    'TermSyntaxError', 'TripleSyntaxError', 'UnboundGenerator',
]
