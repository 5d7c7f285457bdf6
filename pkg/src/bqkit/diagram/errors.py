# -*- coding: utf-8 -*-
from __future__ import absolute_import, print_function, unicode_literals

from ..core import BiquandleError


class DiagramSyntaxError(BiquandleError):
    """ Raised for a line that is neither a crossing nor a crossingless
    component record.
    """
    def __init__(self, line_no, line, reason='unknown line form'):
        super(DiagramSyntaxError, self).__init__(line_no, line, reason)
        self.line_no = line_no
        self.line = line
        self.reason = reason

    def __str__(self):
        return "Line %d: %s: %r" % (self.line_no, self.reason, self.line)


class DuplicateRole(BiquandleError):
    """ Raised when a semiarc fills the same kind of role twice.
    """
    def __init__(self, name, role):
        super(DuplicateRole, self).__init__(name, role)
        self.name = name
        self.role = role

    def __str__(self):
        return "Semiarc %s appears in more than one %s role." % (self.name,
                                                                 self.role)


class DanglingSemiarc(BiquandleError):
    """ Raised when a semiarc has no incoming or no outgoing end.
    """
    def __init__(self, name, missing):
        super(DanglingSemiarc, self).__init__(name, missing)
        self.name = name
        self.missing = missing

    def __str__(self):
        return "Semiarc %s has no %s role." % (self.name, self.missing)


__all__ = [
    'DiagramSyntaxError', 'DuplicateRole', 'DanglingSemiarc',
]
