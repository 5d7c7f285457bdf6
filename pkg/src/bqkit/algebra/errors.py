# -*- coding: utf-8 -*-
from __future__ import absolute_import, print_function, unicode_literals

from ..core import BiquandleError


class MalformedTable(BiquandleError):
    """ Raised when operation tables are not square, not of the same order,
    or hold an entry outside the element range.
    """
    def __init__(self, reason):
        super(MalformedTable, self).__init__(reason)
        self.reason = reason

    def __str__(self):
        return "Malformed operation table: %s" % self.reason


class AxiomViolation(BiquandleError):
    """ Raised when a validated biquandle is demanded but the tables fail
    the axioms. The report names the failures.
    """
    def __init__(self, report):
        super(AxiomViolation, self).__init__(report)
        self.report = report

    def __str__(self):
        return "Tables fail the biquandle axioms: %s" % self.report.summary()


class OrderOutOfRange(BiquandleError):
    def __init__(self, order, limit):
        super(OrderOutOfRange, self).__init__(order, limit)
        self.order = order
        self.limit = limit

    def __str__(self):
        return "Order %r outside the supported range 1..%d." % (self.order,
                                                                self.limit)


__all__ = [
    'MalformedTable', 'AxiomViolation', 'OrderOutOfRange',
]
