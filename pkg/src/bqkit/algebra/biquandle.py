# -*- coding: utf-8 -*-
"""
Finite biquandles given by operation tables.

Tables are indexed ``table[a][b] = a∘b``: the first index is the element
acted upon, the second the operand. With this orientation the maps
``f_b(x) = x↑b`` and ``g_b(x) = x↓b`` are the COLUMNS of the tables.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import hashlib
import logging
from collections import namedtuple

import six
from six.moves import range

from .errors import MalformedTable, AxiomViolation

_logger = logging.getLogger(__name__)

AXIOM_1 = 'axiom-1'
AXIOM_2 = 'axiom-2'
UP_INTERCHANGES = 'up-interchanges'
RULE_OF_FIVE = 'rule-of-five'
DOWN_INTERCHANGES = 'down-interchanges'

AXIOM_CATEGORIES = (AXIOM_1, AXIOM_2, UP_INTERCHANGES, RULE_OF_FIVE,
                    DOWN_INTERCHANGES)

R_UP = 'up'
R_BAR_UP = 'bar-up'
R_DOWN = 'down'
R_BAR_DOWN = 'bar-down'

R_IDENTITIES = {
    R_UP: 'a^(b_c) = a^b',
    R_BAR_UP: 'a^-(b_c) = a^-b',
    R_DOWN: 'a_(b^c) = a_b',
    R_BAR_DOWN: 'a_-(b^c) = a_-b',
}


class AxiomFailure(namedtuple('AxiomFailure',
                              'axiom witness left right detail')):
    """ One failed axiom instance.

    For axiom 1 the witness names two distinct arguments with the same
    image, ``left`` and ``right`` being those arguments. For the other
    axioms ``left`` and ``right`` are the two sides of the equality,
    evaluated at the witness elements.
    """
    __slots__ = ()

    def to_dict(self):
        return dict(axiom=self.axiom, witness=list(self.witness),
                    left=self.left, right=self.right, detail=self.detail)


class AxiomReport(object):
    """ Outcome of checking a pair of tables against the axioms.
    """
    def __init__(self, order, failures=()):
        self.order = order
        self.failures = tuple(failures)

    @property
    def passed(self):
        return not self.failures

    def failure(self, axiom):
        for it in self.failures:
            if it.axiom == axiom:
                return it
        return None

    def summary(self):
        if self.passed:
            return "valid"
        return "; ".join("%s at %s" % (f.axiom, tuple(f.witness))
                         for f in self.failures)

    def to_dict(self):
        return dict(order=self.order, passed=self.passed,
                    failures=[f.to_dict() for f in self.failures])

    def __eq__(self, other):
        return (isinstance(other, AxiomReport) and
                self.order == other.order and
                self.failures == other.failures)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "AxiomReport(%s)" % self.summary()


RViolation = namedtuple('RViolation', 'identity triple left right')


def _freeze(table):
    return tuple(tuple(row) for row in table)


def check_shape(up, down):
    """ Checks that both tables are square, of the same order, and hold
    integer entries in range.

    :return: the order.
    """
    n = len(up)
    if n == 0:
        raise MalformedTable("empty table")
    if len(down) != n:
        raise MalformedTable("up has order %d but down has %d rows" %
                             (n, len(down)))
    for label, table in (('up', up), ('down', down)):
        for a, row in enumerate(table):
            if len(row) != n:
                raise MalformedTable("%s row %d has %d entries, expected %d"
                                     % (label, a, len(row), n))
            for b, v in enumerate(row):
                if isinstance(v, bool) or not isinstance(v, six.integer_types):
                    raise MalformedTable("%s[%d][%d] is not an integer: %r"
                                         % (label, a, b, v))
                if not 0 <= v < n:
                    raise MalformedTable("%s[%d][%d] = %d is out of range"
                                         % (label, a, b, v))
    return n


def _column_repeat(table, n):
    for b in range(n):
        seen = {}
        for a in range(n):
            v = table[a][b]
            if v in seen:
                return seen[v], a, b
            seen[v] = a
    return None


def _s_repeat(up, down, n):
    seen = {}
    for x in range(n):
        for y in range(n):
            image = (down[y][x], up[x][y])
            if image in seen:
                return seen[image], (x, y)
            seen[image] = (x, y)
    return None


def _column_inverse(table, n, b, target):
    for x in range(n):
        if table[x][b] == target:
            return x
    return None


def check_axioms(up, down):
    """ Checks the tables exhaustively against the biquandle axioms.

    At most one failure is reported per axiom category: the first one in
    lexicographic order of the witness elements.

    :return: an AxiomReport.
    """
    n = check_shape(up, down)
    up = _freeze(up)
    down = _freeze(down)
    failures = []

    columns_ok = True
    for label, table in (('up', up), ('down', down)):
        repeat = _column_repeat(table, n)
        if repeat is not None:
            a1, a2, b = repeat
            failures.append(AxiomFailure(
                AXIOM_1, (a1, a2, b), a1, a2,
                "%s column %d maps %d and %d to %d" %
                (label, b, a1, a2, table[a1][b])))
            columns_ok = False
            break

    if columns_ok:
        repeat = _s_repeat(up, down, n)
        if repeat is not None:
            p, q = repeat
            failures.append(AxiomFailure(
                AXIOM_1, p + q, p, q,
                "S maps %r and %r to the same pair" % (p, q)))

    # axiom 2 needs the column inverses.
    if columns_ok:
        for a in range(n):
            x0 = _column_inverse(up, n, a, a)
            if down[a][x0] != x0:
                failures.append(AxiomFailure(
                    AXIOM_2, (a,), x0, down[a][x0],
                    "f_%d^-1(%d) = %d but %d_%d = %d" %
                    (a, a, x0, a, x0, down[a][x0])))
                break
            y0 = _column_inverse(down, n, a, a)
            if up[a][y0] != y0:
                failures.append(AxiomFailure(
                    AXIOM_2, (a,), y0, up[a][y0],
                    "g_%d^-1(%d) = %d but %d^%d = %d" %
                    (a, a, y0, a, y0, up[a][y0])))
                break

    pending = [UP_INTERCHANGES, RULE_OF_FIVE, DOWN_INTERCHANGES]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if not pending:
                    break
                if UP_INTERCHANGES in pending:
                    left = up[up[a][b]][c]
                    right = up[up[a][down[c][b]]][up[b][c]]
                    if left != right:
                        pending.remove(UP_INTERCHANGES)
                        failures.append(AxiomFailure(
                            UP_INTERCHANGES, (a, b, c), left, right,
                            "a^b^c != a^(c_b)^(b^c)"))
                if RULE_OF_FIVE in pending:
                    left = up[down[a][b]][down[c][up[b][a]]]
                    right = down[up[a][c]][up[b][down[c][a]]]
                    if left != right:
                        pending.remove(RULE_OF_FIVE)
                        failures.append(AxiomFailure(
                            RULE_OF_FIVE, (a, b, c), left, right,
                            "a_b^(c_(b^a)) != a^c_(b^(c_a))"))
                if DOWN_INTERCHANGES in pending:
                    left = down[down[a][b]][c]
                    right = down[down[a][up[c][b]]][down[b][c]]
                    if left != right:
                        pending.remove(DOWN_INTERCHANGES)
                        failures.append(AxiomFailure(
                            DOWN_INTERCHANGES, (a, b, c), left, right,
                            "a_b_c != a_(c^b)_(b_c)"))

    failures.sort(key=lambda f: AXIOM_CATEGORIES.index(f.axiom))
    return AxiomReport(n, failures)


def _invert_s(up, down, n):
    bar_up = [[None] * n for _ in range(n)]
    bar_down = [[None] * n for _ in range(n)]
    # S(x, y) = (a, b) means S^-1(a, b) = (b ^- a, a _- b) = (x, y).
    for x in range(n):
        for y in range(n):
            a = down[y][x]
            b = up[x][y]
            bar_up[b][a] = x
            bar_down[a][b] = y
    return _freeze(bar_up), _freeze(bar_down)


class FiniteBiquandle(object):
    """
    A validated finite biquandle with its derived bar tables.

    Instances are immutable. Construction checks every axiom instance and
    raises AxiomViolation on failure; use validate_biquandle to get the
    report instead.
    """
    def __init__(self, up, down, labels=None, name=None, report=None):
        if report is None:
            report = check_axioms(up, down)
        if not report.passed:
            raise AxiomViolation(report)

        self._order = report.order
        self._up = _freeze(up)
        self._down = _freeze(down)
        self._bar_up, self._bar_down = _invert_s(self._up, self._down,
                                                 self._order)
        if labels is not None:
            labels = tuple(six.text_type(it) for it in labels)
            if len(labels) != self._order:
                raise MalformedTable("%d labels for order %d" %
                                     (len(labels), self._order))
        self._labels = labels
        self._name = name

    @property
    def order(self):
        return self._order

    @property
    def up(self):
        return self._up

    @property
    def down(self):
        return self._down

    @property
    def bar_up(self):
        return self._bar_up

    @property
    def bar_down(self):
        return self._bar_down

    @property
    def labels(self):
        return self._labels

    @property
    def name(self):
        return self._name

    @property
    def key(self):
        """ Row-major integer encoding of (up, down), the canonical order.
        """
        return (tuple(v for row in self._up for v in row) +
                tuple(v for row in self._down for v in row))

    @property
    def ident(self):
        """ A printable identifier: the name, or a digest of the tables.
        """
        if self._name:
            return self._name
        digest = hashlib.sha1(
            ','.join(str(v) for v in self.key).encode('ascii')).hexdigest()
        return 'bq%d-%s' % (self._order, digest[:8])

    def elements(self):
        return range(self._order)

    def label(self, element):
        if self._labels is None:
            return six.text_type(element)
        return self._labels[element]

    def s_map(self, x, y):
        return self._down[y][x], self._up[x][y]

    def s_inverse(self, a, b):
        return self._bar_up[b][a], self._bar_down[a][b]

    def to_dict(self):
        data = dict(order=self._order,
                    up=[list(row) for row in self._up],
                    down=[list(row) for row in self._down])
        if self._labels is not None:
            data['labels'] = list(self._labels)
        if self._name:
            data['name'] = self._name
        return data

    def __eq__(self, other):
        return (isinstance(other, FiniteBiquandle) and
                self._up == other._up and self._down == other._down)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._up, self._down))

    def __repr__(self):
        return "<FiniteBiquandle %s order=%d>" % (self.ident, self._order)


def validate_biquandle(up, down, labels=None, name=None):
    """ Validates a pair of operation tables.

    :return: a FiniteBiquandle if every axiom instance holds, otherwise the
        AxiomReport naming the failures.
    :raise MalformedTable: if the tables are not well-formed.
    """
    report = check_axioms(up, down)
    if not report.passed:
        _logger.debug("Tables rejected: %s", report.summary())
        return report
    return FiniteBiquandle(up, down, labels=labels, name=name, report=report)


def bar_tables(bq):
    return bq.bar_up, bq.bar_down


def is_quandle(bq):
    """ True iff the down operation is the first-argument projection.
    """
    down = bq.down
    return all(down[a][b] == a for a in bq.elements() for b in bq.elements())


def bar_identity_failures(bq):
    """ Checks a^b^-(b_a) = a^-b^(b_-a) = a_b_-(b^a) = a_-b_(b^-a) = a for
    all pairs.

    :return: list of (identity, (a, b)) failures.
    """
    up, down, bar_up, bar_down = bq.up, bq.down, bq.bar_up, bq.bar_down
    failures = []
    for a in bq.elements():
        for b in bq.elements():
            checks = (
                ('a^b^-(b_a) = a', bar_up[up[a][b]][down[b][a]]),
                ('a^-b^(b_-a) = a', up[bar_up[a][b]][bar_down[b][a]]),
                ('a_b_-(b^a) = a', bar_down[down[a][b]][up[b][a]]),
                ('a_-b_(b^-a) = a', down[bar_down[a][b]][bar_up[b][a]]),
            )
            failures.extend((identity, (a, b))
                            for identity, v in checks if v != a)
    return failures


def satisfies_R(bq):
    """ Checks the four operand-independence identities on every ordered
    triple.

    :return: (True, None) or (False, RViolation) for the first violation.
    """
    up, down, bar_up, bar_down = bq.up, bq.down, bq.bar_up, bq.bar_down
    n = bq.order
    for a in range(n):
        for b in range(n):
            for c in range(n):
                checks = (
                    (R_UP, up[a][down[b][c]], up[a][b]),
                    (R_BAR_UP, bar_up[a][down[b][c]], bar_up[a][b]),
                    (R_DOWN, down[a][up[b][c]], down[a][b]),
                    (R_BAR_DOWN, bar_down[a][up[b][c]], bar_down[a][b]),
                )
                for identity, left, right in checks:
                    if left != right:
                        return False, RViolation(identity, (a, b, c),
                                                 left, right)
    return True, None


def r_consequences(bq):
    """ Checks the identities every biquandle satisfying the R identities
    obeys: cancellation against the same operand, commutation of up-type
    with down-type operations, and the two conjugation identities.

    :return: list of (identity, witness) failures, empty when all hold.
    """
    up, down, bar_up, bar_down = bq.up, bq.down, bq.bar_up, bq.bar_down
    n = bq.order
    failures = []

    def fail(identity, witness):
        if not any(f[0] == identity for f in failures):
            failures.append((identity, witness))

    for a in range(n):
        for b in range(n):
            if bar_up[up[a][b]][b] != a:
                fail('a^b^-b = a', (a, b))
            if up[bar_up[a][b]][b] != a:
                fail('a^-b^b = a', (a, b))
            if bar_down[down[a][b]][b] != a:
                fail('a_b_-b = a', (a, b))
            if down[bar_down[a][b]][b] != a:
                fail('a_-b_b = a', (a, b))

    ups = (('^', up), ('^-', bar_up))
    downs = (('_', down), ('_-', bar_down))
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for u_sym, u in ups:
                    for d_sym, d in downs:
                        if d[u[a][b]][c] != u[d[a][c]][b]:
                            fail('a%sb%sc = a%sc%sb' %
                                 (u_sym, d_sym, d_sym, u_sym), (a, b, c))
                if up[a][up[b][c]] != up[up[bar_up[a][c]][b]][c]:
                    fail('a^(b^c) = a^-c^b^c', (a, b, c))
                if down[a][down[b][c]] != down[down[bar_down[a][c]][b]][c]:
                    fail('a_(b_c) = a_-c_b_c', (a, b, c))
    return failures


__all__ = [
    'AXIOM_1', 'AXIOM_2', 'UP_INTERCHANGES', 'RULE_OF_FIVE',
    'DOWN_INTERCHANGES', 'AXIOM_CATEGORIES', 'R_IDENTITIES',
    'AxiomFailure', 'AxiomReport', 'RViolation', 'FiniteBiquandle',
    'check_shape', 'check_axioms', 'validate_biquandle', 'bar_tables',
    'is_quandle', 'satisfies_R', 'r_consequences',
]
