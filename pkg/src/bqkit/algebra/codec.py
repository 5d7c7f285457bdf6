# -*- coding: utf-8 -*-
"""
Biquandle file format: a JSON object with "order", "up", "down" and the
optional "labels" and "name". Bar tables are never stored.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import io
import os
import json

from .biquandle import FiniteBiquandle, check_axioms
from .errors import MalformedTable, AxiomViolation


def _unpack(data):
    if not isinstance(data, dict):
        raise MalformedTable("expected a JSON object")
    for field in ('order', 'up', 'down'):
        if field not in data:
            raise MalformedTable("missing field %r" % field)
    up, down = data['up'], data['down']
    if not isinstance(up, list) or not isinstance(down, list):
        raise MalformedTable("tables must be arrays")
    if any(not isinstance(row, list) for row in up + down):
        raise MalformedTable("table rows must be arrays")
    if data['order'] != len(up):
        raise MalformedTable("order %r does not match %d rows" %
                             (data['order'], len(up)))
    return up, down, data.get('labels'), data.get('name')


def parse_biquandle(text, name=None):
    """ Parses the JSON text of a biquandle file.

    :return: (report, biquandle or None)
    """
    try:
        data = json.loads(text)
    except ValueError as ex:
        raise MalformedTable("invalid JSON: %s" % ex)
    up, down, labels, data_name = _unpack(data)
    report = check_axioms(up, down)
    if not report.passed:
        return report, None
    bq = FiniteBiquandle(up, down, labels=labels, name=data_name or name,
                         report=report)
    return report, bq


def check_file(path):
    """ Reads and checks a biquandle file.

    :return: (report, biquandle or None)
    """
    with io.open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    name = os.path.splitext(os.path.basename(path))[0]
    return parse_biquandle(text, name=name)


def load_biquandle(path):
    """ Loads a validated biquandle.

    :raise AxiomViolation: if the tables fail the axioms.
    """
    report, bq = check_file(path)
    if bq is None:
        raise AxiomViolation(report)
    return bq


def dump_biquandle(bq):
    return json.dumps(bq.to_dict(), sort_keys=True)
