# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

import click

from .cli import cli, domain_errors, echo_json
from ..algebra import (
    check_file, enumerate_biquandles, is_quandle, satisfies_R,
)

logger = logging.getLogger(__name__)


def _yes_no(flag):
    return 'yes' if flag else 'no'


@cli.command()
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.option('--json', 'as_json', is_flag=True,
              help='Print the report as JSON.')
@click.pass_context
@domain_errors
def check(ctx, path, as_json):
    """ Check a biquandle file against the axioms.
    """
    report, bq = check_file(path)
    data = report.to_dict()
    if bq is not None:
        r_ok, violation = satisfies_R(bq)
        data['quandle'] = is_quandle(bq)
        data['satisfies_r'] = r_ok
        if violation is not None:
            data['r_violation'] = dict(identity=violation.identity,
                                       triple=list(violation.triple))

    if as_json:
        echo_json(data)
    elif bq is not None:
        click.echo("valid, quandle: %s, satisfies-R: %s" % (
            _yes_no(data['quandle']), _yes_no(data['satisfies_r'])))
    else:
        click.echo("invalid")
        for it in report.failures:
            click.echo("  %s at %s: %r vs %r (%s)" % (
                it.axiom, tuple(it.witness), it.left, it.right, it.detail))

    if not report.passed:
        ctx.exit(1)


@cli.command(name='enumerate')
@click.argument('order', type=int)
@click.option('--quandles', is_flag=True, help='Only quandles.')
@click.option('--r-only', is_flag=True,
              help='Only biquandles satisfying the R identities.')
@click.pass_context
@domain_errors
def enumerate_cmd(ctx, order, quandles, r_only):
    """ List every biquandle of ORDER as JSON lines.
    """
    limit = ctx.obj['settings']['MAX_ENUM_ORDER']
    count = 0
    for bq in enumerate_biquandles(order, limit=limit):
        if quandles and not is_quandle(bq):
            continue
        if r_only and not satisfies_R(bq)[0]:
            continue
        data = bq.to_dict()
        data['ident'] = bq.ident
        echo_json(data)
        count += 1
    logger.info("%d biquandle(s) listed", count)
