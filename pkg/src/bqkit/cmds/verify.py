# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

import click

from .cli import cli, domain_errors, echo_json
from ..core import get_core_context, signals
from ..verify import all_criteria, run_criteria

logger = logging.getLogger(__name__)


def _echo_outcome(outcome=None, **kwargs):
    click.echo("%s %s (%d ms)%s" % (
        'PASS' if outcome.passed else 'FAIL', outcome.key, outcome.ms,
        ': ' + outcome.detail if outcome.detail else ''))


@cli.command(name='verify-paper')
@click.option('--list', 'list_only', is_flag=True,
              help='List the criteria without running them.')
@click.option('--fixtures', type=click.Path(exists=True, file_okay=False),
              help='Read fixtures from this directory.')
@click.option('--only', multiple=True, help='Run only this criterion.')
@click.option('--json', 'as_json', is_flag=True,
              help='Print one JSON object per criterion.')
@click.pass_context
@domain_errors
def verify_paper(ctx, list_only, fixtures, only, as_json):
    """ Run the reproduction criteria.
    """
    if list_only:
        for item in all_criteria():
            click.echo("%s: %s" % (item.key, item.title))
        return

    settings = ctx.obj['settings']
    core_ctx = get_core_context()
    receiver = None if as_json else _echo_outcome
    if receiver is not None:
        core_ctx.connect(receiver, signal=signals.CRITERION_PASSED)
        core_ctx.connect(receiver, signal=signals.CRITERION_FAILED)
    try:
        outcomes = run_criteria(fixtures, keys=only,
                                seed=settings['RANDOM_SEED'], ctx=core_ctx)
    finally:
        if receiver is not None:
            core_ctx.disconnect(receiver, signal=signals.CRITERION_PASSED)
            core_ctx.disconnect(receiver, signal=signals.CRITERION_FAILED)

    if as_json:
        for outcome in outcomes:
            echo_json(outcome.to_dict())

    failed = [it.key for it in outcomes if not it.passed]
    if failed:
        click.echo("%d of %d criteria failed: %s" % (
            len(failed), len(outcomes), ', '.join(failed)), err=True)
        ctx.exit(1)
    click.echo("%d criteria passed" % len(outcomes), err=True)
