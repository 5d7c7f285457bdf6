# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import sys
import json
import logging
import functools

import click

from ..core import BiquandleError

CONTEXT_SETTINGS = dict(help_option_names=['-h', '--help'])

logger = logging.getLogger(__name__)


def domain_errors(func):
    """ Reports library errors as click failures, exit code 1.
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except BiquandleError as ex:
            logger.debug("Command failed", exc_info=True)
            raise click.ClickException(str(ex))
    return wrapper


def echo_json(data):
    click.echo(json.dumps(data, sort_keys=True))


@click.group(invoke_without_command=True, context_settings=CONTEXT_SETTINGS)
@click.option('-v', '--verbose', count=True)
@click.pass_context
def cli(ctx, verbose):
    """ Biquandle algebra and link-invariant toolkit.
    """
    from ..runtime import settings

    ctx.obj = dict(verbosity=verbose, settings=settings)

    log_level = logging.WARNING

    if verbose > 1:
        log_level = logging.DEBUG
    elif verbose == 1:
        log_level = logging.INFO

    logging.getLogger('bqkit').setLevel(log_level)

    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


def main():
    return cli(auto_envvar_prefix='BQKIT')

if __name__ == '__main__':
    sys.exit(main())
