# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals


import click

from .cli import cli, echo_json
from ..core.defines import TOOLKIT_INFO
from .. import VERSION_STRING


@cli.command()
def version():
    """ Show version information.

    :return:
    """
    click.echo("bqkit Ver. %s" % VERSION_STRING)


@cli.command()
@click.pass_context
def info(ctx):
    """ Show toolkit and runtime locations.
    """
    settings = ctx.obj['settings']
    data = dict(TOOLKIT_INFO)
    for key in ('pod_dir', 'conf_dir', 'logs_dir', 'fixtures_dir'):
        data[key] = settings[key]
    data['workers'] = settings['WORKERS']
    echo_json(data)


@cli.command()
@click.pass_context
def config(ctx):
    """ Print the effective settings as JSON.
    """
    echo_json(ctx.obj['settings'])
