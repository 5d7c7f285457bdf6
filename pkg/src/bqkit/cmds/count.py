# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

import click

from .cli import cli, domain_errors, echo_json
from ..core import get_core_context, signals
from ..core.defines import FUNDAMENTAL, TOPOLOGICAL, KINDS
from ..algebra import load_biquandle
from ..diagram import load_diagram
from ..invariants import (
    CountEngine, count_colorings, load_manifest, separate_terms,
)
from ..presentation import (
    fundamental_presentation, topological_presentation, load_presentation,
)
from ..terms import parse_term

logger = logging.getLogger(__name__)

BOTH = 'both'


def _modes(mode):
    return list(KINDS) if mode == BOTH else [mode]


def _echo_progress(result=None, **kwargs):
    click.echo("# %s/%s %s: %d (%d ms)" % (
        result.diagram, result.target, result.mode, result.count, result.ms),
        err=True)


def _run_manifest(ctx, manifest, oracle):
    settings = ctx.obj['settings']
    diagrams, targets, modes = load_manifest(manifest)

    core_ctx = get_core_context()
    if ctx.obj['verbosity'] > 0:
        core_ctx.connect(_echo_progress, signal=signals.COUNT_FINISHED)
    engine = CountEngine(workers=settings['WORKERS'],
                         oracle_limit=settings['ORACLE_MAX_ASSIGNMENTS'])
    engine.start(core_ctx)
    try:
        results = engine.run_batch(diagrams, targets, modes, oracle=oracle)
    finally:
        engine.stop(core_ctx)
        core_ctx.disconnect(_echo_progress, signal=signals.COUNT_FINISHED)
    for result in results:
        echo_json(result.to_dict())


@cli.command()
@click.argument('diagram', required=False,
                type=click.Path(exists=True, dir_okay=False))
@click.argument('target', required=False,
                type=click.Path(exists=True, dir_okay=False))
@click.option('--mode', type=click.Choice(KINDS + (BOTH,)),
              default=FUNDAMENTAL, show_default=True)
@click.option('--oracle', is_flag=True, help='Count by brute force.')
@click.option('--manifest', type=click.Path(exists=True, dir_okay=False),
              help='Run a batch manifest instead.')
@click.pass_context
@domain_errors
def count(ctx, diagram, target, mode, oracle, manifest):
    """ Count colourings of DIAGRAM by the biquandle in TARGET.
    """
    if manifest:
        _run_manifest(ctx, manifest, oracle)
        return
    if not diagram or not target:
        raise click.UsageError("DIAGRAM and TARGET are required "
                               "without --manifest.")

    settings = ctx.obj['settings']
    d = load_diagram(diagram)
    bq = load_biquandle(target)
    for it in _modes(mode):
        result = count_colorings(d, bq, it, oracle=oracle,
                                 workers=settings['WORKERS'],
                                 limit=settings['ORACLE_MAX_ASSIGNMENTS'])
        echo_json(result.to_dict())


@cli.command()
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.argument('first')
@click.argument('second')
@click.option('--kind', type=click.Choice(KINDS), default=None,
              help='Presentation kind for a diagram file.')
@click.option('--max-order', type=int, default=3, show_default=True)
@click.pass_context
@domain_errors
def separate(ctx, path, first, second, kind, max_order):
    """ Search for a colouring telling two terms apart.

    PATH is a presentation file, or a diagram file ending in .pd.
    """
    if path.endswith('.pd'):
        d = load_diagram(path)
        if kind == TOPOLOGICAL:
            p = topological_presentation(d)
        else:
            p = fundamental_presentation(d)
    else:
        p = load_presentation(path)
        if kind is not None:
            p = p.with_kind(kind)

    limit = ctx.obj['settings']['MAX_ENUM_ORDER']
    if max_order > limit:
        raise click.BadParameter("at most %d" % limit,
                                 param_hint='--max-order')
    outcome = separate_terms(p, parse_term(first), parse_term(second),
                             max_order=max_order)
    echo_json(outcome.to_dict())
