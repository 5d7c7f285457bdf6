# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

import click

from .cli import cli, domain_errors
from ..core.defines import FUNDAMENTAL, TOPOLOGICAL, KINDS
from ..diagram import load_diagram
from ..presentation import (
    fundamental_presentation, topological_presentation, format_presentation,
    load_presentation, tietze_eliminate,
)
from ..terms import format_term, format_triple, normalize, parse_term

logger = logging.getLogger(__name__)


def _split_keep(value):
    if not value:
        return ()
    return tuple(it.strip() for it in value.split(',') if it.strip())


def _emit(ctx, p, triples):
    if triples and p.is_topological:
        click.echo('kind: %s' % p.kind)
        click.echo('gens: %s' % ' '.join(p.generators))
        for lhs, rhs in p.relations:
            click.echo('%s = %s' % (format_triple(normalize(lhs)),
                                    format_triple(normalize(rhs))))
    else:
        click.echo(format_presentation(p), nl=False)

    if ctx.obj['verbosity'] > 0:
        for g, t in p.eliminated:
            click.echo('# %s := %s' % (g, format_term(t)), err=True)


@cli.command()
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.option('--kind', type=click.Choice(KINDS), default=FUNDAMENTAL,
              show_default=True)
@click.option('--simplify', 'do_simplify', is_flag=True,
              help='Eliminate generators by Tietze moves.')
@click.option('--keep', default='',
              help='Comma-separated generators that must survive.')
@click.option('--triples', is_flag=True,
              help='Print topological relations as triples.')
@click.pass_context
@domain_errors
def present(ctx, path, kind, do_simplify, keep, triples):
    """ Print the presentation of a diagram file.

    Elimination takes the shortest definitions first, so the surviving
    generators follow that ranking. Pin the ones you want with --keep,
    e.g. --keep b,f,l reduces the topological L6n1 to b, f and l.
    """
    d = load_diagram(path)
    if kind == TOPOLOGICAL:
        p = topological_presentation(d)
    else:
        p = fundamental_presentation(d)
    if do_simplify:
        p = tietze_eliminate(p, keep=_split_keep(keep))
    _emit(ctx, p, triples)


@cli.command()
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.option('--keep', default='',
              help='Comma-separated generators that must survive.')
@click.option('--triples', is_flag=True,
              help='Print topological relations as triples.')
@click.pass_context
@domain_errors
def simplify(ctx, path, keep, triples):
    """ Simplify a presentation file by Tietze moves.
    """
    p = tietze_eliminate(load_presentation(path), keep=_split_keep(keep))
    _emit(ctx, p, triples)


@cli.command(name='normalize')
@click.argument('term')
@domain_errors
def normalize_term(term):
    """ Print the triple normal form of TERM.
    """
    click.echo(format_triple(normalize(parse_term(term))))

