# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, unicode_literals

from .errors import *
from .word import (
    Letter, EMPTY, letter, word, reduce_word, word_concat, word_invert,
    word_conjugate, format_word, parse_word,
)
from .term import (
    Generator, Operation, Up, Down, BarUp, BarDown, UP, DOWN, BAR_UP,
    BAR_DOWN, parse_term, format_term, eval_term, substitute, generators_of,
    term_size, operation_tables, OPERATIONS,
)
from .triple import (
    TopTriple, canonical, generator, top_up, top_bar_up, top_down,
    top_bar_down, normalize, eval_triple, triple_to_term, substitute_triple,
    solve_base, format_triple, parse_triple,
)
