# -*- coding: utf-8 -*-
"""
Various definitions used across different packages.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

from .. import VERSION_STRING

TOOLKIT_INFO = {
    "bqkit": "Biquandle algebra and link-invariant toolkit.",
    "version": VERSION_STRING,
}

# presentation kinds, doubling as colouring modes.
FUNDAMENTAL = 'fundamental'
TOPOLOGICAL = 'topological'
KINDS = (FUNDAMENTAL, TOPOLOGICAL)

##### Environment variable ####
BQKIT_POD_FOLDER = 'BQKIT_POD'  # where the working directory is.
BQKIT_WORKERS = 'BQKIT_WORKERS'  # caps the number of counting workers.
