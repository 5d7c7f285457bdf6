# -*- coding: utf-8 -*-

from __future__ import absolute_import, division, print_function, unicode_literals

import os
import sys

from setuptools import setup, find_packages

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)),
                                'src'))

from bqkit import APP_NAME, __version__

setup(
    name=APP_NAME,
    version=__version__,
    description="Biquandle algebra and link-invariant toolkit.",
    package_dir={'': 'src'},
    packages=find_packages('src', exclude=['**/tests/*']),
    include_package_data=True,
    package_data={
        'bqkit': ['fixtures/*.pd', 'fixtures/*.json', 'fixtures/*.txt',
                  'fixtures/*.rst'],
    },
    install_requires=[
        'click>=8.0,<8.2',
        'gevent>=23.9.1',
        'PyDispatcher>=2.0.7',
        'six>=1.16.0',
    ],
    entry_points={
        'console_scripts': [
            'bqkit=bqkit.cmds.cli:main',
        ],
    },

    zip_safe=False,

)
