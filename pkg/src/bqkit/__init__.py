# -*- coding: utf-8 -*-

VERSION_MAJOR = 0
VERSION_MINOR = 1
VERSION_MICRO = 0

__version__ = '%d.%d.%d' % (VERSION_MAJOR, VERSION_MINOR, VERSION_MICRO)
VERSION_STRING = __version__

APP_NAME = 'bqkit'
