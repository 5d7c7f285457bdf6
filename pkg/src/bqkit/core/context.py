# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

from pydispatch import dispatcher, errors

_logger = logging.getLogger(__name__)


class Context(object):
    """
    The shared context for engines and commands.
    """
    def __init__(self, sender=None):
        self._sender = sender if sender is not None else dispatcher.Anonymous
        self._attributes = {}

    def __getitem__(self, item):
        return self.lookup(item)

    def __setitem__(self, key, value):
        self.bind(key, value)

    def __delitem__(self, key):
        self.unbind(key)

    def __contains__(self, key):
        return key in self._attributes

    def bind(self, key, provider):
        """ Makes a binding to the specified key.

        :param key:
        :param provider:
        :return:
        """
        self._attributes[key] = provider

    def unbind(self, key):
        """ Removes the binding specified by the key.
        :param key: the binding key.
        """
        if key in self._attributes:
            del self._attributes[key]

    def lookup(self, key, default=None):
        """ Looks up the attribute bound the specified key.

        :param key: the key
        :param default: the default value if no value is bound
        :return: the bound value or the default value.
        """
        obj = self._attributes.get(key)
        if obj is None:
            return default
        return obj

    def send(self, signal, **kwargs):
        """
        Send signal/event to registered receivers.
        """
        return dispatcher.send(signal=signal, sender=self._sender, **kwargs)

    def connect(self, receiver, signal=dispatcher.Any):
        """
        Connect the receiver to listen for signals/events.
        """
        dispatcher.connect(receiver, signal=signal, sender=self._sender)

    def disconnect(self, receiver, signal=dispatcher.Any):
        """
        Disconnect the specified receiver.
        """
        try:
            dispatcher.disconnect(receiver, signal=signal, sender=self._sender)
        except errors.DispatcherKeyError:
            _logger.debug("Receiver %r was not connected.", receiver)


####  Singleton construction  ####
_context = None


def get_core_context():
    """
    Gets the context singleton, creating it on first use.

    :return: the context singleton
    """
    global _context

    if _context is None:
        _context = Context()

    return _context


__all__ = ['Context', 'get_core_context']
