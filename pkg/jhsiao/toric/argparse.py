"""ArgumentParser showing defaults, with verbosity and subcommand helpers."""
from __future__ import absolute_import
__all__ = ['ArgumentParser', 'verbosity']

import argparse
import logging


class ArgumentParser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault('formatter_class', argparse.ArgumentDefaultsHelpFormatter)
        super(ArgumentParser, self).__init__(*args, **kwargs)

    def add_verbose(self):
        self.add_argument(
            '-v', '--verbose', action='count', default=0,
            help='log progress to stderr, -vv for debug output')
        return self

    def add_command(self, subparsers, name, func, **kwargs):
        """Add a subcommand dispatching to func(args).

        The subcommand parser is an ArgumentParser too, with -v.
        """
        kwargs.setdefault('formatter_class', self.formatter_class)
        p = subparsers.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument(
            '-v', '--verbose', action='count', default=argparse.SUPPRESS,
            help='log progress to stderr, -vv for debug output')
        return p


def verbosity(count):
    """Logging level for a -v count."""
    if count >= 2:
        return logging.DEBUG
    if count == 1:
        return logging.INFO
    return logging.WARNING
