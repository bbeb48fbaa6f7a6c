"""Report text helpers: line wrapping and column alignment."""
__all__ = ['splitlines', 'longest_fmt', 'wrap_report', 'report_width']

import os

DEFAULT_WIDTH = 72

def report_width(environ=None):
    """Wrap width from JHSIAO_TORIC_WIDTH, DEFAULT_WIDTH if unset or bad."""
    environ = os.environ if environ is None else environ
    try:
        width = int(environ.get('JHSIAO_TORIC_WIDTH', DEFAULT_WIDTH))
    except ValueError:
        return DEFAULT_WIDTH
    return width if width > 0 else DEFAULT_WIDTH

def splitlines(line, width=DEFAULT_WIDTH, delim=' '):
    """Split a line on delims to fit in width.

    Assume no newlines.  Return a list of lines.  A word longer than
    width stays on its own line.
    """
    if len(line) <= width:
        return [line]
    idx = line.rfind(delim, 0, width+1)
    if idx <= 0:
        idx = line.find(delim, width)
        if idx < 0:
            return [line]
    rest = line[idx+len(delim):]
    if not rest:
        return [line[:idx]]
    return [line[:idx]] + splitlines(rest, width, delim)

def wrap_report(lines, width=None, indent='  '):
    """Wrap each report line; continuation lines are indented."""
    if width is None:
        width = report_width()
    out = []
    for line in lines:
        parts = splitlines(line, width)
        out.append(parts[0])
        for part in parts[1:]:
            out.extend(splitlines(indent + part, width))
    return '\n'.join(out) + '\n' if out else ''

def longest_fmt(strs):
    """Return a callable to format str to longest length."""
    return '{{:{}}}'.format(max(map(len, strs))).format
