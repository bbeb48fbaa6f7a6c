"""Provide a key for numeric sorting of labels."""
__all__ = ['numsortkey', 'sorted_labels']
import re


INT = re.compile(r'(\d+)').split

_inf = float('inf')
def numsortkey(split=INT, tp=int):
    def key(string):
        """Key for numeric sort.

        Splits string into digit/non-digit via split.  Each sequence is then
        converted into a tuple of (tp, str), so W10 sorts after W2.
        Non-digit sequences get float('inf') as their numeric component.
        """
        ret = split(string)
        ret[0] = (_inf, ret[0])
        for i in range(1, len(ret), 2):
            ret[i] = (tp(ret[i]), ret[i])
            ret[i+1] = (_inf, ret[i+1])
        return ret
    return key

def sorted_labels(labels):
    return sorted(labels, key=numsortkey())
