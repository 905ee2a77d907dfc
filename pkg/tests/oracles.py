"""Reference implementations used only as independent test oracles."""

from sympy import GF
from sympy.polys.matrices import DM

from msrd.sumrank import enumerate_codewords, sum_rank_weight


def sympy_rank(rows, p):
    """Independent rank oracle over a prime field."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    return DM(rows, GF(p)).rank()


def min_distance_bruteforce(code):
    """Minimum weight over nonzero codewords via the object-level enumeration."""
    weights = [sum_rank_weight(v) for v in enumerate_codewords(code, cap=None)]
    nonzero = [w for w in weights if w]
    return min(nonzero) if nonzero else None


def weight_histogram_bruteforce(code):
    hist = {}
    for v in enumerate_codewords(code, cap=None):
        w = sum_rank_weight(v)
        hist[w] = hist.get(w, 0) + 1
    return dict(sorted(hist.items()))
