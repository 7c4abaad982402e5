"""Pure-Python fallback for the term kernels in ``_kernels.pyx``.

A *term* is a tuple of exponents whose last entry is a free-module
component index (always 0 for ideals).  Ring monomials used as
multipliers carry a trailing 0 so elementwise addition keeps the
component of the term being multiplied.
"""

from operator import add, sub


def divides(a, b):
    """True iff term ``a`` divides term ``b`` (same component)."""
    if a[-1] != b[-1]:
        return False
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def term_mul(a, m):
    return tuple(map(add, a, m))


def term_div(b, a):
    return tuple(map(sub, b, a))


def term_lcm(a, b):
    if a[-1] != b[-1]:
        return None
    return tuple(map(max, a, b))


def coprime(a, b):
    for x, y in zip(a[:-1], b[:-1]):
        if x and y:
            return False
    return True


def axpy(h, c, m, g):
    """In place: ``h -= c * m * g`` for term dicts ``h`` and ``g``."""
    for e, v in g.items():
        k = tuple(map(add, e, m))
        nv = h.get(k)
        if nv is None:
            h[k] = -c * v
        else:
            nv = nv - c * v
            if nv:
                h[k] = nv
            else:
                del h[k]


def scaled(g, c, m):
    """Return the dict ``c * m * g``."""
    return {tuple(map(add, e, m)): c * v for e, v in g.items()}


def degree(term):
    return sum(term) - term[-1]
