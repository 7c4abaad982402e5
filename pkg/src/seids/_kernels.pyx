# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term kernels; see ``_kernels_py`` for the reference versions."""

from cpython.long cimport PyLong_AsLong, PyLong_FromLong
from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_GET_ITEM, PyTuple_New, PyTuple_SET_ITEM


def divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    if _at(a, n - 1) != _at(b, n - 1):
        return False
    for i in range(n - 1):
        if _at(a, i) > _at(b, i):
            return False
    return True


def term_mul(tuple a, tuple m):
    return _mul(a, m, len(a))


def term_div(tuple b, tuple a):
    cdef Py_ssize_t i, n = len(a)
    cdef tuple out = PyTuple_New(n)
    cdef object v
    for i in range(n):
        v = PyLong_FromLong(_at(b, i) - _at(a, i))
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


def term_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    if <long>a[n - 1] != <long>b[n - 1]:
        return None
    out = [0] * n
    for i in range(n):
        x = a[i]
        y = b[i]
        out[i] = x if x > y else y
    return tuple(out)


def coprime(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n - 1):
        if <long>a[i] and <long>b[i]:
            return False
    return True


cdef inline long _at(tuple t, Py_ssize_t i):
    return PyLong_AsLong(<object>PyTuple_GET_ITEM(t, i))


cdef inline tuple _mul(tuple e, tuple m, Py_ssize_t n):
    cdef tuple out = PyTuple_New(n)
    cdef Py_ssize_t i
    cdef object v
    for i in range(n):
        v = PyLong_FromLong(_at(e, i) + _at(m, i))
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


def axpy(dict h, c, tuple m, dict g):
    cdef Py_ssize_t n = len(m)
    cdef tuple k
    for e, v in g.items():
        k = _mul(<tuple>e, m, n)
        nv = h.get(k)
        if nv is None:
            h[k] = -c * v
        else:
            nv = nv - c * v
            if nv:
                h[k] = nv
            else:
                del h[k]


def scaled(dict g, c, tuple m):
    cdef Py_ssize_t n = len(m)
    return {_mul(<tuple>e, m, n): c * v for e, v in g.items()}


def degree(tuple term):
    cdef Py_ssize_t i, n = len(term)
    cdef long s = 0
    for i in range(n - 1):
        s += _at(term, i)
    return s
