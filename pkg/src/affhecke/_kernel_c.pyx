# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernel_py``: same functions, same semantics."""

from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM
from cpython.ref cimport Py_INCREF
from fractions import Fraction

cdef object _Fraction = Fraction


cdef inline object _norm(object c):
    if type(c) is _Fraction and c._denominator == 1:
        return c._numerator
    return c


cdef inline tuple _addexp(tuple a, tuple b):
    cdef Py_ssize_t n = len(a), i
    cdef tuple out = PyTuple_New(n)
    cdef object v
    for i in range(n):
        v = <long>a[i] + <long>b[i]
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


def add(dict a, dict b):
    cdef dict out
    cdef object k, v, s
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        if s is None:
            out[k] = v
        else:
            s = _norm(s + v)
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def sub(dict a, dict b):
    cdef dict out = dict(a)
    cdef object k, v, s
    for k, v in b.items():
        s = out.get(k)
        if s is None:
            out[k] = -v
        else:
            s = _norm(s - v)
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def scale(dict a, object c):
    cdef dict out = {}
    cdef object k, v
    if not c:
        return out
    if c == 1:
        return dict(a)
    for k, v in a.items():
        out[k] = _norm(v * c)
    return out


def shift(dict a, tuple e, object c):
    cdef dict out = {}
    cdef object k, v
    if not c:
        return out
    for k, v in a.items():
        out[_addexp(<tuple>k, e)] = _norm(v * c)
    return out


def mul(dict a, dict b):
    cdef dict out = {}
    cdef object ka, va, kb, vb, k, s
    if len(a) < len(b):
        a, b = b, a
    for kb, vb in b.items():
        for ka, va in a.items():
            k = _addexp(<tuple>ka, <tuple>kb)
            s = out.get(k)
            if s is None:
                out[k] = va * vb
            else:
                out[k] = s + va * vb
    return {k: _norm(s) for k, s in out.items() if s}


def axpy(dict acc, dict b, object c, object e=None):
    cdef object k, v, s, t
    if not c:
        return acc
    for k, v in b.items():
        if e is not None:
            k = _addexp(<tuple>k, <tuple>e)
        s = acc.get(k)
        t = v * c
        s = _norm(t if s is None else s + t)
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return acc
