"""Sparse Laurent-polynomial kernels on ``{exponent tuple: coefficient}`` dicts.

Coefficients are ints or Fractions; integral Fractions are demoted to int so
that the common case stays on fast integer arithmetic.  The compiled module
``_kernel_c`` exports the same functions.
"""

from fractions import Fraction


def _norm(c):
    if type(c) is Fraction and c._denominator == 1:
        return c._numerator
    return c


def add(a, b):
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


def sub(a, b):
    out = dict(a)
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


def scale(a, c):
    if not c:
        return {}
    if c == 1:
        return dict(a)
    return {k: _norm(v * c) for k, v in a.items()}


def shift(a, e, c):
    """Multiply by the monomial c * x^e."""
    if not c:
        return {}
    return {tuple([x + y for x, y in zip(k, e)]): _norm(v * c) for k, v in a.items()}


def mul(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    for kb, vb in b.items():
        for ka, va in a.items():
            k = tuple([x + y for x, y in zip(ka, kb)])
            s = get(k)
            out[k] = va * vb if s is None else s + va * vb
    return {k: _norm(v) for k, v in out.items() if v}


def axpy(acc, b, c, e=None):
    """In place: acc += c * x^e * b."""
    if not c:
        return acc
    for k, v in b.items():
        if e is not None:
            k = tuple([x + y for x, y in zip(k, e)])
        s = acc.get(k)
        t = v * c
        s = _norm(t if s is None else s + t)
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return acc
