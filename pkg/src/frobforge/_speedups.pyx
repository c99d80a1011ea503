# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term-arithmetic kernel; same API as frobforge._kernel_py."""

BACKEND = "compiled"


def axpy(dict acc, long c, tuple exp, dict g, long p):
    """In place: acc += c * x^exp * g.  Zero coefficients are dropped."""
    cdef tuple e2, key
    cdef long c2, v
    cdef Py_ssize_t i, n = len(exp)
    for e2, c2 in g.items():
        key = tuple([<object> exp[i] + <object> e2[i] for i in range(n)])
        v = (acc.get(key, 0) + c * c2) % p
        if v:
            acc[key] = v
        elif key in acc:
            del acc[key]


def axpy_vec(dict acc, long c, tuple exp, dict g, long p):
    """In place: acc += c * x^exp * g for module dicts keyed by (pos, exp)."""
    cdef tuple k2, e2, key
    cdef long c2, v
    cdef Py_ssize_t i, n = len(exp)
    for k2, c2 in g.items():
        e2 = <tuple> k2[1]
        key = (k2[0], tuple([<object> exp[i] + <object> e2[i] for i in range(n)]))
        v = (acc.get(key, 0) + c * c2) % p
        if v:
            acc[key] = v
        elif key in acc:
            del acc[key]


def mul_terms(dict f, dict g, long p):
    """Product of two term dicts."""
    cdef dict out = {}
    cdef tuple e1
    cdef long c1
    for e1, c1 in f.items():
        axpy(out, c1, e1, g, p)
    return out


def termwise_power(dict f, long q, long p):
    """f^q for q a power of p: c*x^a -> c^q * x^(a*q), term by term."""
    cdef dict out = {}
    cdef tuple e
    cdef long c
    for e, c in f.items():
        out[tuple([a * q for a in e])] = pow(c, q, p)
    return out
