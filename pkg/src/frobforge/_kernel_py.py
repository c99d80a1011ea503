"""Pure-Python term-arithmetic kernel.

Polynomials live in dicts mapping exponent tuples to coefficients in [1, p);
module elements map (position, exponent-tuple) keys the same way.  These four
functions are the inner loops of every reduction and multiplication in the
package; frobforge._speedups provides the compiled twin with the same API.
"""

BACKEND = "pure"


def axpy(acc, c, exp, g, p):
    """In place: acc += c * x^exp * g.  Zero coefficients are dropped."""
    get = acc.get
    for e2, c2 in g.items():
        key = tuple(a + b for a, b in zip(exp, e2))
        v = (get(key, 0) + c * c2) % p
        if v:
            acc[key] = v
        elif key in acc:
            del acc[key]


def axpy_vec(acc, c, exp, g, p):
    """In place: acc += c * x^exp * g for module dicts keyed by (pos, exp)."""
    get = acc.get
    for (pos, e2), c2 in g.items():
        key = (pos, tuple(a + b for a, b in zip(exp, e2)))
        v = (get(key, 0) + c * c2) % p
        if v:
            acc[key] = v
        elif key in acc:
            del acc[key]


def mul_terms(f, g, p):
    """Product of two term dicts."""
    out = {}
    for e1, c1 in f.items():
        axpy(out, c1, e1, g, p)
    return out


def termwise_power(f, q, p):
    """f^q for q a power of p: c*x^a -> c^q * x^(a*q), term by term."""
    return {tuple(a * q for a in e): pow(c, q, p) for e, c in f.items()}
