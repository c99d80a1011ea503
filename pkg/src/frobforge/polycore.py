"""Exact arithmetic core: prime fields, monomial orders, sparse polynomials.

Everything downstream (Groebner engine, complexes, Frobenius machinery) is
built on the two value types here: `Ring` (a standard-graded polynomial ring
over F_p, optionally modulo a homogeneous quotient ideal) and `Polynomial`
(an immutable sparse map from exponent tuples to nonzero residues mod p).

Monomials are plain exponent tuples; the helper functions at the bottom
(`mono_mul`, `mono_divides`, ...) are the only places that touch them.
"""

from __future__ import annotations

import re
from functools import lru_cache

from frobforge import kernel
from frobforge.errors import (
    AmbientMismatch,
    ExponentOverflow,
    FrobforgeError,
    NotHomogeneous,
    ZeroPolynomialError,
)

NEG_INF = float("-inf")

# Exponents stay well below 2^62 so products of two of them cannot overflow
# a signed machine word in the compiled kernel.
EXP_LIMIT = 1 << 62


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """Residue arithmetic mod a prime p; elements are plain ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not is_prime(p):
            raise FrobforgeError(f"characteristic must be prime, got {p}")
        self.p = p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in prime field")
        return pow(a, self.p - 2, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"F_{self.p}"


# ---------------------------------------------------------------------------
# Monomial orders.  `key(exp)` returns a tuple that sorts ascending with the
# order, so the leading term of f maximizes key over f's exponents.
# ---------------------------------------------------------------------------


def _grevlex_key(exp):
    return (sum(exp), tuple(-e for e in reversed(exp)))


class MonomialOrder:
    name = "?"

    def key(self, exp):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.__dict__.items()))))

    def __repr__(self):
        return self.name


class GrevLex(MonomialOrder):
    name = "grevlex"

    def key(self, exp):
        return _grevlex_key(exp)


class Lex(MonomialOrder):
    name = "lex"

    def key(self, exp):
        return exp


class ElimBlock(MonomialOrder):
    """Block order eliminating the first k variables (grevlex in each block)."""

    def __init__(self, k: int):
        self.k = k
        self.name = f"elim({k})"

    def key(self, exp):
        k = self.k
        return (_grevlex_key(exp[:k]), _grevlex_key(exp[k:]))


GREVLEX = GrevLex()
LEX = Lex()

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9']*\Z")


class Ring:
    """F_p[x_1..x_n] with a monomial order, optionally modulo homogeneous I0.

    The quotient generators always live in the base polynomial ring (the same
    ring with an empty quotient).  Ideal-level operations lift to the base
    ring and append the quotient generators; `Polynomial` values are formal
    representatives and are only reduced where semantics require it.
    """

    __slots__ = (
        "field",
        "p",
        "vars",
        "order",
        "quotient_gens",
        "_base",
        "_hash",
        "_quotient_gb",
        "zero",
        "one",
    )

    def __init__(self, p: int, vars: tuple[str, ...] | list[str], order: MonomialOrder = GREVLEX,
                 quotient_gens=(), _base=None):
        self.field = PrimeField(p)
        self.p = p
        vars = tuple(vars)
        if len(set(vars)) != len(vars) or not vars:
            raise FrobforgeError("variable names must be nonempty and distinct")
        for v in vars:
            if not _NAME_RE.match(v):
                raise FrobforgeError(f"bad variable name {v!r}")
        self.vars = vars
        self.order = order
        self._base = _base if _base is not None else (self if not quotient_gens else None)
        if self._base is None:
            self._base = Ring(p, vars, order)
        self.quotient_gens = tuple(quotient_gens)
        for g in self.quotient_gens:
            if g.ring is not self._base and g.ring != self._base:
                raise AmbientMismatch("quotient generators must live in the base ring")
            if not g.is_homogeneous():
                raise NotHomogeneous(f"quotient generator {g} is not homogeneous")
        self._hash = hash((p, vars, order, tuple(sorted(str(g) for g in self.quotient_gens))))
        self._quotient_gb = None
        self.zero = Polynomial(self, {})
        self.one = Polynomial(self, {(0,) * len(vars): 1})

    # -- structure ---------------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.vars)

    @property
    def is_polynomial_ring(self) -> bool:
        return not self.quotient_gens

    def base_ring(self) -> "Ring":
        """The polynomial ring P under this quotient (self when no quotient)."""
        return self._base

    def quotient(self, gens) -> "Ring":
        """R = P/(gens); only allowed on a polynomial ring."""
        if not self.is_polynomial_ring:
            raise FrobforgeError("quotient of a quotient: combine the generators instead")
        gens = [g if isinstance(g, Polynomial) else self.poly(g) for g in gens]
        gens = [g for g in gens if not g.is_zero()]
        return Ring(self.p, self.vars, self.order, tuple(gens), _base=self)

    def with_order(self, order: MonomialOrder) -> "Ring":
        base = Ring(self.p, self.vars, order)
        if self.is_polynomial_ring:
            return base
        return base.quotient([base.convert(g) for g in self.quotient_gens])

    def var(self, name: str) -> "Polynomial":
        i = self.vars.index(name)
        exp = [0] * self.nvars
        exp[i] = 1
        return Polynomial(self, {tuple(exp): 1})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(v) for v in self.vars)

    def convert(self, f: "Polynomial") -> "Polynomial":
        """Move a polynomial to this ring (same p, same variable names)."""
        if f.ring == self or f.ring == self._base:
            return Polynomial(self, dict(f.terms))
        if f.ring.p != self.p or f.ring.vars != self.vars:
            raise AmbientMismatch(f"cannot convert between {f.ring} and {self}")
        return Polynomial(self, dict(f.terms))

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and other.p == self.p
            and other.vars == self.vars
            and other.order == self.order
            and tuple(sorted(str(g) for g in other.quotient_gens))
            == tuple(sorted(str(g) for g in self.quotient_gens))
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        head = f"F_{self.p}[{','.join(self.vars)}]"
        if self.quotient_gens:
            head += "/(" + ", ".join(str(g) for g in self.quotient_gens) + ")"
        return head

    # -- element construction ----------------------------------------------

    def const(self, c: int) -> "Polynomial":
        c %= self.p
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def term(self, c: int, exp) -> "Polynomial":
        c %= self.p
        exp = tuple(exp)
        if len(exp) != self.nvars:
            raise FrobforgeError("exponent length mismatch")
        return Polynomial(self, {exp: c} if c else {})

    def poly(self, text: str) -> "Polynomial":
        """Parse `3*x^2*y + z^3 - 1` style syntax."""
        return _parse_poly(self, text)

    def random_form(self, degree: int, rng) -> "Polynomial":
        """Random homogeneous form of the given degree (may be zero)."""
        monos = monomials_of_degree(self.nvars, degree)
        terms = {}
        for m in monos:
            c = rng.randrange(self.p)
            if c:
                terms[m] = c
        return Polynomial(self, terms)


class Polynomial:
    """Immutable sparse polynomial; `terms` maps exponent tuples to residues."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basic predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.ring.nvars: 1}

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * self.ring.nvars}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def total_degree(self):
        """Maximum term degree; NEG_INF for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def check_homogeneous(self):
        if not self.is_homogeneous():
            raise NotHomogeneous(f"{self} is not homogeneous")
        return self

    # -- arithmetic ----------------------------------------------------------

    def _require_same_ring(self, other: "Polynomial"):
        if self.ring is not other.ring and self.ring != other.ring:
            raise AmbientMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        self._require_same_ring(other)
        p = self.ring.p
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {e: (-c) % p for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.p
            if c == 0:
                return self.ring.zero
            p = self.ring.p
            return Polynomial(self.ring, {e: (c * v) % p for e, v in self.terms.items()})
        self._require_same_ring(other)
        _check_mul_overflow(self, other)
        return Polynomial(self.ring, kernel.mul_terms(self.terms, other.terms, self.ring.p))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise FrobforgeError("negative polynomial power")
        if n == 0:
            return self.ring.one
        p = self.ring.p
        # q = p^e powers are the termwise Frobenius map; this fast path is
        # checked against repeated squaring in the test suite.
        q, e = n, 0
        while q > 1 and q % p == 0:
            q //= p
            e += 1
        if q == 1 and e > 0:
            _check_pow_overflow(self, n)
            return Polynomial(self.ring, kernel.termwise_power(self.terms, n, p))
        result = self.ring.one
        base = self
        m = n
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    # -- ordering ------------------------------------------------------------

    def leading_term(self, order: MonomialOrder | None = None):
        """(monomial, coefficient) maximal under the order (ring's by default)."""
        if not self.terms:
            raise ZeroPolynomialError("leading term of 0")
        order = order or self.ring.order
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def leading_monomial(self, order=None):
        return self.leading_term(order)[0]

    def leading_coefficient(self, order=None):
        return self.leading_term(order)[1]

    def sorted_terms(self, order: MonomialOrder | None = None):
        order = order or self.ring.order
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def monic(self, order=None) -> "Polynomial":
        if self.is_zero():
            return self
        c = self.leading_coefficient(order)
        return self * self.ring.field.inv(c)

    # -- misc ----------------------------------------------------------------

    def coefficient(self, exp) -> int:
        return self.terms.get(tuple(exp), 0)

    def substitute(self, images: list["Polynomial"]) -> "Polynomial":
        """Evaluate at x_i -> images[i]; images live in a common ring."""
        target = images[0].ring
        out = target.zero
        for e, c in self.terms.items():
            t = target.const(c)
            for i, a in enumerate(e):
                if a:
                    t = t * images[i] ** a
            out = out + t
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == self.ring.const(other).terms
        return (
            isinstance(other, Polynomial)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, a in zip(self.ring.vars, e):
                if a == 1:
                    factors.append(name)
                elif a > 1:
                    factors.append(f"{name}^{a}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return str(self)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9']*)|(?P<op>[-+*^()]))"
)


class PolyParseError(FrobforgeError):
    def __init__(self, message, pos):
        self.pos = pos
        super().__init__(f"{message} (at offset {pos})")


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise PolyParseError(f"unexpected character {text[pos]!r}", pos)
            break
        if m.group("int") is not None:
            out.append(("int", int(m.group("int")), pos))
        elif m.group("name") is not None:
            out.append(("name", m.group("name"), pos))
        else:
            out.append(("op", m.group("op"), pos))
        pos = m.end()
    return out


def _parse_poly(ring: Ring, text: str) -> Polynomial:
    """Recursive-descent parser for +, -, *, ^, integers, variables, parens."""
    tokens = _tokenize(text)
    idx = 0

    def peek():
        return tokens[idx] if idx < len(tokens) else ("end", None, len(text))

    def expr():
        nonlocal idx
        kind, val, pos = peek()
        sign = 1
        while kind == "op" and val in "+-":
            if val == "-":
                sign = -sign
            idx += 1
            kind, val, pos = peek()
        result = term() * sign
        while True:
            kind, val, pos = peek()
            if kind == "op" and val in "+-":
                idx += 1
                rhs = term()
                result = result + rhs if val == "+" else result - rhs
            else:
                return result

    def term():
        nonlocal idx
        result = factor()
        while True:
            kind, val, pos = peek()
            if kind == "op" and val == "*":
                idx += 1
                result = result * factor()
            elif kind in ("name", "int") or (kind == "op" and val == "("):
                # implicit multiplication: 3x, x y
                result = result * factor()
            else:
                return result

    def factor():
        nonlocal idx
        base = atom()
        kind, val, pos = peek()
        if kind == "op" and val == "^":
            idx += 1
            kind, val, pos = peek()
            if kind != "int":
                raise PolyParseError("exponent must be a non-negative integer", pos)
            idx += 1
            return base**val
        return base

    def atom():
        nonlocal idx
        kind, val, pos = peek()
        if kind == "int":
            idx += 1
            return ring.const(val)
        if kind == "name":
            if val not in ring.vars:
                raise PolyParseError(f"unknown variable {val!r}", pos)
            idx += 1
            return ring.var(val)
        if kind == "op" and val == "(":
            idx += 1
            inner = expr()
            kind, val, pos = peek()
            if not (kind == "op" and val == ")"):
                raise PolyParseError("expected ')'", pos)
            idx += 1
            return inner
        if kind == "op" and val == "-":
            idx += 1
            return -atom()
        raise PolyParseError("expected a term", pos)

    result = expr()
    if idx != len(tokens):
        raise PolyParseError("trailing input", tokens[idx][2])
    return result


# ---------------------------------------------------------------------------
# Monomial helpers (exponent tuples)
# ---------------------------------------------------------------------------


def mono_mul(a, b):
    out = tuple(x + y for x, y in zip(a, b))
    for e in out:
        if e > EXP_LIMIT:
            raise ExponentOverflow(f"exponent {e} exceeds limit")
    return out


def mono_divides(a, b):
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b, a):
    """Exponent of x^b / x^a (caller guarantees divisibility)."""
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


def _check_mul_overflow(f: Polynomial, g: Polynomial):
    mf = max((max(e) for e in f.terms), default=0)
    mg = max((max(e) for e in g.terms), default=0)
    if mf + mg > EXP_LIMIT:
        raise ExponentOverflow(f"product exponent {mf + mg} exceeds limit")


def _check_pow_overflow(f: Polynomial, n: int):
    mf = max((max(e) for e in f.terms), default=0)
    if mf * n > EXP_LIMIT:
        raise ExponentOverflow(f"power exponent {mf * n} exceeds limit")


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, degree: int):
    """All exponent tuples of the given total degree, lexicographic order."""
    if nvars == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)
