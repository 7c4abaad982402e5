"""Exact sparse multivariate polynomials over the rationals.

Polynomials are immutable maps from exponent tuples to nonzero rational
coefficients.  Coefficients are ``gmpy2.mpq`` when gmpy2 is importable and
``fractions.Fraction`` otherwise; both are always in lowest terms.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Sequence, Tuple

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as QQ

from .errors import InputError

Exponent = Tuple[int, ...]

LESS, EQUAL, GREATER = -1, 0, 1


def to_rational(value) -> "QQ":
    if isinstance(value, str):
        num, _, den = value.partition("/")
        return QQ(int(num), int(den)) if den else QQ(int(num))
    return QQ(value)


class MonomialOrder:
    """A monomial order given by a sort key; larger key means larger monomial.

    ``kind`` is one of ``"degrevlex"``, ``"negdegrevlex"`` (local), ``"lex"``
    or ``"block"``.  Block orders compare the first ``split`` exponents with
    ``inner[0]`` and break ties on the rest with ``inner[1]``.
    """

    __slots__ = ("kind", "split", "inner", "_key")

    def __init__(self, kind: str, split: int = 0, inner: Tuple["MonomialOrder", ...] = ()):
        self.kind = kind
        self.split = split
        self.inner = inner
        if kind == "degrevlex":
            self._key = _degrevlex_key
        elif kind == "negdegrevlex":
            self._key = _negdegrevlex_key
        elif kind == "lex":
            self._key = tuple
        elif kind == "block":
            k1, k2 = inner[0].key, inner[1].key

            def key(e, _s=split):
                return (k1(e[:_s]), k2(e[_s:]))

            self._key = key
        else:
            raise ValueError(f"unknown monomial order {kind!r}")

    @classmethod
    def degrevlex(cls) -> "MonomialOrder":
        return cls("degrevlex")

    @classmethod
    def negdegrevlex(cls) -> "MonomialOrder":
        return cls("negdegrevlex")

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls("lex")

    @classmethod
    def block(cls, split: int, first: "MonomialOrder" = None,
              second: "MonomialOrder" = None) -> "MonomialOrder":
        return cls("block", split, (first or cls.degrevlex(), second or cls.degrevlex()))

    @property
    def is_local(self) -> bool:
        if self.kind == "block":
            return all(o.is_local for o in self.inner)
        return self.kind == "negdegrevlex"

    @property
    def is_global(self) -> bool:
        if self.kind == "block":
            return all(o.is_global for o in self.inner)
        return self.kind != "negdegrevlex"

    def key(self, e: Exponent):
        return self._key(e)

    def compare(self, a: Exponent, b: Exponent) -> int:
        if a == b:
            return EQUAL
        return GREATER if self._key(a) > self._key(b) else LESS

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and self.kind == other.kind
                and self.split == other.split and self.inner == other.inner)

    def __hash__(self):
        return hash((self.kind, self.split, self.inner))

    def __repr__(self):
        if self.kind == "block":
            return f"MonomialOrder.block({self.split}, {self.inner[0]!r}, {self.inner[1]!r})"
        return f"MonomialOrder.{self.kind}()"


@lru_cache(maxsize=None)
def _degrevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


@lru_cache(maxsize=None)
def _negdegrevlex_key(e):
    return (-sum(e), tuple(-x for x in reversed(e)))


def compare_monomials(order: MonomialOrder, a: Exponent, b: Exponent) -> int:
    """Return ``LESS``, ``EQUAL`` or ``GREATER`` comparing ``a`` with ``b``."""
    return order.compare(tuple(a), tuple(b))


class PolynomialRing:
    """Rational polynomial ring on named variables with a monomial order."""

    __slots__ = ("variables", "order", "_index")

    def __init__(self, variables: Sequence[str], order: MonomialOrder = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise InputError(f"duplicate variable names in {variables}")
        for v in variables:
            if not _NAME.fullmatch(v):
                raise InputError(f"invalid variable name {v!r}")
        self.variables = variables
        self.order = order or MonomialOrder.degrevlex()
        self._index = {v: i for i, v in enumerate(variables)}

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, var: str) -> int:
        try:
            return self._index[var]
        except KeyError:
            raise InputError(f"unknown variable {var!r}") from None

    def with_order(self, order: MonomialOrder) -> "PolynomialRing":
        return PolynomialRing(self.variables, order)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = to_rational(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def gen(self, var: str) -> "Polynomial":
        e = [0] * self.nvars
        e[self.index(var)] = 1
        return Polynomial(self, {tuple(e): QQ(1)})

    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.gen(v) for v in self.variables)

    def monomial(self, e: Exponent, c=1) -> "Polynomial":
        return Polynomial(self, {tuple(e): to_rational(c)})

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def __eq__(self, other):
        return (isinstance(other, PolynomialRing) and self.variables == other.variables
                and self.order == other.order)

    def __hash__(self):
        return hash((self.variables, self.order))

    def __repr__(self):
        return f"PolynomialRing({list(self.variables)!r}, {self.order!r})"


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponents to coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolynomialRing, terms: Mapping[Exponent, object]):
        self.ring = ring
        self.terms: Dict[Exponent, QQ] = {e: c for e, c in terms.items() if c}
        self._hash = None

    # -- construction helpers
    def _new(self, terms):
        p = Polynomial.__new__(Polynomial)
        p.ring = self.ring
        p.terms = terms
        p._hash = None
        return p

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring.variables != self.ring.variables:
                raise ValueError("polynomials from different rings")
            return other
        return self.ring.constant(other)

    # -- predicates and accessors
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, QQ(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def order_at_origin(self) -> int:
        """Lowest total degree of a term (the multiplicity at 0)."""
        return min((sum(e) for e in self.terms), default=-1)

    def variables_used(self) -> Tuple[str, ...]:
        used = set()
        for e in self.terms:
            used.update(i for i, x in enumerate(e) if x)
        return tuple(self.ring.variables[i] for i in sorted(used))

    def leading_monomial(self, order: MonomialOrder = None) -> Exponent:
        order = order or self.ring.order
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = None):
        return self.terms[self.leading_monomial(order)]

    # -- arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                c = to_rational(other)
            except (TypeError, ValueError):
                return NotImplemented
            if not c:
                return self._new({})
            return self._new({e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        out: Dict[Exponent, QQ] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return self._new(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = to_rational(other)
        if not c:
            raise ZeroDivisionError("polynomial division by zero")
        return self * (1 / c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a natural number")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring.variables == other.ring.variables and self.terms == other.terms
        try:
            return self.terms == self.ring.constant(other).terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- calculus and substitution
    def derivative(self, var: str) -> "Polynomial":
        i = self.ring.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return self._new(out)

    def substitute(self, values: Mapping[str, object], ring: PolynomialRing = None) -> "Polynomial":
        """Substitute polynomials or numbers for variables.

        Unmapped variables are kept and must exist in the target ``ring``
        (default: this polynomial's ring).
        """
        target = ring or self.ring
        images = []
        for v in self.ring.variables:
            if v in values:
                val = values[v]
                if isinstance(val, Polynomial):
                    if val.ring.variables != target.variables:
                        val = val.change_ring(target)
                    images.append(val)
                else:
                    images.append(target.constant(val))
            else:
                images.append(target.gen(v))
        powers = [dict() for _ in images]
        result = target.zero()
        for e, c in self.terms.items():
            term = target.constant(c)
            for i, k in enumerate(e):
                if k:
                    p = powers[i].get(k)
                    if p is None:
                        p = powers[i][k] = images[i] ** k
                    term = term * p
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, object]) -> "Polynomial":
        return self.substitute(values)

    def change_ring(self, ring: PolynomialRing) -> "Polynomial":
        """Re-embed into ``ring`` by variable name (missing names must be unused)."""
        idx = []
        for i, v in enumerate(self.ring.variables):
            idx.append(ring._index.get(v))
        out = {}
        for e, c in self.terms.items():
            f = [0] * ring.nvars
            for i, k in enumerate(e):
                if k:
                    if idx[i] is None:
                        raise InputError(f"variable {self.ring.variables[i]!r} not in target ring")
                    f[idx[i]] = k
            out[tuple(f)] = c
        p = Polynomial.__new__(Polynomial)
        p.ring = ring
        p.terms = out
        p._hash = None
        return p

    # -- printing
    def sorted_terms(self, order: MonomialOrder = None):
        order = order or self.ring.order
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.ring.variables, e) if k
            )
            neg = c < 0
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{_fmt(a)}*{mono}"
            else:
                body = _fmt(a)
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def _fmt(c) -> str:
    s = str(c)
    return s if "/" not in s else f"({s})"


def partial_derivative(p: Polynomial, var: str) -> Polynomial:
    return p.derivative(var)


# ---------------------------------------------------------------- parsing

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


class _Parser:
    def __init__(self, text: str, ring: PolynomialRing):
        self.text = text
        self.ring = ring
        self.tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                raise InputError(f"syntax error at position {pos}: unexpected {text[pos]!r}")
            start = m.start(m.lastindex)
            self.tokens.append((m.lastindex, m.group(m.lastindex), start))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, msg):
        raise InputError(f"syntax error at position {self.peek()[2]}: {msg}")

    def parse(self) -> Polynomial:
        if not self.tokens:
            self.error("empty expression")
        p = self.expr()
        if self.i != len(self.tokens):
            self.error(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant() or q.is_zero():
                    self.error("division only by nonzero numeric constants")
                p = p / q.constant_term()
        return p

    def unary(self):
        if self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            p = self.unary()
            return -p if op == "-" else p
        return self.power()

    def power(self):
        p = self.primary()
        if self.peek()[1] in ("^", "**"):
            self.take()
            kind, val, pos = self.take()
            if kind != 1:
                raise InputError(f"syntax error at position {pos}: exponent must be a natural number")
            p = p ** int(val)
        return p

    def primary(self):
        kind, val, pos = self.take()
        if kind == 1:
            return self.ring.constant(int(val))
        if kind == 2:
            if val not in self.ring._index:
                raise InputError(f"unknown variable {val!r} at position {pos}")
            return self.ring.gen(val)
        if val == "(":
            p = self.expr()
            if self.take()[1] != ")":
                raise InputError(f"syntax error at position {pos}: unbalanced parenthesis")
            return p
        if val is None:
            raise InputError(f"syntax error at position {pos}: unexpected end of input")
        raise InputError(f"syntax error at position {pos}: unexpected {val!r}")


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
    """Parse ``text`` (integers, ring variables, ``+ - * / ^ ( )``) into ``ring``."""
    return _Parser(str(text), ring).parse()


def det(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant by cofactor expansion with memoised column subsets."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    ring = matrix[0][0].ring
    memo = {}

    def minor(row: int, cols: Tuple[int, ...]) -> Polynomial:
        if row == n:
            return ring.one()
        got = memo.get(cols)
        if got is not None:
            return got
        total = ring.zero()
        sign = 1
        for j, c in enumerate(cols):
            a = matrix[row][c]
            if a:
                sub = minor(row + 1, cols[:j] + cols[j + 1:])
                if sub:
                    total = total + a * sub if sign > 0 else total - a * sub
            sign = -sign
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


def minors(matrix: Sequence[Sequence[Polynomial]], k: int,
           row_sets: Iterable[Tuple[int, ...]] = None) -> list:
    """All ``k``x``k`` minors in row-major order of (row set, column set)."""
    from itertools import combinations

    nr, nc = len(matrix), len(matrix[0])
    rows = list(row_sets) if row_sets is not None else list(combinations(range(nr), k))
    out = []
    for rs in rows:
        for cs in combinations(range(nc), k):
            out.append(det([[matrix[r][c] for c in cs] for r in rs]))
    return out
