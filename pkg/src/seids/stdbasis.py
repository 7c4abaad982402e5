"""Gröbner bases, Mora standard bases, and the primitives built on them.

Ideals are handled as rank-1 submodules: every element is a dict mapping a
*term* (exponent tuple plus trailing component index) to a coefficient.
Global orders use Buchberger's algorithm with the Gebauer-Möller criteria
and the sugar selection strategy; local orders use Mora's tangent-cone
normal form with écart-driven reducer choice.  When a Mora reduction runs
away (long power-series tails on positive-dimensional germs) the basis is
recomputed by Lazard's method: a global Gröbner basis of the homogenised
input under an order whose dehomogenisation is the local order.
"""

from __future__ import annotations

import math
from itertools import combinations, combinations_with_replacement
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from . import kernels as K
from .errors import BudgetExceeded, ComputationError, InputError, NotMPrimary
from .poly import QQ, MonomialOrder, Polynomial, PolynomialRing

try:
    from gmpy2 import gcd as _gcd, lcm as _lcm
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from math import gcd as _gcd, lcm as _lcm

DEFAULT_BUDGET = 10 ** 6
INFINITE = math.inf

_budget = [DEFAULT_BUDGET]

# a single Mora normal form counts as stalled past this many reduction steps
# or coefficient bits; the desk-scale workloads stay below 100 and 300
MORA_STALL_STEPS = 1000
MORA_STALL_BITS = 2048


class _MoraStall(Exception):
    pass


def set_default_budget(n: int) -> None:
    """Set the S-pair cap used when a call does not pass ``budget``."""
    _budget[0] = int(n)


def get_default_budget() -> int:
    return _budget[0]


class BudgetMeter:
    """Counts S-pairs across every standard basis computed inside a ``with`` block.

    With a ``limit`` the total is capped and :class:`BudgetExceeded` is raised
    once it is passed.  Meters nest; every active meter is charged.
    """

    _active: List["BudgetMeter"] = []

    def __init__(self, limit: Optional[int] = None):
        self.limit = limit
        self.used = 0

    def __enter__(self) -> "BudgetMeter":
        BudgetMeter._active.append(self)
        return self

    def __exit__(self, *exc) -> None:
        BudgetMeter._active.remove(self)

    @classmethod
    def charge(cls) -> None:
        for m in cls._active:
            m.used += 1
            if m.limit is not None and m.used > m.limit:
                raise BudgetExceeded(f"run exceeded the budget of {m.limit} S-pairs")


# ------------------------------------------------------------------ values

class Ideal:
    """Ideal of a polynomial ring given by generators (zeros dropped)."""

    __slots__ = ("ring", "generators")

    def __init__(self, generators: Iterable[Polynomial], ring: PolynomialRing = None):
        gens = [g for g in generators if not g.is_zero()]
        if ring is None:
            if not gens:
                raise ValueError("ring required for the zero ideal")
            ring = gens[0].ring
        for g in gens:
            if g.ring.variables != ring.variables:
                raise ValueError("generators from different rings")
        self.ring = ring
        self.generators = tuple(gens)

    @classmethod
    def parse(cls, texts: Sequence[str], ring: PolynomialRing) -> "Ideal":
        return cls([ring.parse(t) for t in texts], ring)

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.generators + other.generators, self.ring)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal([a * b for a in self.generators for b in other.generators], self.ring)

    def power(self, k: int) -> "Ideal":
        if k == 0:
            return Ideal([self.ring.one()], self.ring)
        gens = []
        seen = set()
        for combo in combinations_with_replacement(range(len(self.generators)), k):
            p = self.ring.one()
            for i in combo:
                p = p * self.generators[i]
            if p not in seen:
                seen.add(p)
                gens.append(p)
        return Ideal(gens, self.ring)

    def substitute(self, values, ring: PolynomialRing) -> "Ideal":
        return Ideal([g.substitute(values, ring) for g in self.generators], ring)

    def change_ring(self, ring: PolynomialRing) -> "Ideal":
        return Ideal([g.change_ring(ring) for g in self.generators], ring)

    def is_zero(self) -> bool:
        return not self.generators

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self):
        return f"Ideal([{', '.join(str(g) for g in self.generators)}])"


class FreeModuleElement:
    """Vector of polynomials, an element of a free module of rank ``len``."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[Polynomial]):
        if not components:
            raise ValueError("free module rank must be at least 1")
        ring = components[0].ring
        for c in components:
            if c.ring.variables != ring.variables:
                raise ValueError("components from different rings")
        self.components = tuple(components)

    @property
    def ring(self) -> PolynomialRing:
        return self.components[0].ring

    @property
    def rank(self) -> int:
        return len(self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __mul__(self, f):
        return FreeModuleElement([f * c for c in self.components])

    __rmul__ = __mul__

    def __add__(self, other):
        return FreeModuleElement([a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        return FreeModuleElement([a - b for a, b in zip(self.components, other.components)])

    def __eq__(self, other):
        return isinstance(other, FreeModuleElement) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "[" + ", ".join(str(c) for c in self.components) + "]"


class Submodule:
    """Submodule of R^p, optionally of (R/base)^p when ``base_ideal`` is set."""

    __slots__ = ("ring", "ambient_rank", "generators", "base_ideal")

    def __init__(self, generators: Iterable[FreeModuleElement], ambient_rank: int,
                 ring: PolynomialRing, base_ideal: Optional[Ideal] = None):
        gens = []
        for g in generators:
            if g.rank != ambient_rank:
                raise ValueError(f"generator of length {g.rank}, expected {ambient_rank}")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.ambient_rank = ambient_rank
        self.generators = tuple(gens)
        self.base_ideal = base_ideal

    def with_base(self, base: Optional[Ideal]) -> "Submodule":
        return Submodule(self.generators, self.ambient_rank, self.ring, base)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"Submodule(rank={self.ambient_rank}, {list(self.generators)!r})"


# -------------------------------------------------------- term conversions

def _poly_terms(p: Polynomial, comp: int = 0) -> dict:
    return {e + (comp,): c for e, c in p.terms.items()}


def _vector_terms(v: FreeModuleElement) -> dict:
    out = {}
    for i, c in enumerate(v.components):
        for e, a in c.terms.items():
            out[e + (i,)] = a
    return out


def _module_input(M) -> Tuple[List[dict], int, PolynomialRing]:
    if isinstance(M, Ideal):
        return [_poly_terms(g) for g in M.generators], 1, M.ring
    if isinstance(M, Submodule):
        polys = [_vector_terms(g) for g in M.generators]
        if M.base_ideal is not None:
            for b in M.base_ideal.generators:
                for i in range(M.ambient_rank):
                    polys.append(_poly_terms(b, i))
        return polys, M.ambient_rank, M.ring
    raise TypeError(f"expected Ideal or Submodule, got {type(M).__name__}")


def _element_terms(f, rank: int) -> dict:
    if isinstance(f, Polynomial):
        if rank != 1:
            raise ValueError("polynomial given for a module of rank > 1")
        return _poly_terms(f)
    return _vector_terms(f)


def _from_terms(h: dict, rank: int, ring: PolynomialRing):
    if rank == 1:
        p = Polynomial.__new__(Polynomial)
        p.ring, p.terms, p._hash = ring, {t[:-1]: c for t, c in h.items()}, None
        return p
    comps = [dict() for _ in range(rank)]
    for t, c in h.items():
        comps[t[-1]][t[:-1]] = c
    return FreeModuleElement([Polynomial(ring, d) for d in comps])


def _primitive(h: dict):
    """Scale ``h`` in place to coprime integer coefficients; return the factor."""
    den = 1
    for v in h.values():
        den = _lcm(den, v.denominator)
    num = 0
    for v in h.values():
        num = _gcd(num, v.numerator * (den // v.denominator))
        if num == 1:
            break
    if den == 1 and num == 1:
        return QQ(1)
    f = QQ(den) / QQ(num)
    for k in h:
        h[k] *= f
    return f


def _cofactors(ch, cg):
    """(a, b) with a·ch = b·cg for integral leading coefficients."""
    if cg == 1:
        return QQ(1), ch
    if cg == -1:
        return QQ(1), -ch
    d = _gcd(ch.numerator, cg.numerator)
    return QQ(cg.numerator // d), QQ(ch.numerator // d)


def _scale(h: dict, a) -> None:
    for k in h:
        h[k] *= a


class _KeyCache(dict):
    """Term -> order key, memoised; module terms compare term-over-position."""

    def __init__(self, order: MonomialOrder, module_order: str):
        super().__init__()
        self.mono_key = order.key
        self.pot = module_order == "POT"

    def __missing__(self, t):
        mk = self.mono_key(t[:-1])
        v = self[t] = (-t[-1], mk) if self.pot else (mk, -t[-1])
        return v


# ------------------------------------------------------------- the engine

class _Engine:
    __slots__ = ("key", "local", "rank1", "budget", "polys", "lts", "ecarts",
                 "sugars", "active", "pairs", "spairs", "unit", "scale",
                 "corner", "truncate")

    def __init__(self, keycache: _KeyCache, local: bool, rank1: bool, budget: int,
                 truncate: bool = False):
        self.key = keycache.__getitem__
        self.local = local
        self.rank1 = rank1
        self.budget = budget
        self.polys: List[dict] = []
        self.lts: List[tuple] = []
        self.ecarts: List[int] = []
        self.sugars: List[int] = []
        self.active: List[int] = []
        self.pairs: List[tuple] = []
        self.spairs = 0
        self.unit = False
        self.scale = QQ(1)
        # degree D with m^D inside the ideal, once the leading ideal shows it
        self.corner = None
        self.truncate = truncate and local and rank1

    # -- reductions
    def lead(self, h: dict):
        return max(h, key=self.key)

    def reduce_global(self, h: dict, full: bool = True, rem: dict = None) -> dict:
        """Fraction-free normal form of ``h`` (consumed) modulo the active set.

        The result is ``self.scale`` times the true remainder.
        """
        polys, lts, active = self.polys, self.lts, self.active
        key = self.key
        divides, term_div, axpy = K.divides, K.term_div, K.axpy
        if rem is None:
            rem = {}
            scale = _primitive(h) if h else QQ(1)
        else:
            scale = QQ(1)
        steps = 0
        while h:
            lt = max(h, key=key)
            for i in active:
                glt = lts[i]
                if divides(glt, lt):
                    g = polys[i]
                    a, b = _cofactors(h[lt], g[glt])
                    if a != 1:
                        _scale(h, a)
                        _scale(rem, a)
                        scale *= a
                    axpy(h, b, term_div(lt, glt), g)
                    steps += 1
                    if steps % 16 == 0 and h:
                        both = dict(h)
                        both.update(rem)
                        f = _primitive(both)
                        if f != 1:
                            _scale(h, f)
                            _scale(rem, f)
                            scale *= f
                    break
            else:
                if not full:
                    h.update(rem)
                    rem = h
                    break
                rem[lt] = h.pop(lt)
        if rem:
            scale *= _primitive(rem)
        self.scale = scale
        return rem

    def reduce_mora(self, h: dict) -> dict:
        """Weak normal form of ``h`` by Mora's algorithm (local orders), fraction-free."""
        key = self.key
        divides, term_div, axpy, degree = K.divides, K.term_div, K.axpy, K.degree
        T = [(self.polys[i], self.lts[i], self.ecarts[i]) for i in self.active]
        scale = _primitive(h) if h else QQ(1)
        steps = 0
        corner = self.corner
        while h:
            lt = max(h, key=key)
            if corner is not None and degree(lt) >= corner:
                h = {}
                break
            best = None
            for entry in T:
                if divides(entry[1], lt) and (best is None or entry[2] < best[2]):
                    best = entry
                    if entry[2] == 0:
                        break
            if best is None:
                break
            hdeg = max(map(degree, h))
            he = hdeg - degree(lt)
            if best[2] > he:
                T.append((dict(h), lt, he))
            g, glt, _ = best
            a, b = _cofactors(h[lt], g[glt])
            if a != 1:
                _scale(h, a)
                scale *= a
            axpy(h, b, term_div(lt, glt), g)
            if corner is not None:
                for t in [t for t in h if degree(t) >= corner]:
                    del h[t]
            steps += 1
            if steps % 16 == 0 and h:
                scale *= _primitive(h)
                if steps > MORA_STALL_STEPS or any(
                        v.numerator.bit_length() > MORA_STALL_BITS for v in h.values()):
                    raise _MoraStall()
        if h:
            scale *= _primitive(h)
        self.scale = scale
        return h

    def reduce(self, h: dict) -> dict:
        return self.reduce_mora(h) if self.local else self.reduce_global(h)

    # -- basis maintenance
    def add(self, h: dict, sugar: int) -> None:
        lt = self.lead(h)
        _primitive(h)
        if h[lt] < 0:
            _scale(h, QQ(-1))
        idx = len(self.polys)
        if self.rank1 and K.degree(lt) == 0:
            # a unit generates everything: drop the rest of the computation
            self.polys.append({lt: QQ(1)})
            self.lts.append(lt)
            self.ecarts.append(0)
            self.sugars.append(0)
            self.active = [idx]
            self.pairs = []
            self.unit = True
            return
        self.polys.append(h)
        self.lts.append(lt)
        self.ecarts.append(max(map(K.degree, h)) - K.degree(lt))
        self.sugars.append(sugar)
        self._update(idx)
        if self.truncate:
            self.find_corner()

    def find_corner(self) -> None:
        """Detect m^D ⊆ I from the leading ideal (local degree orders, ideals).

        If every monomial of degree D is a leading monomial then every term of
        degree >= D reduces to zero, so such terms may be dropped.
        """
        leads = [self.lts[i] for i in self.active]
        if not leads:
            return
        nv = len(leads[0]) - 1
        pure = [None] * nv
        for lt in leads:
            support = [k for k in range(nv) if lt[k]]
            if len(support) == 1:
                k = support[0]
                if pure[k] is None or lt[k] < pure[k]:
                    pure[k] = lt[k]
        if any(a is None for a in pure):
            return
        bound = sum(a - 1 for a in pure) + 1
        low = max(1, min(K.degree(lt) for lt in leads))
        for D in range(low, bound):
            if math.comb(D + nv - 1, nv - 1) > 4000:
                break
            ok = True
            for c in combinations_with_replacement(range(nv), D):
                e = [0] * (nv + 1)
                for k in c:
                    e[k] += 1
                e = tuple(e)
                if not any(K.divides(lt, e) for lt in leads):
                    ok = False
                    break
            if ok:
                bound = D
                break
        if self.corner is None or bound < self.corner:
            self.corner = bound
            for i in self.active:
                f = self.polys[i]
                if K.degree(self.lts[i]) < bound:
                    for t in [t for t in f if K.degree(t) >= bound]:
                        del f[t]

    def _update(self, h: int) -> None:
        lts = self.lts
        lth = lts[h]
        divides, term_lcm, coprime = K.divides, K.term_lcm, K.coprime
        rank1 = self.rank1
        C = []
        for g in self.active:
            l = term_lcm(lts[g], lth)
            if l is not None:
                C.append((g, l))
        D = []
        while C:
            g1, l1 = C.pop()
            if (rank1 and coprime(lth, lts[g1])) or not (
                any(divides(l2, l1) for _, l2 in C) or any(divides(l2, l1) for _, l2 in D)
            ):
                D.append((g1, l1))
        kept = []
        for p in self.pairs:
            i, j, l = p[2], p[3], p[4]
            if divides(lth, l) and term_lcm(lts[i], lth) != l and term_lcm(lts[j], lth) != l:
                continue
            kept.append(p)
        for g, l in D:
            if rank1 and coprime(lth, lts[g]):
                continue
            kept.append(self._pair(g, h, l))
        self.pairs = kept
        self.active = [g for g in self.active if not divides(lth, lts[g])] + [h]

    def _pair(self, i: int, j: int, l: tuple) -> tuple:
        deg = K.degree(l)
        sug = max(self.sugars[i] + deg - K.degree(self.lts[i]),
                  self.sugars[j] + deg - K.degree(self.lts[j]))
        return ((sug, deg), self.key(l), i, j, l)

    def _next_pair(self) -> tuple:
        pairs = self.pairs
        best = 0
        if self.local:
            # lowest sugar first, then the largest lcm in the local order
            for k in range(1, len(pairs)):
                a, b = pairs[k], pairs[best]
                if a[0] < b[0] or (a[0] == b[0] and a[1] > b[1]):
                    best = k
        else:
            for k in range(1, len(pairs)):
                a, b = pairs[k], pairs[best]
                if a[0] < b[0] or (a[0] == b[0] and a[1] < b[1]):
                    best = k
        return pairs.pop(best)

    def run(self, gens: List[dict]) -> None:
        for f in sorted(gens, key=lambda f: (max(map(K.degree, f)), len(f))):
            h = self.reduce(dict(f))
            if h:
                self.add(h, max(map(K.degree, f)))
            if self.unit:
                return
        while self.pairs:
            self.spairs += 1
            if BudgetMeter._active:
                BudgetMeter.charge()
            if self.spairs > self.budget:
                raise BudgetExceeded(
                    f"standard basis exceeded the budget of {self.budget} S-pairs")
            (sugar, _), _, i, j, l = self._next_pair()
            f, g = self.polys[i], self.polys[j]
            a, b = _cofactors(f[self.lts[i]], g[self.lts[j]])
            s = K.scaled(f, a, K.term_div(l, self.lts[i]))
            K.axpy(s, b, K.term_div(l, self.lts[j]), g)
            if not s:
                continue
            h = self.reduce(s)
            if h:
                self.add(h, sugar)

    def result(self) -> List[dict]:
        if self.local:
            return [self.polys[i] for i in self.active]
        # reduced Gröbner basis: tail-reduce each active element by the others
        out = []
        act = sorted(self.active, key=lambda i: self.key(self.lts[i]))
        for pos, i in enumerate(act):
            others = act[:pos] + act[pos + 1:]
            saved = self.active
            self.active = others
            f = dict(self.polys[i])
            lt = self.lts[i]
            c = f.pop(lt)
            out.append(self.reduce_global(f, rem={lt: c}))
            self.active = saved
        return out


class StandardBasis:
    """Standard basis of an ideal or submodule under a fixed order.

    For global orders this is the reduced Gröbner basis; for local orders it
    is a Mora standard basis of the localisation at the origin.  When the
    leading ideal contains m^D the elements are stored modulo m^D.
    """

    def __init__(self, elements: List[dict], order: MonomialOrder, rank: int,
                 ring: PolynomialRing, module_order: str = "TOP", spairs: int = 0):
        self._elements = elements
        self.order = order
        self.rank = rank
        self.ring = ring
        self.module_order = module_order
        self.is_local = order.is_local
        self.spairs = spairs
        self._keys = _KeyCache(order, module_order)
        self.leading_terms = [max(e, key=self._keys.__getitem__) for e in elements]

    @property
    def elements(self) -> list:
        return [_from_terms(e, self.rank, self.ring) for e in self._elements]

    def __len__(self):
        return len(self._elements)

    def is_unit(self) -> bool:
        """True iff the basis generates the whole (localised) free module."""
        comps = {t[-1] for t in self.leading_terms if not any(t[:-1])}
        return len(comps) == self.rank

    def leading_monomials(self, component: int = 0) -> List[tuple]:
        return [t[:-1] for t in self.leading_terms if t[-1] == component]

    def _engine(self) -> _Engine:
        eng = _Engine(self._keys, self.is_local, self.rank == 1, DEFAULT_BUDGET,
                      truncate=self.order.kind == "negdegrevlex")
        eng.polys = self._elements
        eng.lts = self.leading_terms
        eng.ecarts = [max(map(K.degree, e)) - K.degree(t)
                      for e, t in zip(self._elements, self.leading_terms)]
        eng.active = list(range(len(self._elements)))
        if eng.truncate:
            eng.find_corner()
        return eng

    def normal_form(self, f):
        """Remainder of ``f``; zero iff ``f`` lies in the (local) span."""
        eng = self._engine()
        try:
            h = eng.reduce(_element_terms(f, self.rank))
        except _MoraStall:
            raise ComputationError("Mora normal form did not settle; use contains()") from None
        if eng.scale != 1:
            inv = 1 / eng.scale
            h = {t: v * inv for t, v in h.items()}
        return _from_terms(h, self.rank, self.ring)

    def contains(self, f) -> bool:
        if isinstance(f, (Polynomial, FreeModuleElement)) and f.is_zero():
            return True
        h = _element_terms(f, self.rank)
        try:
            return not self._engine().reduce(dict(h))
        except _MoraStall:
            # f lies in the span iff adding it leaves the leading module unchanged
            big, _ = _lazard(self._elements + [h], self.rank, self.module_order, _budget[0])
            key = self._keys.__getitem__
            return all(any(K.divides(l, max(g, key=key)) for l in self.leading_terms)
                       for g in big)


def standard_basis(M: Union[Ideal, Submodule], order: MonomialOrder = None,
                   budget: int = None, module_order: str = "TOP") -> StandardBasis:
    """Standard basis of ``M`` for ``order`` (default: the ring's order)."""
    polys, rank, ring = _module_input(M)
    order = order or ring.order
    if not order.is_global and not order.is_local:
        raise InputError("mixed local/global block orders are not supported")
    keys = _KeyCache(order, module_order)
    budget = budget or _budget[0]
    eng = _Engine(keys, order.is_local, rank == 1, budget,
                  truncate=order.kind == "negdegrevlex")
    try:
        eng.run(polys)
    except _MoraStall:
        if order.kind != "negdegrevlex":
            raise ComputationError("Mora normal form did not settle") from None
        elements, spairs = _lazard(polys, rank, module_order, budget - eng.spairs)
        return StandardBasis(elements, order, rank, ring, module_order, eng.spairs + spairs)
    return StandardBasis(eng.result(), order, rank, ring, module_order, eng.spairs)


class _LazardOrder:
    """Order on (h, x) terms: degree, then the power of h, then revlex in x.

    On homogeneous elements the leading term, with h dropped, is the
    negdegrevlex leading term of the dehomogenisation.
    """

    is_local = False

    @staticmethod
    def key(e):
        return (sum(e), e[0], tuple(-v for v in reversed(e[1:])))


def _lazard(polys: List[dict], rank: int, module_order: str, budget: int):
    """Local standard basis (negdegrevlex) of ``polys`` by homogenisation."""
    homog = []
    for f in polys:
        D = max(map(K.degree, f))
        homog.append({(D - K.degree(t),) + t: c for t, c in f.items()})
    eng = _Engine(_KeyCache(_LazardOrder, module_order), False, rank == 1, max(budget, 1))
    eng.run(homog)
    out = []
    for i in eng.active:
        out.append({t[1:]: c for t, c in eng.polys[i].items()})
    return out, eng.spairs


def groebner_basis(I: Ideal, order: MonomialOrder = None, budget: int = None) -> List[Polynomial]:
    order = order or I.ring.order
    if order.is_local:
        raise InputError("groebner_basis needs a global order")
    return standard_basis(I, order, budget).elements


def local_basis(M, budget: int = None, module_order: str = "TOP") -> StandardBasis:
    return standard_basis(M, MonomialOrder.negdegrevlex(), budget, module_order)


def normal_form(f, B: StandardBasis):
    return B.normal_form(f)


# ---------------------------------------------------- leading-term counting

def _independent_dimension(lead: List[tuple], nvars: int) -> int:
    if any(not any(m) for m in lead):
        return -1
    supports = [frozenset(i for i, x in enumerate(m) if x) for m in lead]
    for size in range(nvars, -1, -1):
        for S in combinations(range(nvars), size):
            s = set(S)
            if not any(sup <= s for sup in supports):
                return size
    return 0


def _count_standard_monomials(lead: List[tuple], nvars: int):
    if _independent_dimension(lead, nvars) > 0:
        return INFINITE
    if any(not any(m) for m in lead):
        return 0
    if nvars == 0:
        return 1
    bound = [0] * nvars
    for m in lead:
        nz = [i for i, x in enumerate(m) if x]
        if len(nz) == 1:
            i = nz[0]
            bound[i] = m[i] if not bound[i] else min(bound[i], m[i])

    def standard(e):
        return not any(all(a <= b for a, b in zip(m, e)) for m in lead)

    count = 0
    stack = [(0,) * nvars]
    seen = {stack[0]}
    while stack:
        e = stack.pop()
        count += 1
        for i in range(nvars):
            if e[i] + 1 < bound[i]:
                f = e[:i] + (e[i] + 1,) + e[i + 1:]
                if f not in seen and standard(f):
                    seen.add(f)
                    stack.append(f)
    return count


def colength(M: Union[Ideal, Submodule, StandardBasis], local: bool = True,
             budget: int = None):
    """Dimension of R^p/M at the origin (``local``) or of the affine quotient.

    Returns ``INFINITE`` (``math.inf``) when the quotient is not finite.
    """
    B = M if isinstance(M, StandardBasis) else standard_basis(
        M, MonomialOrder.negdegrevlex() if local else MonomialOrder.degrevlex(), budget)
    total = 0
    n = B.ring.nvars
    for comp in range(B.rank):
        c = _count_standard_monomials(B.leading_monomials(comp), n)
        if c == INFINITE:
            return INFINITE
        total += c
    return total


def dimension(I: Union[Ideal, StandardBasis], local: bool = True, budget: int = None) -> int:
    """Krull dimension of the germ at 0 (``local``) or of the affine variety; -1 if empty."""
    B = I if isinstance(I, StandardBasis) else standard_basis(
        I, MonomialOrder.negdegrevlex() if local else MonomialOrder.degrevlex(), budget)
    return _independent_dimension(B.leading_monomials(0), B.ring.nvars)


def support_at_origin(I: Ideal, budget: int = None) -> bool:
    """True iff the germ of V(I) at 0 is contained in {0}."""
    return colength(I, local=True, budget=budget) != INFINITE


def is_unit_ideal(I: Ideal, local: bool = False, budget: int = None) -> bool:
    if not I.generators:
        return False
    order = MonomialOrder.negdegrevlex() if local else MonomialOrder.degrevlex()
    return standard_basis(I, order, budget).is_unit()


def contains(I: Ideal, f: Polynomial, local: bool = False, budget: int = None) -> bool:
    order = MonomialOrder.negdegrevlex() if local else MonomialOrder.degrevlex()
    return standard_basis(I, order, budget).contains(f)


def ideal_contains(I: Ideal, J: Ideal, local: bool = False, budget: int = None) -> bool:
    """True iff J ⊆ I (globally, or in the local ring at 0)."""
    if not J.generators:
        return True
    if not I.generators:
        return False
    order = MonomialOrder.negdegrevlex() if local else MonomialOrder.degrevlex()
    B = standard_basis(I, order, budget)
    return all(B.contains(g) for g in J.generators)


def ideals_equal(I: Ideal, J: Ideal, local: bool = False, budget: int = None) -> bool:
    return ideal_contains(I, J, local, budget) and ideal_contains(J, I, local, budget)


# ------------------------------------------------- elimination & quotients

def _aux_ring(ring: PolynomialRing, names: Sequence[str]) -> PolynomialRing:
    taken = set(ring.variables)
    fresh = []
    for n in names:
        base, k = n, 0
        while n in taken:
            k += 1
            n = f"{base}{k}"
        taken.add(n)
        fresh.append(n)
    return PolynomialRing(tuple(fresh) + ring.variables,
                          MonomialOrder.block(len(fresh)))


def eliminate(I: Ideal, variables: Sequence[str], budget: int = None) -> Ideal:
    """I ∩ Q[remaining variables], returned in I's ring."""
    ring = I.ring
    variables = list(dict.fromkeys(variables))
    for v in variables:
        ring.index(v)
    if not variables:
        return I
    rest = [v for v in ring.variables if v not in variables]
    big = PolynomialRing(tuple(variables) + tuple(rest), MonomialOrder.block(len(variables)))
    gb = standard_basis(I.change_ring(big), big.order, budget).elements
    k = len(variables)
    keep = [g for g in gb if all(not any(e[:k]) for e in g.terms)]
    return Ideal([g.change_ring(ring) for g in keep], ring)


def intersect(I: Ideal, J: Ideal, budget: int = None) -> Ideal:
    """I ∩ J via elimination of an auxiliary variable u from u·I + (1-u)·J."""
    if not I.generators or not J.generators:
        return Ideal([], I.ring)
    big = _aux_ring(I.ring, ["u_"])
    u = big.gen(big.variables[0])
    gens = [u * g.change_ring(big) for g in I.generators]
    gens += [(1 - u) * g.change_ring(big) for g in J.generators]
    return eliminate(Ideal(gens, big), [big.variables[0]], budget).change_ring(I.ring)


def saturation_by_element(I: Ideal, g: Polynomial, budget: int = None) -> Ideal:
    """I : g^∞ as the elimination of u from I + (1 - u·g)."""
    if g.is_zero():
        return Ideal([I.ring.one()], I.ring)
    if g.is_constant():
        return I
    big = _aux_ring(I.ring, ["w_"])
    w = big.gen(big.variables[0])
    gens = [f.change_ring(big) for f in I.generators] + [1 - w * g.change_ring(big)]
    return eliminate(Ideal(gens, big), [big.variables[0]], budget).change_ring(I.ring)


def quotient_by_element(I: Ideal, g: Polynomial, budget: int = None) -> Ideal:
    """I : g = (I ∩ (g)) / g."""
    if g.is_zero():
        return Ideal([I.ring.one()], I.ring)
    inter = intersect(I, Ideal([g], I.ring), budget)
    return Ideal([_exact_divide(f, g) for f in inter.generators], I.ring)


def ideal_quotient(I: Ideal, J: Ideal, budget: int = None) -> Ideal:
    """I : J = ∩_j (I : g_j)."""
    if not J.generators:
        return Ideal([I.ring.one()], I.ring)
    result = None
    for g in J.generators:
        q = quotient_by_element(I, g, budget)
        result = q if result is None else intersect(result, q, budget)
    return result


def saturation(I: Ideal, J: Ideal, budget: int = None) -> Ideal:
    """I : J^∞ = ∩_j (I : g_j^∞), each principal saturation by the Rabinowitsch trick."""
    if not J.generators:
        return Ideal([I.ring.one()], I.ring)
    if not I.generators:
        return I
    if any(g.is_constant() for g in J.generators):
        return I
    result = None
    for g in J.generators:
        s = saturation_by_element(I, g, budget)
        if is_unit_ideal(s):
            continue
        result = s if result is None else intersect(result, s, budget)
    if result is None:
        return Ideal([I.ring.one()], I.ring)
    return Ideal(groebner_basis(result, budget=budget), I.ring)


def _exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact polynomial division f / g (raises if not exact)."""
    order = MonomialOrder.degrevlex()
    ring = f.ring
    q = {}
    r = dict(f.terms)
    glt = max(g.terms, key=order.key)
    gc = g.terms[glt]
    while r:
        lt = max(r, key=order.key)
        if not all(a >= b for a, b in zip(lt, glt)):
            raise ArithmeticError("inexact polynomial division")
        m = tuple(a - b for a, b in zip(lt, glt))
        c = r[lt] / gc
        q[m] = c
        for e, v in g.terms.items():
            k = tuple(a + b for a, b in zip(e, m))
            nv = r.get(k, 0) - c * v
            if nv:
                r[k] = nv
            else:
                r.pop(k, None)
    return Polynomial(ring, q)


def module_quotient(M: Submodule, v: FreeModuleElement, local: bool = True,
                    budget: int = None) -> Ideal:
    """The ideal M : v = {f : f·v ∈ M} (M taken modulo its base ideal).

    Uses one extra free-module component and a position-over-term order in
    which that component is the smallest, so elements living purely in it
    form the quotient.
    """
    ring = M.ring
    p = M.ambient_rank
    zero = ring.zero()
    gens = [FreeModuleElement(list(g.components) + [zero]) for g in M.generators]
    if M.base_ideal is not None:
        for b in M.base_ideal.generators:
            for i in range(p):
                comps = [zero] * (p + 1)
                comps[i] = b
                gens.append(FreeModuleElement(comps))
    gens.append(FreeModuleElement(list(v.components) + [ring.one()]))
    big = Submodule(gens, p + 1, ring)
    order = MonomialOrder.negdegrevlex() if local else MonomialOrder.degrevlex()
    B = standard_basis(big, order, budget, module_order="POT")
    out = []
    for e, t in zip(B._elements, B.leading_terms):
        if t[-1] == p:
            out.append(Polynomial(ring, {k[:-1]: c for k, c in e.items()}))
    return Ideal(out, ring)


# -------------------------------------------------------- Hilbert–Samuel

def hilbert_samuel_multiplicity(I: Ideal, base: Optional[Ideal] = None,
                                max_start: int = 6, budget: int = None) -> int:
    """Multiplicity e(I) of an m-primary ideal of R/base at the origin.

    Colengths ℓ(R/(I^k + base)) are computed for consecutive k, a polynomial
    of degree dim(R/base) is fitted through dim + 3 of them and checked on
    two further points; the window slides forward until the fit verifies.
    """
    ring = I.ring
    base = base or Ideal([], ring)
    if colength(I + base, local=True, budget=budget) == INFINITE:
        raise NotMPrimary("ideal is not primary to the maximal ideal at the origin")
    d = dimension(base, local=True, budget=budget) if base.generators else ring.nvars
    if d < 0:
        return 0
    cache = {}

    def ell(k):
        if k not in cache:
            cache[k] = colength(I.power(k) + base, local=True, budget=budget)
        return cache[k]

    npts = d + 3
    for start in range(1, max_start + 1):
        ks = list(range(start, start + npts))
        coeffs = _fit_polynomial(ks, [ell(k) for k in ks], d)
        if coeffs is None:
            continue
        if all(_eval_poly(coeffs, k) == ell(k) for k in (start + npts, start + npts + 1)):
            e = coeffs[d] * math.factorial(d)
            if e.denominator != 1 or e < 0:
                continue
            return int(e)
    raise NotMPrimary("Hilbert–Samuel function did not stabilise within the search window")


def _fit_polynomial(xs, ys, deg):
    """Least-degree exact fit through the points; None if degree > ``deg`` needed."""
    from fractions import Fraction

    n = len(xs)
    # Newton divided differences
    table = [Fraction(int(y)) for y in ys]
    coef = [table[0]]
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(len(table) - 1)]
        coef.append(table[0])
    if any(c != 0 for c in coef[deg + 1:]):
        return None
    # expand Newton form into monomial coefficients
    poly = [Fraction(0)] * (deg + 1)
    basis = [Fraction(1)]
    for j in range(deg + 1):
        for i, b in enumerate(basis):
            poly[i] += coef[j] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i + 1] += b
            nxt[i] -= xs[j] * b
        basis = nxt
    return poly


def _eval_poly(coeffs, x):
    return sum(c * x ** i for i, c in enumerate(coeffs))
