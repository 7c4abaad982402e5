"""Symmetric rank strata S_0 ⊂ ... ⊂ S_n and their pullbacks X = F⁻¹(S_r)."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .errors import InputError
from .poly import Polynomial, PolynomialRing, minors as _minors
from .stdbasis import (INFINITE, Ideal, colength, dimension, saturation_by_element,
                       support_at_origin)

Matrix = Tuple[Tuple[Polynomial, ...], ...]


def stratum_codim(n: int, i: int) -> int:
    """Codimension of S_i (rank <= i) in the symmetric n x n matrices."""
    if not 0 <= i <= n:
        raise InputError(f"rank {i} out of range for n={n}")
    return (n - i) * (n - i + 1) // 2


def is_isolated_singularity(n: int, r: int, q: int) -> bool:
    """Whether a SEIDS F⁻¹(S_r) ⊂ C^q has an isolated singular point."""
    _check_rank(n, r)
    return q <= (n - r + 1) * (n - r + 2) // 2


def has_smoothing(n: int, r: int, q: int) -> bool:
    _check_rank(n, r)
    return q < (n - r + 1) * (n - r + 2) // 2


def _check_rank(n, r):
    if not 0 < r < n:
        raise InputError(f"need 0 < r < n, got n={n}, r={r}")


def symmetric_variable_names(n: int) -> Tuple[str, ...]:
    sep = "" if n < 10 else "_"
    return tuple(f"a{i + 1}{sep}{j + 1}" for i in range(n) for j in range(i, n))


def symmetric_positions(n: int) -> Tuple[Tuple[int, int], ...]:
    return tuple((i, j) for i in range(n) for j in range(i, n))


def symmetric_row_sets(n: int, k: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """(row set, column set) pairs with rows <= cols; covers each symmetric minor once."""
    sets = list(combinations(range(n), k))
    return [(I, J) for a, I in enumerate(sets) for J in sets[a:]]


def symmetric_minors(F: Sequence[Sequence[Polynomial]], k: int) -> List[Polynomial]:
    """The canonical list of k x k minors of a symmetric matrix, row-major."""
    from .poly import det

    out = []
    for I, J in symmetric_row_sets(len(F), k):
        out.append(det([[F[r][c] for c in J] for r in I]))
    return out


@dataclass(frozen=True)
class SymmetricMatrixSpace:
    n: int

    @property
    def N(self) -> int:
        return self.n * (self.n + 1) // 2

    @property
    def ring(self) -> PolynomialRing:
        return _space_ring(self.n)

    def generic_matrix(self) -> Matrix:
        return _generic_matrix(self.n)


@lru_cache(maxsize=None)
def _space_ring(n: int) -> PolynomialRing:
    return PolynomialRing(symmetric_variable_names(n))


@lru_cache(maxsize=None)
def _generic_matrix(n: int) -> Matrix:
    ring = _space_ring(n)
    names = symmetric_variable_names(n)
    pos = {p: v for p, v in zip(symmetric_positions(n), names)}
    return tuple(tuple(ring.gen(pos[(min(i, j), max(i, j))]) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class RankStratumSpec:
    n: int
    i: int
    minors: Tuple[Polynomial, ...]
    ideal: Ideal

    @property
    def codim(self) -> int:
        return stratum_codim(self.n, self.i)

    @property
    def space(self) -> SymmetricMatrixSpace:
        return SymmetricMatrixSpace(self.n)


@lru_cache(maxsize=None)
def rank_stratum_ideal(n: int, i: int) -> RankStratumSpec:
    """Ideal of S_i: the (i+1)-minors of the generic symmetric n x n matrix."""
    if not 0 <= i < n:
        raise InputError(f"rank {i} out of range for n={n}")
    M = _generic_matrix(n)
    mins = tuple(symmetric_minors(M, i + 1))
    return RankStratumSpec(n, i, mins, Ideal(mins, _space_ring(n)))


# ---------------------------------------------------------------- germs

@dataclass
class DeterminantalGerm:
    """X = F⁻¹(S_r) for a symmetric polynomial matrix F with F(0) = 0."""

    n: int
    r: int
    ring: PolynomialRing
    F: Matrix
    minors: Tuple[Polynomial, ...]
    ideal_X: Ideal
    dim_at_origin: int = field(default=None)

    @property
    def q(self) -> int:
        return self.ring.nvars

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.ring.variables

    @property
    def codim(self) -> int:
        return stratum_codim(self.n, self.r)

    @property
    def d(self) -> int:
        """Expected dimension q - codim S_r."""
        return self.q - self.codim

    @property
    def expected_codimension(self) -> bool:
        return self.dim_at_origin <= max(self.d, 0)

    @property
    def p(self) -> int:
        return len(self.minors)

    def entry_map(self) -> dict:
        """Substitution a_ij -> f_ij used to pull back ideals from hom_s."""
        names = symmetric_variable_names(self.n)
        return {v: self.F[i][j] for v, (i, j) in zip(names, symmetric_positions(self.n))}

    def stratum(self, i: int) -> "DeterminantalGerm":
        """The germ _iX = F⁻¹(S_i) viewed as a determinantal germ of rank i."""
        return pullback_germ(self.F, i, self.ring)

    def __repr__(self):
        rows = "; ".join(", ".join(str(e) for e in row) for row in self.F)
        return f"DeterminantalGerm(n={self.n}, r={self.r}, F=[{rows}])"


def _as_matrix(F, ring: Optional[PolynomialRing]) -> Tuple[Matrix, PolynomialRing]:
    rows = [list(row) for row in F]
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise InputError("matrix must be square and nonempty")
    if ring is None:
        for row in rows:
            for e in row:
                if isinstance(e, Polynomial):
                    ring = e.ring
                    break
            if ring is not None:
                break
    if ring is None:
        raise InputError("cannot infer the ring of a constant matrix")
    out = []
    for row in rows:
        new = []
        for e in row:
            if isinstance(e, str):
                e = ring.parse(e)
            elif not isinstance(e, Polynomial):
                e = ring.constant(e)
            elif e.ring.variables != ring.variables:
                e = e.change_ring(ring)
            new.append(e)
        out.append(tuple(new))
    return tuple(out), ring


def pullback_germ(F, r: int, ring: PolynomialRing = None) -> DeterminantalGerm:
    """Build X = F⁻¹(S_r); F must be symmetric with F(0) = 0."""
    M, ring = _as_matrix(F, ring)
    n = len(M)
    if not 0 <= r < n:
        raise InputError(f"rank {r} out of range for n={n}")
    for i in range(n):
        for j in range(i + 1, n):
            if M[i][j] != M[j][i]:
                raise InputError(f"asymmetric entries at ({i}, {j})")
    for i in range(n):
        for j in range(n):
            if M[i][j].constant_term() != 0:
                raise InputError("F(0) ≠ 0: translate coordinates so that F(0) = 0")
    mins = tuple(symmetric_minors(M, r + 1))
    I = Ideal(mins, ring)
    g = DeterminantalGerm(n, r, ring, M, mins, I)
    g.dim_at_origin = dimension(I, local=True) if I.generators else ring.nvars
    return g


def strata_chain(g: DeterminantalGerm) -> List[Ideal]:
    """Ideals of _0X, _1X, ..., _rX (the (i+1)-minors of F)."""
    return [Ideal(symmetric_minors(g.F, i + 1), g.ring) for i in range(g.r + 1)]


def jacobian_matrix(polys: Sequence[Polynomial], variables: Sequence[str]) -> List[List[Polynomial]]:
    return [[p.derivative(v) for v in variables] for p in polys]


def transversality_failure_ideal(F: Matrix, i: int, ring: PolynomialRing,
                                 variables: Sequence[str] = None) -> Ideal:
    """Points of F⁻¹(S_i) where F (differentiated in ``variables``) is not
    transverse to S_i: the stratum ideal plus the codim-sized minors of the
    Jacobian of the pulled-back (i+1)-minors.

    Off F⁻¹(S_{i-1}) the minors of S_i form a regular system of codim c with
    conormal rows spanning the conormal space, so rank c of the composed
    Jacobian is exactly transversality.
    """
    n = len(F)
    c = stratum_codim(n, i)
    variables = list(variables or ring.variables)
    mins = symmetric_minors(F, i + 1)
    I = Ideal(mins, ring)
    if c > len(variables):
        return I
    J = jacobian_matrix(mins, variables)
    return Ideal(list(I.generators) + _minors(J, c), ring)


@dataclass
class StratumAudit:
    i: int
    expected_codim: int
    dim_at_origin: int
    expected_dimension_ok: bool
    transverse_off_origin: bool
    reason: str = ""

    def as_dict(self) -> dict:
        return {
            "stratum": self.i,
            "expected_codim": self.expected_codim,
            "dim_at_origin": self.dim_at_origin,
            "expected_dimension": self.expected_dimension_ok,
            "transverse_off_origin": self.transverse_off_origin,
            "reason": self.reason,
        }


@dataclass
class SeidsReport:
    is_seids: bool
    per_stratum: List[StratumAudit]
    certificate: str = "transversality certificate (Jacobian rank on each stratum preimage)"

    @property
    def failing_strata(self) -> List[int]:
        return [s.i for s in self.per_stratum if not (s.transverse_off_origin and s.expected_dimension_ok)]

    def as_dict(self) -> dict:
        return {
            "is_seids": self.is_seids,
            "failing_strata": self.failing_strata,
            "certificate": self.certificate,
            "per_stratum": [s.as_dict() for s in self.per_stratum],
        }


def supported_at_origin_off(I: Ideal, deeper: Optional[Ideal]) -> bool:
    """Whether V(I) minus V(deeper) is contained in {0} near the origin.

    V(I : J^∞) is the union of the V(I : g^∞) over generators g of J, so
    each principal saturation is tested separately.
    """
    if support_at_origin(I):
        return True
    if deeper is None or not deeper.generators:
        return False
    for g in deeper.generators:
        if not support_at_origin(saturation_by_element(I, g)):
            return False
    return True


def seids_check(g: DeterminantalGerm) -> SeidsReport:
    """Audit transversality of F to every stratum S_i ∖ S_{i-1}, i <= r, off 0."""
    chain = strata_chain(g)
    audits = []
    for i in range(g.r + 1):
        c = stratum_codim(g.n, i)
        Ii = chain[i]
        dim_i = dimension(Ii, local=True) if Ii.generators else g.q
        dim_ok = dim_i <= max(g.q - c, 0)
        fail = transversality_failure_ideal(g.F, i, g.ring)
        deeper = chain[i - 1] if i > 0 else None
        ok = supported_at_origin_off(fail, deeper)
        reason = ""
        if not ok:
            reason = f"F is not transverse to S_{i} along a positive-dimensional set through 0"
        elif not dim_ok:
            reason = f"F⁻¹(S_{i}) has dimension {dim_i}, expected {max(g.q - c, 0)}"
        audits.append(StratumAudit(i, c, dim_i, dim_ok, ok, reason))
    return SeidsReport(all(a.transverse_off_origin and a.expected_dimension_ok for a in audits), audits)


def stratum_colength(g: DeterminantalGerm, i: int):
    """Local colength of the ideal of _iX (``INFINITE`` if positive-dimensional)."""
    return colength(Ideal(symmetric_minors(g.F, i + 1), g.ring), local=True)


__all__ = [
    "SymmetricMatrixSpace", "RankStratumSpec", "DeterminantalGerm", "SeidsReport",
    "StratumAudit", "stratum_codim", "is_isolated_singularity", "has_smoothing",
    "rank_stratum_ideal", "pullback_germ", "strata_chain", "seids_check",
    "symmetric_minors", "symmetric_variable_names", "symmetric_positions",
    "jacobian_matrix", "transversality_failure_ideal", "stratum_colength",
    "supported_at_origin_off", "INFINITE",
]
