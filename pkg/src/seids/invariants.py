"""Polar multiplicities, intersection numbers and Whitney verdicts.

Every generic choice (stabilising perturbation, linear forms, projection
matrices) is drawn from a :class:`GenericityContext`.  Each generic
computation is run on independent draws and must return the same value.

A one-parameter stabilisation F + t·G of a germ is used throughout; a
curve in (z, t)-space that is finite over the t-line has its degree over
that line read off as the Hilbert–Samuel multiplicity of (t) on the local
ring of the curve, i.e. the eventual constant value of
ℓ(O/(P + t^{k+1})) - ℓ(O/(P + t^k)).  Embedded or zero-dimensional junk at
the origin does not contribute, so only loci of positive dimension that
must be removed (deeper strata in non-smoothable cases) are saturated away.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .errors import ComputationError, GenericityError, InputError, NotMPrimary
from .geometry import (INFINITE, DeterminantalGerm, has_smoothing, is_isolated_singularity,
                       jacobian_matrix, pullback_germ,
                       rank_stratum_ideal, seids_check, stratum_codim, supported_at_origin_off,
                       symmetric_minors, symmetric_positions, symmetric_variable_names,
                       transversality_failure_ideal)
from .module_calculus import jacobian_module, n_module, scale_by_parameter_ideal
from .poly import Polynomial, PolynomialRing, minors, to_rational
from .stdbasis import (Ideal, colength, dimension, hilbert_samuel_multiplicity,
                       ideals_equal, saturation, saturation_by_element, support_at_origin)


# ------------------------------------------------------------ genericity

@dataclass(frozen=True)
class GenericityContext:
    """Seeded source of generic choices with a double-sample policy."""

    seed: int = 0
    coefficient_range: int = 10_000
    resamples: int = 2
    max_retries: int = 4
    perturbation: str = "constant"
    audit_stabilization: bool = True

    def __post_init__(self):
        if self.resamples < 1:
            raise InputError("resamples must be at least 1")
        if self.coefficient_range < 1:
            raise InputError("coefficient_range must be positive")
        if self.perturbation not in ("affine", "constant"):
            raise InputError("perturbation must be 'affine' or 'constant'")

    def rng(self, label: str, draw: int) -> random.Random:
        # str seeds are hashed with SHA-512, so draws are stable across runs
        return random.Random(f"{self.seed}|{label}|{draw}")

    def coefficient(self, rng: random.Random) -> int:
        R = self.coefficient_range
        while True:
            c = rng.randint(-R, R)
            if c:
                return c

    def matrix(self, rng: random.Random, rows: int, cols: int) -> List[List[int]]:
        return [[self.coefficient(rng) for _ in range(cols)] for _ in range(rows)]

    def validated(self, label: str, compute: Callable[[random.Random], object]):
        """Run ``compute`` on independent draws; all results must agree."""
        values = [compute(self.rng(label, k)) for k in range(self.resamples)]
        if any(v != values[0] for v in values[1:]):
            raise GenericityError(f"generic draws disagree for {label}: {values}")
        return values[0]

    def with_seed(self, seed: int) -> "GenericityContext":
        return GenericityContext(seed, self.coefficient_range, self.resamples,
                                 self.max_retries, self.perturbation, self.audit_stabilization)


# --------------------------------------------------------------- families

@dataclass
class GermFamily:
    """Symmetric matrix F̃(z, y) over germ variables z and parameters y."""

    n: int
    r: int
    ring: PolynomialRing
    germ_variables: Tuple[str, ...]
    parameters: Tuple[str, ...]
    F: Tuple[Tuple[Polynomial, ...], ...]
    samples: List[Tuple] = field(default_factory=list)

    def __post_init__(self):
        n = len(self.F)
        if n != self.n:
            raise InputError("matrix size does not match n")
        zero_z = {v: 0 for v in self.germ_variables}
        for i in range(n):
            for j in range(n):
                if self.F[i][j] != self.F[j][i]:
                    raise InputError(f"asymmetric entries at ({i}, {j})")
                if not self.F[i][j].substitute(zero_z).is_zero():
                    raise InputError("F̃(0, y) must vanish identically along the parameter space")
        for s in self.samples:
            if len(s) != len(self.parameters):
                raise InputError("sample dimension does not match the parameters")

    @property
    def q(self) -> int:
        return len(self.germ_variables)

    @property
    def germ_ring(self) -> PolynomialRing:
        return PolynomialRing(self.germ_variables)

    def specialize_matrix(self, sample: Sequence) -> Tuple[Tuple[Polynomial, ...], ...]:
        ring = self.germ_ring
        values = {p: to_rational(v) for p, v in zip(self.parameters, sample)}
        return tuple(tuple(e.substitute(values).change_ring(ring) for e in row) for row in self.F)

    def specialize(self, sample: Sequence) -> DeterminantalGerm:
        return pullback_germ(self.specialize_matrix(sample), self.r, self.germ_ring)


def family_from_germ(g: DeterminantalGerm, parameters: Sequence[str] = ("t",),
                     samples: Sequence = ((0,), (1,))) -> GermFamily:
    """The trivial (product) family of ``g`` over the given parameters."""
    ring = PolynomialRing(tuple(g.variables) + tuple(parameters))
    F = tuple(tuple(e.change_ring(ring) for e in row) for row in g.F)
    return GermFamily(g.n, g.r, ring, tuple(g.variables), tuple(parameters), F,
                      [tuple(s) for s in samples])


# ---------------------------------------------------------- stabilisation

def _fresh_name(taken: Sequence[str], base: str = "t") -> str:
    name = base
    k = 0
    while name in taken:
        k += 1
        name = f"{base}{k}"
    return name


@dataclass
class Stabilization:
    """F̃(z, t) = F(z) + t·G(z) together with its (z, t) ring."""

    germ: DeterminantalGerm
    ring: PolynomialRing
    t: str
    F: Tuple[Tuple[Polynomial, ...], ...]

    @property
    def z(self) -> Tuple[str, ...]:
        return self.germ.variables

    def stratum_minors(self, i: int) -> List[Polynomial]:
        return symmetric_minors(self.F, i + 1)

    def stratum_ideal(self, i: int) -> Ideal:
        return Ideal(self.stratum_minors(i), self.ring)

    def entry_map(self) -> Dict[str, Polynomial]:
        names = symmetric_variable_names(self.germ.n)
        return {v: self.F[i][j] for v, (i, j) in zip(names, symmetric_positions(self.germ.n))}

    def as_family(self) -> GermFamily:
        return GermFamily(self.germ.n, self.germ.r, self.ring, tuple(self.z), (self.t,),
                          self.F, [])


def _perturbation(ctx: GenericityContext, rng: random.Random, g: DeterminantalGerm,
                  ring: PolynomialRing):
    n = g.n
    G = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            e = ring.constant(ctx.coefficient(rng))
            if ctx.perturbation == "affine":
                for v in g.variables:
                    e = e + ctx.coefficient(rng) * ring.gen(v)
            G[i][j] = G[j][i] = e
    return G


def stabilize(g: DeterminantalGerm, ctx: GenericityContext,
              rng: random.Random = None) -> Stabilization:
    """One-parameter stabilisation F + t·G with G drawn from ``ctx``.

    With ``ctx.audit_stabilization`` the fibres for t ≠ 0 are checked to be
    transverse to every stratum near the origin; a failed audit re-draws G.
    """
    rng = rng or ctx.rng("stabilize", 0)
    t = _fresh_name(g.variables)
    ring = PolynomialRing(tuple(g.variables) + (t,))
    tt = ring.gen(t)
    base = tuple(tuple(e.change_ring(ring) for e in row) for row in g.F)
    for _ in range(ctx.max_retries + 1):
        G = _perturbation(ctx, rng, g, ring)
        F = tuple(tuple(base[i][j] + tt * G[i][j] for j in range(g.n)) for i in range(g.n))
        stab = Stabilization(g, ring, t, F)
        if not ctx.audit_stabilization or audit_stabilization(stab):
            return stab
    raise GenericityError("no transverse stabilisation found within the retry budget")


def audit_stabilization(stab: Stabilization) -> bool:
    """Fibres F̃(·, t), t ≠ 0, are transverse to every S_i near the origin."""
    tt = stab.ring.gen(stab.t)
    for i in range(stab.germ.r + 1):
        fail = transversality_failure_ideal(stab.F, i, stab.ring, stab.z)
        off_special = saturation_by_element(fail, tt)
        deeper = stab.stratum_ideal(i - 1) if i > 0 else None
        if not supported_at_origin_off(off_special, deeper):
            return False
    return True


# ------------------------------------------------------------ primitives

def matmul(A: Sequence[Sequence[Polynomial]], W: Sequence[Sequence], ring: PolynomialRing):
    cols = len(W[0]) if W else 0
    out = []
    for row in A:
        new = []
        for k in range(cols):
            acc = ring.zero()
            for a, w in zip(row, W):
                c = w[k]
                if a and c:
                    acc = acc + a * c
            new.append(acc)
        out.append(new)
    return out


def polar_ideal(base: Ideal, A, W, rank: int) -> Ideal:
    """base + rank-minors of A·W: where the combinations A·W drop below ``rank``."""
    if not W or len(W[0]) < rank:
        return base
    AW = matmul(A, W, base.ring)
    return Ideal(list(base.generators) + minors(AW, rank), base.ring)


def multiplicity_over_line(P: Ideal, t: str, window: int = 3, kmax: int = 40) -> int:
    """Degree over the t-line of the curve germ V(P) at 0.

    Computed as the stable value of ℓ(P + t^{k+1}) - ℓ(P + t^k), which
    ignores zero-dimensional components at the origin.
    """
    ring = P.ring
    tt = ring.gen(t)
    prev = colength(P + Ideal([tt], ring))
    if prev == INFINITE:
        raise ComputationError("locus is not finite over the parameter line")
    if prev == 0:
        return 0
    deltas = []
    for k in range(1, kmax):
        cur = colength(P + Ideal([tt ** (k + 1)], ring))
        if cur == INFINITE:
            raise ComputationError("locus is not finite over the parameter line")
        deltas.append(cur - prev)
        prev = cur
        if len(deltas) >= window and len(set(deltas[-window:])) == 1:
            return deltas[-1]
    raise ComputationError("degree over the parameter line did not stabilise")


def _needs_deeper_saturation(n: int, i: int, q: int) -> bool:
    # F̃⁻¹(S_{i-1}) is a curve or larger in (z, t)-space iff q >= codim S_{i-1}
    return i > 0 and q >= stratum_codim(n, i - 1)


def _sat_deeper(P: Ideal, stab: Stabilization, i: int, ctx: GenericityContext,
                rng: random.Random) -> Ideal:
    """P : J^∞ for J the ideal of F̃⁻¹(S_{i-1}), via one generic element of J.

    For a generic combination g of the generators, g lies in no associated
    prime of P that misses V(J), so P : g^∞ = P : J^∞.
    """
    if not _needs_deeper_saturation(stab.germ.n, i, stab.germ.q):
        return P
    J = stab.stratum_minors(i - 1)
    g = stab.ring.zero()
    for h in J:
        g = g + ctx.coefficient(rng) * h
    return saturation_by_element(P, g)


def _rank_germ(g: DeterminantalGerm, i: int) -> DeterminantalGerm:
    return g if i == g.r else g.stratum(i)


# ------------------------------------------------------------- invariants

def relative_polar_multiplicity_md(g: DeterminantalGerm, ctx: GenericityContext,
                                   label: str = "md") -> int:
    """m_d: critical points of a generic linear form on the smooth part of a
    generic fibre of a stabilisation, counted near the origin."""
    if g.d <= 0:
        return 0

    def compute(rng):
        stab = stabilize(g, ctx, rng)
        V = ctx.matrix(rng, g.q, g.q - 1)
        return _polar_curve_degree(stab, g.r, V, ctx, rng)

    return ctx.validated(f"{label}:n{g.n}r{g.r}", compute)


def _polar_curve_degree(stab: Stabilization, i: int, V, ctx: GenericityContext,
                        rng: random.Random) -> int:
    g = stab.germ
    mins = stab.stratum_minors(i)
    Jz = jacobian_matrix(mins, stab.z)
    P = polar_ideal(Ideal(mins, stab.ring), Jz, V, stratum_codim(g.n, i))
    P = _sat_deeper(P, stab, i, ctx, rng)
    return multiplicity_over_line(P, stab.t)


def scaled_polar_multiplicity(g: DeterminantalGerm, ctx: GenericityContext,
                              label: str = "mY") -> int:
    """Degree over the stabilisation line of the polar curve of m_Y·JM_z."""
    if g.d <= 0:
        return 0

    def compute(rng):
        stab = stabilize(g, ctx, rng)
        ring = stab.ring
        z = [ring.gen(v) for v in stab.z]
        V = []
        for _ in range(g.q):
            row = []
            for _ in range(g.q - 1):
                form = ring.zero()
                for zk in z:
                    form = form + ctx.coefficient(rng) * zk
                row.append(form)
            V.append(row)
        return _polar_curve_degree(stab, g.r, V, ctx, rng)

    return ctx.validated(f"{label}:n{g.n}r{g.r}", compute)


def polar_variety_generic(n: int, r: int, k: int, ctx: GenericityContext = None,
                          W=None, saturate: bool = True, rng: random.Random = None) -> Ideal:
    """Ideal of the codimension-k polar variety Γ_k(S_r) in the a_ij coordinates.

    W is the N x (c + k - 1) matrix of generic combinations (drawn from
    ``ctx`` when omitted); the result is saturated by S_{r-1}.
    """
    spec = rank_stratum_ideal(n, r)
    c = spec.codim
    dim_S = spec.space.N - c
    if not 0 <= k <= dim_S:
        raise InputError(f"polar codimension {k} out of range 0..{dim_S}")
    ring = spec.ideal.ring
    if W is None:
        rng = rng or (ctx or GenericityContext()).rng(f"polar:n{n}r{r}k{k}", 0)
        W = (ctx or GenericityContext()).matrix(rng, spec.space.N, c + k - 1)
    J = jacobian_matrix(spec.minors, ring.variables)
    P = polar_ideal(spec.ideal, J, W, c)
    if saturate and r > 0:
        P = saturation(P, rank_stratum_ideal(n, r - 1).ideal)
    return P


def polar_invariants(n: int, r: int, k: int, ctx: GenericityContext) -> Tuple[int, int]:
    """(dimension, multiplicity at 0) of Γ_k(S_r), validated across draws."""
    from .module_calculus import maximal_ideal

    def compute(rng):
        P = polar_variety_generic(n, r, k, ctx, rng=rng)
        dim = dimension(P)
        if dim < 0:
            return (dim, 0)
        m = maximal_ideal(P.ring)
        return (dim, hilbert_samuel_multiplicity(m, P))

    return ctx.validated(f"polar-invariants:n{n}r{r}k{k}", compute)


def module_polar(M, rank: int, W, deeper: Optional[Ideal] = None) -> Ideal:
    """Γ(M) from the columns of M combined by W, saturated by ``deeper``."""
    from .module_calculus import columns_to_matrix

    P = polar_ideal(M.base_ideal, columns_to_matrix(M), W, rank)
    if deeper is not None and deeper.generators:
        P = saturation(P, deeper)
    return P


def polar_pullback_agrees(g: DeterminantalGerm, k: int, ctx: GenericityContext) -> bool:
    """Γ_k(N(X)) computed from N(X) equals F⁻¹(Γ_k(S_r)), both saturated by F⁻¹(S_{r-1})."""
    if not 0 <= k < max(g.d, 0):
        raise InputError(f"polar codimension {k} must satisfy 0 <= k < d = {g.d}")
    spec = rank_stratum_ideal(g.n, g.r)
    rng = ctx.rng(f"pullback:n{g.n}r{g.r}k{k}", 0)
    W = ctx.matrix(rng, spec.space.N, g.codim + k - 1)
    deeper = Ideal(symmetric_minors(g.F, g.r), g.ring) if g.r > 0 else None
    direct = module_polar(n_module(g), g.codim, W, deeper)
    in_S = polar_variety_generic(g.n, g.r, k, W=W)
    pulled = in_S.substitute(g.entry_map(), g.ring)
    if deeper is not None:
        pulled = saturation(pulled, deeper)
    return ideals_equal(direct, pulled)


def intersection_number(g: DeterminantalGerm, i: int, ctx: GenericityContext,
                        label: str = "intersection") -> int:
    """f̃_y(C^q)·Γ_{d(i)}(S_i) for the stratum germ _iX of ``g``.

    For d(i) = 0 this is the local colength of the stratum ideal.
    """
    if not 0 <= i <= g.r:
        raise InputError(f"stratum {i} out of range 0..{g.r}")
    gi = _rank_germ(g, i)
    d = gi.d
    if d < 0:
        raise InputError(f"stratum {i} is expected to be empty (d = {d})")
    if d == 0:
        value = colength(gi.ideal_X)
        if value == INFINITE:
            raise ComputationError(f"stratum {i} is not finite at the origin")
        return value
    c = gi.codim
    spec = rank_stratum_ideal(g.n, i)

    def compute(rng):
        stab = stabilize(gi, ctx, rng)
        W = ctx.matrix(rng, spec.space.N, c + d - 1)
        subs = stab.entry_map()
        J = [[e.substitute(subs, stab.ring) for e in row]
             for row in jacobian_matrix(spec.minors, spec.ideal.ring.variables)]
        P = polar_ideal(stab.stratum_ideal(i), J, W, c)
        P = _sat_deeper(P, stab, i, ctx, rng)
        return multiplicity_over_line(P, stab.t)

    return ctx.validated(f"{label}:n{g.n}i{i}", compute)


@dataclass
class InvariantRecord:
    """Invariants of one stratum germ _iX."""

    stratum: int
    d: int
    m_d: Optional[int] = None
    intersection: Optional[int] = None
    e_pair: Optional[int] = None
    colength: Optional[int] = None
    e_pair_oracle: Optional[int] = None

    def as_dict(self) -> dict:
        out = {"stratum": self.stratum, "d": self.d}
        for k in ("m_d", "intersection", "e_pair", "colength", "e_pair_oracle"):
            v = getattr(self, k)
            if v is not None:
                out[k] = v
        return out


def _hs_difference(M_gens: Sequence[Polynomial], N_gens: Sequence[Polynomial],
                   base: Ideal) -> Optional[int]:
    ring = base.ring
    Mi, Ni = Ideal(M_gens, ring), Ideal(N_gens, ring)
    try:
        return hilbert_samuel_multiplicity(Mi, base) - hilbert_samuel_multiplicity(Ni, base)
    except NotMPrimary:
        return None


def e_pair(g: DeterminantalGerm, ctx: GenericityContext, oracle: bool = True) -> InvariantRecord:
    """e(JM(X), N(X)) = m_d - F(C^q)·Γ_d(S_r), with a Hilbert–Samuel cross-check
    when both modules are m-primary ideals of O_X."""
    if g.d <= 0:
        raise InputError("e_pair needs a germ of positive expected dimension")
    m = relative_polar_multiplicity_md(g, ctx)
    inter = intersection_number(g, g.r, ctx)
    e = m - inter
    if e < 0:
        raise ComputationError(f"negative pair multiplicity m_d - I = {m} - {inter}")
    rec = InvariantRecord(g.r, g.d, m_d=m, intersection=inter, e_pair=e)
    if oracle and g.p == 1:
        JM = [v.components[0] for v in jacobian_module(g).generators]
        N = [v.components[0] for v in n_module(g).generators]
        hs = _hs_difference(JM, N, g.ideal_X)
        if hs is not None:
            rec.e_pair_oracle = hs
            if hs != e:
                raise ComputationError(f"polar route e = {e} disagrees with Hilbert–Samuel e = {hs}")
    return rec


def germ_invariants(g: DeterminantalGerm, ctx: GenericityContext,
                    top_only: bool = False) -> List[InvariantRecord]:
    """Per-stratum records for a single germ (strata expected empty are skipped)."""
    out = []
    strata = [g.r] if top_only else range(g.r + 1)
    for i in strata:
        gi = _rank_germ(g, i)
        if gi.d < 0:
            continue
        if gi.d == 0:
            out.append(InvariantRecord(i, 0, colength=intersection_number(g, i, ctx)))
        else:
            rec = e_pair(gi, ctx)
            rec.stratum = i
            out.append(rec)
    return out


@dataclass
class StratumValue:
    stratum: int
    sample: Tuple
    d: int
    value: Optional[int]
    e_scaled: Optional[int] = None
    intersection: Optional[int] = None
    oracle: Optional[int] = None
    error: str = ""

    def as_dict(self) -> dict:
        out = {"stratum": self.stratum, "sample": [str(s) for s in self.sample],
               "d": self.d, "value": self.value}
        if self.e_scaled is not None:
            out["e_mY_JM_N"] = self.e_scaled
        if self.intersection is not None:
            out["intersection"] = self.intersection
        if self.oracle is not None:
            out["e_mY_JM_N_oracle"] = self.oracle
        if self.error:
            out["error"] = self.error
        return out


def stratum_invariant(fam: GermFamily, i: int, sample: Sequence, ctx: GenericityContext,
                      oracle: bool = True) -> StratumValue:
    """e(m_Y·JM(_iX(y)), N(_iX(y))) + f̃_y(C^q)·Γ_{d(i)}(S_i) at one sample.

    For d(i) = 0 the value is the colength of the stratum ideal.
    """
    sample = tuple(to_rational(s) for s in sample)
    g = fam.specialize(sample)
    gi = _rank_germ(g, i)
    if gi.d < 0:
        return StratumValue(i, sample, gi.d, None)
    if gi.d == 0:
        return StratumValue(i, sample, 0, intersection_number(g, i, ctx))
    tag = f"i{i}@{','.join(str(s) for s in sample)}"
    value = scaled_polar_multiplicity(gi, ctx, label=f"mY:{tag}")
    inter = intersection_number(g, i, ctx, label=f"intersection:{tag}")
    e = value - inter
    if e < 0:
        raise ComputationError(f"negative pair multiplicity at stratum {i}, sample {sample}")
    sv = StratumValue(i, sample, gi.d, value, e, inter)
    if oracle and gi.p == 1:
        from .module_calculus import maximal_ideal

        mJM = scale_by_parameter_ideal(jacobian_module(gi), maximal_ideal(gi.ring))
        N = n_module(gi)
        hs = _hs_difference([v.components[0] for v in mJM.generators],
                            [v.components[0] for v in N.generators], gi.ideal_X)
        if hs is not None:
            sv.oracle = hs
            if hs != e:
                raise ComputationError(
                    f"polar route e(m_Y JM, N) = {e} disagrees with Hilbert–Samuel {hs}")
    return sv


@dataclass
class EquisingularityVerdict:
    verdict: str
    strata: List[int]
    values: Dict[int, List[StratumValue]]
    certificates: List[dict]
    good: List[dict]
    scope: str = "all strata"

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "scope": self.scope,
            "strata": self.strata,
            "good_family_audit": self.good,
            "values": {str(i): [v.as_dict() for v in vs] for i, vs in self.values.items()},
            "certificates": self.certificates,
        }


def controlled_strata(n: int, r: int, q: int) -> List[int]:
    """Strata whose expected dimension is >= 0; the others are expected empty."""
    return [i for i in range(r + 1) if q - stratum_codim(n, i) >= 0]


def whitney_verdict(fam: GermFamily, ctx: GenericityContext, top_only: bool = False,
                    oracle: bool = True) -> EquisingularityVerdict:
    """Equisingular iff every controlled stratum invariant is constant over the samples."""
    if len(fam.samples) < 1:
        raise InputError("family-check needs at least one sample")
    good = []
    for s in fam.samples:
        rep = seids_check(fam.specialize(s))
        good.append({"sample": [str(x) for x in s], "is_seids": rep.is_seids,
                     "failing_strata": rep.failing_strata})
    smoothable_isolated = (0 < fam.r < fam.n and is_isolated_singularity(fam.n, fam.r, fam.q)
                           and has_smoothing(fam.n, fam.r, fam.q))
    if top_only:
        strata, scope = [fam.r], "pair (X_0 - Y, Y) only"
    elif smoothable_isolated:
        # isolated singularities with a smoothing: the top stratum decides
        strata, scope = [fam.r], "top stratum (isolated singularity with a smoothing)"
    else:
        strata, scope = controlled_strata(fam.n, fam.r, fam.q), "all strata"
    if not all(g["is_seids"] for g in good):
        certs = [{"reason": "sample is not a SEIDS (family not good there)", "sample": g["sample"],
                  "failing_strata": g["failing_strata"]} for g in good if not g["is_seids"]]
        return EquisingularityVerdict("indeterminate", strata, {}, certs, good, scope)
    values: Dict[int, List[StratumValue]] = {}
    certificates = []
    indeterminate = False
    for i in strata:
        seq = []
        for s in fam.samples:
            try:
                seq.append(stratum_invariant(fam, i, s, ctx, oracle))
            except GenericityError as exc:
                indeterminate = True
                seq.append(StratumValue(i, tuple(s), fam.q - stratum_codim(fam.n, i), None,
                                        error=str(exc)))
        values[i] = seq
        known = [v for v in seq if v.value is not None]
        for v in known[1:]:
            if v.value != known[0].value:
                certificates.append({
                    "stratum": i,
                    "samples": [[str(x) for x in known[0].sample], [str(x) for x in v.sample]],
                    "values": [known[0].value, v.value],
                })
    if certificates:
        verdict = "not-equisingular"
    elif indeterminate:
        verdict = "indeterminate"
    else:
        verdict = "equisingular"
    return EquisingularityVerdict(verdict, strata, values, certificates, good, scope)


__all__ = [
    "GenericityContext", "GermFamily", "Stabilization", "InvariantRecord", "StratumValue",
    "EquisingularityVerdict", "stabilize", "audit_stabilization", "relative_polar_multiplicity_md",
    "scaled_polar_multiplicity", "polar_variety_generic", "polar_invariants", "module_polar",
    "polar_pullback_agrees", "intersection_number", "e_pair", "germ_invariants",
    "stratum_invariant", "whitney_verdict", "family_from_germ", "multiplicity_over_line",
    "polar_ideal", "controlled_strata",
]
