"""The module pairs JM(X) ⊆ N(X) over O_X and the tests run on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence

from .errors import ComputationError, InputError
from .geometry import DeterminantalGerm, rank_stratum_ideal, symmetric_variable_names
from .poly import Polynomial
from .stdbasis import (FreeModuleElement, Ideal, StandardBasis, Submodule, module_quotient,
                       standard_basis, support_at_origin)
from .poly import MonomialOrder


def columns_to_matrix(M: Submodule) -> List[List[Polynomial]]:
    """p x m matrix whose columns are the generators of M."""
    return [[g.components[k] for g in M.generators] for k in range(M.ambient_rank)]


def jacobian_module(g: DeterminantalGerm) -> Submodule:
    """Columns (∂h_1/∂z_j, ..., ∂h_p/∂z_j) of the canonical minor list, over O_X."""
    cols = [FreeModuleElement([h.derivative(v) for h in g.minors]) for v in g.variables]
    return Submodule(cols, g.p, g.ring, g.ideal_X)


def n_module(g: DeterminantalGerm) -> Submodule:
    """F*(JM(S_r)): derivatives of the generic minors in each a_ij, composed with F."""
    spec = rank_stratum_ideal(g.n, g.r)
    subs = g.entry_map()
    cols = []
    for a in symmetric_variable_names(g.n):
        cols.append(FreeModuleElement(
            [m.derivative(a).substitute(subs, g.ring) for m in spec.minors]))
    return Submodule(cols, g.p, g.ring, g.ideal_X)


def scale_by_parameter_ideal(M: Submodule, m_Y: Ideal) -> Submodule:
    """m_Y·M: every generator of M times every generator of m_Y."""
    gens = [f * v for v in M.generators for f in m_Y.generators]
    return Submodule(gens, M.ambient_rank, M.ring, M.base_ideal)


def maximal_ideal(ring, variables: Sequence[str] = None) -> Ideal:
    return Ideal([ring.gen(v) for v in (variables or ring.variables)], ring)


def _basis(N: Submodule, local: bool) -> StandardBasis:
    order = MonomialOrder.negdegrevlex() if local else MonomialOrder.degrevlex()
    return standard_basis(N, order)


def submodule_contains(N: Submodule, M: Submodule, local: bool = True) -> bool:
    """M ⊆ N, both taken modulo N's base ideal (germ-wise when ``local``)."""
    if M.ambient_rank != N.ambient_rank:
        raise InputError("modules live in free modules of different rank")
    B = _basis(N, local)
    return all(B.contains(v) for v in M.generators)


def submodules_equal(M: Submodule, N: Submodule, local: bool = True) -> bool:
    return submodule_contains(N, M, local) and submodule_contains(M, N, local)


@dataclass
class ModulePair:
    M: Submodule
    N: Submodule

    def __post_init__(self):
        if self.M.ambient_rank != self.N.ambient_rank:
            raise InputError("pair members must share the ambient free module")
        if not submodule_contains(self.N, self.M):
            raise ComputationError("M is not contained in N")

    @property
    def base(self) -> Ideal:
        return self.N.base_ideal

    def agrees_off_origin(self) -> bool:
        return pair_agrees_off_origin(self.M, self.N)


def pair_agrees_off_origin(M: Submodule, N: Submodule) -> bool:
    """True iff N/M is supported at the origin (so e(M, N) is defined).

    supp(N/M) is the union of V(M : n) over generators n of N; each quotient
    ideal is computed with one extra module component and tested for finite
    local colength.
    """
    if M.base_ideal is None and N.base_ideal is not None:
        M = M.with_base(N.base_ideal)
    if not submodule_contains(N, M):
        raise ComputationError("M is not contained in N")
    B = _basis(M, local=True)
    for v in N.generators:
        if B.contains(v):
            continue
        if not support_at_origin(module_quotient(M, v, local=True)):
            return False
    return True


__all__ = [
    "jacobian_module", "n_module", "scale_by_parameter_ideal", "pair_agrees_off_origin",
    "submodule_contains", "submodules_equal", "ModulePair", "maximal_ideal",
    "columns_to_matrix",
]
