import random

import pytest
from hypothesis import given, settings, strategies as st

from seids import ComputationError, InputError
from seids.geometry import pullback_germ
from seids.module_calculus import (ModulePair, jacobian_module, maximal_ideal, n_module,
                                   pair_agrees_off_origin, scale_by_parameter_ideal,
                                   submodule_contains, submodules_equal)
from seids.poly import PolynomialRing
from seids.stdbasis import FreeModuleElement, Submodule

R3 = PolynomialRing(["x", "y", "z"])
R2 = PolynomialRing(["x", "y"])
CONE = pullback_germ([["x", "y"], ["y", "z"]], 1, R3)
CUSP = pullback_germ([["y", "x"], ["x", "y^2"]], 1, R2)
NODE = pullback_germ([["x", "y"], ["y", "x"]], 1, R2)


def _gens(M):
    return [[str(c) for c in g.components] for g in M.generators]


def test_jacobian_module_generators():
    assert _gens(jacobian_module(CONE)) == [["z"], ["-2*y"], ["x"]]
    assert sorted(_gens(jacobian_module(CUSP))) == sorted([["-2*x"], ["3*y^2"]])
    assert _gens(jacobian_module(NODE)) == [["2*x"], ["-2*y"]]


def test_n_module_generators():
    assert sorted(_gens(n_module(CONE))) == sorted(_gens(jacobian_module(CONE)))
    assert sorted(_gens(n_module(CUSP))) == sorted([["y^2"], ["-2*x"], ["y"]])


def test_cone_modules_equal():
    assert submodules_equal(jacobian_module(CONE), n_module(CONE))


def test_cusp_modules_differ():
    JM, N = jacobian_module(CUSP), n_module(CUSP)
    assert submodule_contains(N, JM)
    assert not submodule_contains(JM, N)


def test_scaling():
    m = maximal_ideal(R2)
    e = Submodule([FreeModuleElement([R2.one()])], 1, R2)
    assert _gens(scale_by_parameter_ideal(e, m)) == [["x"], ["y"]]
    zero = Submodule([], 1, R2)
    assert len(scale_by_parameter_ideal(zero, m)) == 0
    assert len(scale_by_parameter_ideal(jacobian_module(CUSP), m)) == 4


def test_pair_agreement():
    for g in (CONE, CUSP, NODE):
        JM, N = jacobian_module(g), n_module(g)
        assert pair_agrees_off_origin(N, N)
        assert pair_agrees_off_origin(JM, N)
        assert pair_agrees_off_origin(scale_by_parameter_ideal(N, maximal_ideal(g.ring)), N)


def test_pair_disagreement_on_a_line():
    # non-SEIDS: N/JM is supported along the z-axis
    g = pullback_germ([["x", "y"], ["y", "z^2"]], 1, R3)
    assert not pair_agrees_off_origin(jacobian_module(g), n_module(g))


def test_pair_requires_containment():
    JM, N = jacobian_module(CUSP), n_module(CUSP)
    with pytest.raises(ComputationError):
        ModulePair(N, JM)
    with pytest.raises(ComputationError):
        pair_agrees_off_origin(N, JM)
    assert ModulePair(JM, N).agrees_off_origin()
    with pytest.raises(InputError):
        submodule_contains(N, Submodule([FreeModuleElement([R2.one(), R2.one()])], 2, R2))


def _random_germ(seed):
    rng = random.Random(seed)
    n = rng.choice([2, 3])
    q = rng.randint(2, 4)
    ring = PolynomialRing([f"z{k}" for k in range(q)])
    zs = ring.gens()
    F = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            e = ring.zero()
            for _ in range(rng.randint(1, 3)):
                m = ring.one()
                for _ in range(rng.randint(1, 2)):
                    m = m * rng.choice(zs)
                e = e + rng.randint(-3, 3) * m
            F[i][j] = F[j][i] = e
    return pullback_germ(F, rng.randint(1, n - 1), ring)


@settings(max_examples=15)
@given(st.integers(0, 10 ** 6))
def test_chain_rule_containment(seed):
    """JM(X) ⊆ N(X) for every germ (chain rule)."""
    g = _random_germ(seed)
    if not g.ideal_X.generators:
        return
    assert submodule_contains(n_module(g), jacobian_module(g))
