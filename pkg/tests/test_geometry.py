import random

import pytest

from oracles import closed_form_isolated, closed_form_smoothing
from seids import InputError
from seids.geometry import (has_smoothing, is_isolated_singularity, pullback_germ,
                            rank_stratum_ideal, seids_check, strata_chain, stratum_codim,
                            symmetric_minors)
from seids.poly import PolynomialRing
from seids.stdbasis import Ideal, dimension, ideals_equal, is_unit_ideal

TABLE = [(n, r, q) for n in range(2, 5) for r in range(1, n) for q in range(1, 9)]


@pytest.mark.parametrize("n,r,q", TABLE)
def test_criteria_table(n, r, q):
    assert is_isolated_singularity(n, r, q) == closed_form_isolated(n, r, q)
    assert has_smoothing(n, r, q) == closed_form_smoothing(n, r, q)


def test_criteria_examples():
    assert is_isolated_singularity(4, 2, 6) and not has_smoothing(4, 2, 6)
    assert is_isolated_singularity(2, 1, 3) and not is_isolated_singularity(2, 1, 4)
    assert has_smoothing(2, 1, 2) and not has_smoothing(2, 1, 3)
    assert has_smoothing(3, 1, 5)
    with pytest.raises(InputError):
        is_isolated_singularity(2, 2, 3)


def _random_linear(n, q, rng, constant=False):
    ring = PolynomialRing([f"z{k}" for k in range(q)])
    zs = ring.gens()
    M = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            e = sum((rng.randint(-9, 9) * v for v in zs), ring.zero())
            if constant:
                e = e + rng.randint(1, 9)
            M[i][j] = M[j][i] = e
    return M, ring


SMALL = [(n, r, q) for n in (2, 3, 4) for r in range(1, n) for q in range(1, 9)]


@pytest.mark.parametrize("n,r,q", SMALL)
def test_criteria_match_random_linear_sections(n, r, q):
    """Sing X = F⁻¹(S_{r-1}) for generic F; a smoothing exists iff a generic
    translate of F misses S_{r-1}."""
    rng = random.Random(f"{n}{r}{q}")
    F, ring = _random_linear(n, q, rng)
    sing = Ideal(symmetric_minors(F, r), ring)
    assert (dimension(sing, local=True) <= 0) == is_isolated_singularity(n, r, q)
    G, _ = _random_linear(n, q, rng, constant=True)
    moved = Ideal(symmetric_minors(G, r), ring)
    assert is_unit_ideal(moved) == has_smoothing(n, r, q)


def test_stratum_codim():
    assert stratum_codim(3, 1) == 3
    assert stratum_codim(5, 5) == 0
    assert stratum_codim(2, 0) == 3
    for n in range(1, 6):
        for i in range(n):
            r = i + 1
            assert stratum_codim(n, i) == (n - r + 1) * (n - r + 2) // 2


@pytest.mark.parametrize("n,i", [(2, 0), (2, 1), (3, 0), (3, 1), (3, 2), (4, 2), (4, 3)])
def test_rank_stratum_codim_by_dimension(n, i):
    S = rank_stratum_ideal(n, i)
    N = n * (n + 1) // 2
    assert N - dimension(S.ideal) == S.codim == stratum_codim(n, i)


def test_rank_stratum_examples():
    S = rank_stratum_ideal(2, 0)
    assert len(S.minors) == 3 and S.codim == 3
    S = rank_stratum_ideal(2, 1)
    a, b, c = S.space.ring.gens()
    assert S.minors == (a * c - b * b,)
    # six symmetric 2x2 minors of a 3x3 matrix, generating a codimension 3 ideal
    S = rank_stratum_ideal(3, 1)
    assert len(S.minors) == 6
    assert 6 - dimension(S.ideal) == 3
    with pytest.raises(InputError):
        rank_stratum_ideal(2, 2)


def test_pullback_examples():
    R = PolynomialRing(["x", "y", "z"])
    g = pullback_germ([["x", "y"], ["y", "z"]], 1, R)
    assert ideals_equal(g.ideal_X, Ideal([R.parse("x*z - y^2")], R)) and g.d == 2
    P = PolynomialRing(["x", "y"])
    cusp = pullback_germ([["y", "x"], ["x", "y^2"]], 1, P)
    assert ideals_equal(cusp.ideal_X, Ideal([P.parse("y^3 - x^2")], P)) and cusp.d == 1
    node = pullback_germ([["x", "y"], ["y", "x"]], 1, P)
    assert ideals_equal(node.ideal_X, Ideal([P.parse("x^2 - y^2")], P)) and node.d == 1
    chain = strata_chain(cusp)
    assert ideals_equal(chain[0], Ideal(P.gens(), P), local=True)
    chain = strata_chain(g)
    assert ideals_equal(chain[0], Ideal(R.gens(), R))


def test_pullback_errors():
    P = PolynomialRing(["x", "y"])
    with pytest.raises(InputError, match="asymmetric"):
        pullback_germ([["x", "y"], ["x", "y"]], 1, P)
    with pytest.raises(InputError, match="F\\(0\\)"):
        pullback_germ([["x + 1", "y"], ["y", "x"]], 1, P)


def test_non_expected_codimension_flagged():
    P = PolynomialRing(["x", "y"])
    g = pullback_germ([["x", "0"], ["0", "0"]], 1, P)
    assert g.expected_codimension is False


def test_audit_accepts_standard_germs():
    P = PolynomialRing(["x", "y"])
    for F in ([["x", "y"], ["y", "x"]], [["y", "x"], ["x", "y^2"]]):
        assert seids_check(pullback_germ(F, 1, P)).is_seids
    R = PolynomialRing(["x", "y", "z"])
    assert seids_check(pullback_germ([["x", "y"], ["y", "z"]], 1, R)).is_seids


def test_audit_negative_control():
    R = PolynomialRing(["x", "y", "z"])
    rep = seids_check(pullback_germ([["x", "y"], ["y", "z^2"]], 1, R))
    assert not rep.is_seids
    assert rep.failing_strata == [1]
    assert "transverse" in rep.per_stratum[1].reason


@pytest.mark.parametrize("seed", range(3))
def test_random_linear_germs_are_seids(seed):
    rng = random.Random(seed)
    for n, q in ((2, 3), (2, 2), (3, 4)):
        F, ring = _random_linear(n, q, rng)
        assert seids_check(pullback_germ(F, 1, ring)).is_seids
