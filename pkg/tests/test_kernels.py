import os
import subprocess
import sys

import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from seids import _kernels_py as py
from seids import kernels

try:
    from seids import _kernels as cy
except ImportError:  # extension not built
    cy = None

needs_ext = pytest.mark.skipif(cy is None, reason="compiled kernels not built")

terms = st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.lists(st.integers(0, 6), min_size=n, max_size=n),
                        st.lists(st.integers(0, 6), min_size=n, max_size=n),
                        st.integers(0, 1), st.integers(0, 1)))


def _pair(t):
    a, b, ca, cb = t
    return tuple(a) + (ca,), tuple(b) + (cb,)


@needs_ext
@given(terms)
def test_term_kernels_agree(t):
    a, b = _pair(t)
    assert cy.divides(a, b) == py.divides(a, b)
    assert cy.term_lcm(a, b) == py.term_lcm(a, b)
    assert cy.coprime(a, b) == py.coprime(a, b)
    assert cy.degree(a) == py.degree(a)
    m = a[:-1] + (0,)
    assert cy.term_mul(b, m) == py.term_mul(b, m)
    if py.divides(a, b):
        assert cy.term_div(b, a) == py.term_div(b, a)


coeff_maps = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3), st.just(0)),
                             st.integers(-5, 5).filter(bool).map(mpq), max_size=6)


@needs_ext
@given(coeff_maps, coeff_maps, st.integers(-3, 3).filter(bool))
def test_axpy_and_scaled_agree(h, g, c):
    m = (1, 0, 0)
    h1, h2 = dict(h), dict(h)
    cy.axpy(h1, mpq(c), m, g)
    py.axpy(h2, mpq(c), m, g)
    assert h1 == h2
    assert all(h1.values())
    assert cy.scaled(g, mpq(c), m) == py.scaled(g, mpq(c), m)


def test_backend_selection_reported():
    assert kernels.COMPILED == (kernels._impl is not py)


def test_pure_python_fallback_gives_same_colength():
    code = ("from seids import kernels, PolynomialRing, Ideal, colength;"
            "R = PolynomialRing(['x', 'y', 'z']);"
            "I = Ideal.parse(['x^3 + y^4 + z^5 + x*y*z', 'x*y^2 + z^3', 'y^3 + x^2*z'], R);"
            "print(kernels.COMPILED, colength(I))")
    out = {}
    for flag in ("", "1"):
        env = dict(os.environ, SEIDS_PURE_PYTHON=flag)
        if not flag:
            env.pop("SEIDS_PURE_PYTHON")
        res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                             text=True, check=True)
        out[flag] = res.stdout.split()
    assert out["1"][0] == "False"
    assert out[""][1] == out["1"][1]
