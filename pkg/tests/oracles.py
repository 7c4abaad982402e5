"""Independent reference computations used by the tests.

Nothing here calls the standard-basis engine: local colengths come from
ranks of truncated multiplication matrices (sympy's exact DomainMatrix), and
plane-curve polar counts come from Teissier's formula m = μ + mult − 1.
"""

from fractions import Fraction
from itertools import combinations_with_replacement

from sympy import QQ as SQQ
from sympy.polys.matrices import DomainMatrix


def monomials_below(nvars, N):
    """Exponent tuples of total degree < N."""
    out = []
    for d in range(N):
        for c in combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for k in c:
                e[k] += 1
            out.append(tuple(e))
    return out


def truncated_quotient_dim(vectors, nvars, N, rank=1):
    """dim_Q Q[x]^rank / (M + m^N Q[x]^rank).

    ``vectors`` are lists of ``rank`` dicts (exponent -> coefficient); for
    rank 1 plain dicts are accepted.
    """
    if rank == 1:
        vectors = [v if isinstance(v, list) else [v] for v in vectors]
    monos = monomials_below(nvars, N)
    index = {(k, e): a for a, (k, e) in enumerate((k, e) for k in range(rank) for e in monos)}
    rows = []
    for v in vectors:
        for m in monos:
            row = {}
            for k, f in enumerate(v):
                for e, c in f.items():
                    t = tuple(a + b for a, b in zip(e, m))
                    if sum(t) < N:
                        row[index[k, t]] = c
            if row:
                rows.append(row)
    if not rows:
        return len(index)
    M = DomainMatrix({i: {j: SQQ(int(Fraction(c).numerator), int(Fraction(c).denominator))
                          for j, c in r.items()} for i, r in enumerate(rows)},
                     (len(rows), len(index)), SQQ)
    return len(index) - M.rank()


def local_colength(polys, nvars, max_degree=16, rank=1):
    """ℓ(O/I) at the origin, or None if it has not stabilised by ``max_degree``.

    ℓ(O/(I + m^N)) is nondecreasing in N, and equality at N and N+1 forces
    m^N ⊆ I + m^{N+1}, hence m^N ⊆ I locally by Nakayama.
    """
    prev = None
    for N in range(1, max_degree + 1):
        cur = truncated_quotient_dim(polys, nvars, N, rank)
        if cur == prev:
            return cur
        prev = cur
    return None


def poly_terms(p):
    """Polynomial -> {exponent tuple: Fraction}."""
    return {e: Fraction(int(c.numerator), int(c.denominator)) for e, c in p.terms.items()}


def derivative(terms, k):
    out = {}
    for e, c in terms.items():
        if e[k]:
            f = list(e)
            f[k] -= 1
            out[tuple(f)] = out.get(tuple(f), 0) + c * e[k]
    return {e: c for e, c in out.items() if c}


def milnor_number(f_terms, nvars):
    return local_colength([derivative(f_terms, k) for k in range(nvars)], nvars)


def order(f_terms):
    return min(sum(e) for e in f_terms)


def plane_curve_polar_multiplicity(f_terms):
    """m_1 = μ + mult − 1 for a reduced plane curve germ."""
    return milnor_number(f_terms, 2) + order(f_terms) - 1


def det2(F):
    """Determinant of a 2x2 matrix of term dicts."""
    def mul(a, b):
        out = {}
        for e, c in a.items():
            for f, d in b.items():
                k = tuple(x + y for x, y in zip(e, f))
                out[k] = out.get(k, 0) + c * d
        return out
    ad, bc = mul(F[0][0], F[1][1]), mul(F[0][1], F[1][0])
    out = dict(ad)
    for e, c in bc.items():
        out[e] = out.get(e, 0) - c
    return {e: c for e, c in out.items() if c}


def closed_form_isolated(n, r, q):
    """Isolated singularity iff the deeper stratum preimage is at most a point."""
    return q <= (n - r + 1) * (n - r + 2) // 2


def closed_form_smoothing(n, r, q):
    return q < (n - r + 1) * (n - r + 2) // 2
