"""Compare the compiled term kernels with the pure-Python fallback.

Each backend runs in its own interpreter (the backend is fixed at import),
so the script re-invokes itself with and without SEIDS_PURE_PYTHON.

    python benchmarks/bench_kernels.py            # both backends, summary table
    python benchmarks/bench_kernels.py --worker   # one backend, JSON timings
"""

import argparse
import json
import os
import random
import subprocess
import sys
import time


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def worker(repeat: int) -> dict:
    from seids import kernels as K
    from seids.poly import QQ, PolynomialRing
    from seids.stdbasis import Ideal, colength, groebner_basis

    rng = random.Random(0)
    nv = 5
    terms = [tuple(rng.randint(0, 4) for _ in range(nv)) + (0,) for _ in range(400)]
    g = {t: QQ(rng.randint(1, 9)) for t in terms}
    m = (1, 0, 2, 0, 1, 0)

    def divides():
        for a in terms:
            for b in terms[:50]:
                K.divides(a, b)

    def lcm():
        for a in terms:
            for b in terms[:50]:
                K.term_lcm(a, b)

    def axpy():
        for _ in range(40):
            h = dict(g)
            K.axpy(h, QQ(3), m, g)

    def degree():
        for _ in range(50):
            for a in terms:
                K.degree(a)

    R = PolynomialRing(["a", "b", "c", "d"])
    a, b, c, d = R.gens()
    cyclic4 = Ideal([a + b + c + d, a * b + b * c + c * d + d * a,
                     a * b * c + b * c * d + c * d * a + d * a * b, a * b * c * d - 1], R)
    katsura = Ideal([a + 2 * b + 2 * c + 2 * d - 1,
                     a ** 2 + 2 * b ** 2 + 2 * c ** 2 + 2 * d ** 2 - a,
                     2 * a * b + 2 * b * c + 2 * c * d - b,
                     b ** 2 + 2 * a * c + 2 * b * d - c], R)
    S = PolynomialRing(["x", "y", "z"])
    x, y, z = S.gens()
    local = Ideal([x ** 3 + y ** 4 + z ** 5 + x * y * z, x * y ** 2 + z ** 3, y ** 3 + x ** 2 * z], S)

    F = PolynomialRing(list("abcde"))
    v = F.gens()
    cyclic5 = []
    for k in range(1, 5):
        s = F.zero()
        for i in range(5):
            t = F.one()
            for j in range(k):
                t = t * v[(i + j) % 5]
            s = s + t
        cyclic5.append(s)
    p = F.one()
    for u in v:
        p = p * u
    cyclic5 = Ideal(cyclic5 + [p - 1], F)

    from seids.geometry import pullback_germ
    from seids.invariants import GenericityContext, relative_polar_multiplicity_md
    T = PolynomialRing(["x", "y", "z", "w"])
    germ = pullback_germ([["x", "y", "z"], ["y", "z", "w"], ["z", "w", "x"]], 1, T)

    cases = {
        "divides (20k pairs)": divides,
        "term_lcm (20k pairs)": lcm,
        "axpy (40 x 400 terms)": axpy,
        "degree (20k terms)": degree,
        "Groebner cyclic-4": lambda: groebner_basis(cyclic4),
        "Groebner katsura-3": lambda: groebner_basis(katsura),
        "Mora colength (3 vars)": lambda: colength(local),
        "Groebner cyclic-5": lambda: groebner_basis(cyclic5),
        "m_1 of a 3x3 germ (q=4)": lambda: relative_polar_multiplicity_md(germ, GenericityContext(1)),
    }
    return {"compiled": K.COMPILED,
            "timings": {name: _best(fn, repeat) for name, fn in cases.items()}}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--worker", action="store_true")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if args.worker:
        print(json.dumps(worker(args.repeat)))
        return
    results = {}
    for label, extra in (("compiled", {}), ("python", {"SEIDS_PURE_PYTHON": "1"})):
        env = dict(os.environ, **extra)
        out = subprocess.run([sys.executable, __file__, "--worker", "--repeat", str(args.repeat)],
                             env=env, capture_output=True, text=True, check=True)
        results[label] = json.loads(out.stdout)
    if not results["compiled"]["compiled"]:
        print("note: compiled kernels are not built; both columns use the Python fallback")
    print(f"{'case':28s} {'compiled (s)':>13s} {'python (s)':>11s} {'speedup':>8s}")
    for name, tc in results["compiled"]["timings"].items():
        tp = results["python"]["timings"][name]
        print(f"{name:28s} {tc:13.4f} {tp:11.4f} {tp / tc:7.2f}x")


if __name__ == "__main__":
    main()
