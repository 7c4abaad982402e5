"""Problem files: JSON documents describing a germ or a family of germs.

A problem names the matrix size ``n``, the rank ``r``, the germ variables,
optional family parameters with sample points, and the upper triangle of a
symmetric polynomial matrix (entries below the diagonal may be ``null``).

    {
      "schema_version": 1,
      "n": 2, "r": 1,
      "variables": ["x", "y"],
      "parameters": ["t"],
      "matrix": [["y", "x"], [null, "t*y + y^2"]],
      "samples": [["0"], ["1"]],
      "seed": 7
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple, Union

import jsonschema

from .errors import InputError
from .geometry import DeterminantalGerm, pullback_germ
from .invariants import GenericityContext, GermFamily
from .poly import PolynomialRing, to_rational

SCHEMA_VERSION = 1

_NAME = {"type": "string", "pattern": r"^[A-Za-z_][A-Za-z0-9_]*$"}
_RATIONAL = {"oneOf": [{"type": "integer"},
                       {"type": "string", "pattern": r"^\s*-?\d+\s*(/\s*\d+\s*)?$"}]}

PROBLEM_SCHEMA = {
    "type": "object",
    "required": ["n", "r", "variables", "matrix"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "n": {"type": "integer", "minimum": 1},
        "r": {"type": "integer", "minimum": 0},
        "variables": {"type": "array", "items": _NAME, "minItems": 1},
        "parameters": {"type": "array", "items": _NAME},
        "matrix": {
            "type": "array",
            "items": {"type": "array",
                      "items": {"oneOf": [{"type": "string"}, {"type": "integer"},
                                          {"type": "null"}]}},
        },
        "samples": {"type": "array", "items": {"type": "array", "items": _RATIONAL}},
        "seed": {"type": "integer"},
        "budget": {"type": "integer", "minimum": 1},
        "genericity": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "coefficient_range": {"type": "integer", "minimum": 1},
                "resamples": {"type": "integer", "minimum": 1},
                "perturbation": {"enum": ["constant", "affine"]},
            },
        },
        "description": {"type": "string"},
    },
}


@dataclass(frozen=True)
class ProblemSpec:
    n: int
    r: int
    variables: Tuple[str, ...]
    parameters: Tuple[str, ...]
    matrix: Tuple[Tuple[str, ...], ...]
    samples: Tuple[Tuple[Fraction, ...], ...] = ()
    seed: int = 0
    budget: Optional[int] = None
    coefficient_range: int = 10_000
    resamples: int = 2
    perturbation: str = "constant"
    description: str = ""

    @property
    def q(self) -> int:
        return len(self.variables)

    @property
    def ring(self) -> PolynomialRing:
        return PolynomialRing(self.variables + self.parameters)

    def matrix_polynomials(self, ring: PolynomialRing = None):
        ring = ring or self.ring
        return tuple(tuple(ring.parse(e) for e in row) for row in self.matrix)

    def context(self, seed: Optional[int] = None) -> GenericityContext:
        return GenericityContext(self.seed if seed is None else seed, self.coefficient_range,
                                 self.resamples, perturbation=self.perturbation)

    def germ(self) -> DeterminantalGerm:
        """The germ itself (problems without parameters)."""
        if self.parameters:
            raise InputError("problem has parameters; specialise a sample first")
        ring = PolynomialRing(self.variables)
        return pullback_germ(self.matrix_polynomials(ring), self.r, ring)

    def family(self, samples=None) -> GermFamily:
        ring = self.ring
        samples = self.samples if samples is None else samples
        return GermFamily(self.n, self.r, ring, self.variables, self.parameters,
                          self.matrix_polynomials(ring), [tuple(s) for s in samples])

    def germs(self) -> List[Tuple[Tuple[Fraction, ...], DeterminantalGerm]]:
        """(sample, germ) pairs: one per sample, or the germ itself."""
        if not self.parameters:
            return [((), self.germ())]
        if not self.samples:
            raise InputError("samples: a family needs at least one sample point")
        fam = self.family()
        return [(s, fam.specialize(s)) for s in self.samples]

    def with_samples(self, samples) -> "ProblemSpec":
        return replace(self, samples=_check_samples(samples, len(self.parameters), "samples"))

    def to_dict(self) -> dict:
        n = self.n
        matrix = [[self.matrix[i][j] if j >= i else None for j in range(n)] for i in range(n)]
        out = {
            "schema_version": SCHEMA_VERSION,
            "n": self.n,
            "r": self.r,
            "variables": list(self.variables),
            "parameters": list(self.parameters),
            "matrix": matrix,
            "samples": [[_rational_text(v) for v in s] for s in self.samples],
            "seed": self.seed,
            "genericity": {"coefficient_range": self.coefficient_range,
                           "resamples": self.resamples,
                           "perturbation": self.perturbation},
        }
        if self.budget is not None:
            out["budget"] = self.budget
        if self.description:
            out["description"] = self.description
        return out


def _rational_text(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _path(parts) -> str:
    out = ""
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else str(p))
    return out or "<root>"


def _check_samples(samples, k: int, where: str) -> Tuple[Tuple[Fraction, ...], ...]:
    out = []
    for a, s in enumerate(samples):
        s = list(s)
        if len(s) != k:
            raise InputError(f"{where}[{a}]: expected {k} coordinates, got {len(s)}")
        row = []
        for b, v in enumerate(s):
            try:
                q = to_rational(v)
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise InputError(f"{where}[{a}][{b}]: not a rational number: {v!r}") from exc
            row.append(Fraction(int(q.numerator), int(q.denominator)))
        out.append(tuple(row))
    return tuple(out)


def problem_from_dict(data) -> ProblemSpec:
    """Validate a decoded problem document and complete the symmetric matrix."""
    try:
        jsonschema.validate(data, PROBLEM_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise InputError(f"{_path(exc.absolute_path)}: {exc.message}") from None
    n, r = data["n"], data["r"]
    variables = tuple(data["variables"])
    parameters = tuple(data.get("parameters", ()))
    names = variables + parameters
    if len(set(names)) != len(names):
        raise InputError("variables/parameters: names must be distinct")
    if r >= n:
        raise InputError(f"r: rank {r} must be smaller than n = {n}")
    raw = data["matrix"]
    if len(raw) != n or any(len(row) != n for row in raw):
        raise InputError(f"matrix: expected a {n}x{n} array")
    ring = PolynomialRing(names)
    polys = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            e = raw[i][j]
            if e is None:
                continue
            try:
                polys[i][j] = ring.parse(str(e))
            except InputError as exc:
                raise InputError(f"matrix[{i}][{j}]: {exc}") from None
    full = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a, b = polys[i][j], polys[j][i]
            if a is None and b is None:
                raise InputError(f"matrix[{i}][{j}]: missing entry")
            if a is not None and b is not None and a != b:
                raise InputError(f"matrix[{j}][{i}]: asymmetric entries ({a} vs {b})")
            full[i][j] = full[j][i] = a if a is not None else b
    at_origin = {v: 0 for v in variables}
    for i in range(n):
        for j in range(n):
            if not full[i][j].substitute(at_origin).is_zero():
                raise InputError(f"matrix[{i}][{j}]: F(0) ≠ 0 (translate so that F(0) = 0)")
    samples = _check_samples(data.get("samples", ()), len(parameters), "samples")
    if not parameters and any(samples):
        raise InputError("samples: problem has no parameters")
    gen = data.get("genericity", {})
    return ProblemSpec(
        n=n, r=r, variables=variables, parameters=parameters,
        matrix=tuple(tuple(str(e) for e in row) for row in full),
        samples=samples if parameters else (),
        seed=data.get("seed", 0),
        budget=data.get("budget"),
        coefficient_range=gen.get("coefficient_range", 10_000),
        resamples=gen.get("resamples", 2),
        perturbation=gen.get("perturbation", "constant"),
        description=data.get("description", ""),
    )


def loads_problem(text: str) -> ProblemSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {exc}") from None
    return problem_from_dict(data)


def load_problem(path: Union[str, Path]) -> ProblemSpec:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return loads_problem(text)


def emit(spec: ProblemSpec) -> str:
    return json.dumps(spec.to_dict(), indent=2, ensure_ascii=False) + "\n"


__all__ = ["ProblemSpec", "PROBLEM_SCHEMA", "SCHEMA_VERSION", "load_problem", "loads_problem",
           "problem_from_dict", "emit"]
