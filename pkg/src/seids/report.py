"""Command dispatch and report assembly for the ``seids`` CLI."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional

from .errors import BudgetExceeded, GenericityError, InputError
from .geometry import has_smoothing, is_isolated_singularity, seids_check, stratum_codim
from .invariants import germ_invariants, whitney_verdict
from .problem import ProblemSpec
from .stdbasis import BudgetMeter

COMMANDS = ("audit", "invariants", "family-check")
REPORT_VERSION = 1


@dataclass
class Report:
    command: str
    payload: dict
    seconds: float = 0.0
    spairs: int = 0
    exit_code: int = 0

    def as_dict(self) -> dict:
        out = dict(self.payload)
        out["timing"] = {"seconds": round(self.seconds, 3)}
        return out

    def structured(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def text(self) -> str:
        return render_text(self.as_dict())


def _sample_text(s) -> List[str]:
    return [str(v) for v in s]


def criteria(n: int, r: int, q: int) -> dict:
    out = {"q": q, "codim": stratum_codim(n, r), "expected_dimension": q - stratum_codim(n, r)}
    if 0 < r < n:
        out["isolated"] = is_isolated_singularity(n, r, q)
        out["smoothable"] = has_smoothing(n, r, q)
    else:
        out["isolated"] = out["smoothable"] = None
    return out


def _audit_one(g) -> dict:
    return seids_check(g).as_dict()


def _invariants_task(args):
    spec, sample, budget = args
    with BudgetMeter(budget) as meter:
        germ = spec.family().specialize(sample) if spec.parameters else spec.germ()
        audit = seids_check(germ)
        if not audit.is_seids:
            raise InputError(f"sample {_sample_text(sample)} is not a SEIDS "
                             f"(failing strata {audit.failing_strata})")
        recs = germ_invariants(germ, spec.context())
    return [r.as_dict() for r in recs], meter.used


def run(command: str, spec: ProblemSpec, budget: Optional[int] = None,
        jobs: int = 1, top_only: bool = False, seed_source: str = "problem") -> Report:
    """Execute ``command`` on ``spec``; raises on fatal errors (no partial reports)."""
    if command not in COMMANDS:
        raise InputError(f"unknown command {command!r}; expected one of {', '.join(COMMANDS)}")
    budget = budget if budget is not None else spec.budget
    start = time.perf_counter()
    payload = {
        "report_version": REPORT_VERSION,
        "command": command,
        "problem": spec.to_dict(),
        "seed": {"value": spec.seed, "source": seed_source},
        "criteria": criteria(spec.n, spec.r, spec.q),
        "budget": {"limit": budget},
    }
    exit_code = 0
    used = 0
    if command == "audit":
        with BudgetMeter(budget) as meter:
            audits = [{"sample": _sample_text(s), **_audit_one(g)} for s, g in spec.germs()]
        used = meter.used
        payload["audit"] = audits
        payload["is_seids"] = all(a["is_seids"] for a in audits)
    elif command == "invariants":
        samples = [s for s, _ in spec.germs()]
        tasks = [(spec, s, budget) for s in samples]
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_invariants_task, tasks))
            used = sum(u for _, u in results)
            if budget is not None and used > budget:
                raise BudgetExceeded(f"run exceeded the budget of {budget} S-pairs")
        else:
            with BudgetMeter(budget) as meter:
                results = [_invariants_task((spec, s, None)) for s in samples]
            used = meter.used
        payload["invariants"] = [{"sample": _sample_text(s), "records": recs}
                                 for s, (recs, _) in zip(samples, results)]
    else:
        if not spec.parameters:
            raise InputError("family-check needs a problem with parameters and samples")
        if not spec.samples:
            raise InputError("samples: family-check needs at least one sample point")
        fam = spec.family()
        with BudgetMeter(budget) as meter:
            verdict = whitney_verdict(fam, spec.context(), top_only=top_only)
        used = meter.used
        payload["verdict"] = verdict.as_dict()
        if verdict.verdict == "indeterminate" and any(
                v.error for vs in verdict.values.values() for v in vs):
            exit_code = GenericityError.exit_code
    payload["budget"]["spairs_used"] = used
    return Report(command, payload, time.perf_counter() - start, used, exit_code)


def error_payload(exc: Exception) -> dict:
    code = getattr(exc, "code", "internal-error")
    return {"error": {"code": code, "type": type(exc).__name__, "message": str(exc),
                      "exit_code": getattr(exc, "exit_code", 1)}}


# ------------------------------------------------------------------ text

def render_text(d: dict) -> str:
    lines = []
    p = d["problem"]
    lines.append(f"seids {d['command']}: n={p['n']} r={p['r']} q={len(p['variables'])} "
                 f"seed={d['seed']['value']}")
    c = d["criteria"]
    lines.append(f"  expected dimension d = {c['expected_dimension']} (codim {c['codim']}); "
                 f"isolated={_yn(c['isolated'])} smoothable={_yn(c['smoothable'])}")
    for a in d.get("audit", []):
        tag = f" at {a['sample']}" if a["sample"] else ""
        lines.append(f"  SEIDS{tag}: {_yn(a['is_seids'])}"
                     + (f" (failing strata {a['failing_strata']})" if a["failing_strata"] else ""))
        for s in a["per_stratum"]:
            if s["reason"]:
                lines.append(f"    stratum {s['stratum']}: {s['reason']}")
    for block in d.get("invariants", []):
        tag = f" at {block['sample']}" if block["sample"] else ""
        lines.append(f"  invariants{tag}:")
        for rec in block["records"]:
            parts = [f"{k}={v}" for k, v in rec.items() if k != "stratum"]
            lines.append(f"    stratum {rec['stratum']}: " + ", ".join(parts))
    if "verdict" in d:
        v = d["verdict"]
        lines.append(f"  verdict: {v['verdict']} ({v['scope']})")
        for i, seq in sorted(v["values"].items()):
            vals = ", ".join(f"{s['sample']}->{s['value']}" for s in seq)
            lines.append(f"    stratum {i}: {vals}")
        for cert in v["certificates"]:
            if "stratum" in cert:
                lines.append(f"    certificate: stratum {cert['stratum']} changes "
                             f"{cert['values'][0]} -> {cert['values'][1]} between "
                             f"{cert['samples'][0]} and {cert['samples'][1]}")
            else:
                lines.append(f"    certificate: {cert['reason']} {cert.get('sample', '')}")
    b = d["budget"]
    lines.append(f"  S-pairs used: {b['spairs_used']}"
                 + (f" of {b['limit']}" if b["limit"] else ""))
    lines.append(f"  time: {d['timing']['seconds']} s")
    return "\n".join(lines) + "\n"


def _yn(v) -> str:
    return "n/a" if v is None else ("yes" if v else "no")


__all__ = ["Report", "run", "COMMANDS", "criteria", "error_payload", "render_text"]
