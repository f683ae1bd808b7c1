"""Machine-readable check reports: structure, JSON schema, (de)serialization.

Reports always carry raw residuals next to the tolerance that judged them, so
pass/fail flags are recomputable from the report alone.  JSON serialization
is canonical (sorted keys) and byte-identical across runs with the same
config and seed, except for ``wall_time``.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

__all__ = ["CheckRecord", "CheckReport", "REPORT_SCHEMA", "emit_report", "parse_report"]


@dataclass(frozen=True)
class CheckRecord:
    """One named check: residual vs tolerance.

    ``gating`` checks decide the run's exit status; non-gating ones are
    classification measurements (e.g. normality on a model that is simply not
    normal) feeding the verdicts.
    """

    name: str
    residual: float
    tolerance: float
    passed: bool
    gating: bool
    note: str = ""


@dataclass
class CheckReport:
    """Full result bundle of a catalog run."""

    manifold: dict
    checks: list[CheckRecord]
    fits: dict
    spectrum: dict | None
    h_sectional: dict | None
    verdicts: dict
    seed: int
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if c.gating)

    def to_dict(self) -> dict:
        return {
            "manifold": self.manifold,
            "checks": [asdict(c) for c in self.checks],
            "fits": self.fits,
            "spectrum": self.spectrum,
            "h_sectional": self.h_sectional,
            "verdicts": self.verdicts,
            "seed": self.seed,
            "wall_time": self.wall_time,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CheckReport":
        return cls(
            manifold=data["manifold"],
            checks=[CheckRecord(**c) for c in data["checks"]],
            fits=data["fits"],
            spectrum=data["spectrum"],
            h_sectional=data["h_sectional"],
            verdicts=data["verdicts"],
            seed=data["seed"],
            wall_time=data["wall_time"],
        )


_NUMBER_OR_NULL = {"type": ["number", "null"]}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["manifold", "checks", "fits", "spectrum", "h_sectional", "verdicts", "seed", "wall_time"],
    "properties": {
        "manifold": {
            "type": "object",
            "required": ["key", "label", "n", "s", "dim", "convention"],
            "properties": {
                "key": {"type": "string"},
                "label": {"type": "string"},
                "n": {"type": "integer"},
                "s": {"type": "integer"},
                "dim": {"type": "integer"},
                "convention": {"enum": ["half", "plain"]},
            },
        },
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "residual", "tolerance", "passed", "gating"],
                "properties": {
                    "name": {"type": "string"},
                    "residual": {"type": "number"},
                    "tolerance": {"type": "number"},
                    "passed": {"type": "boolean"},
                    "gating": {"type": "boolean"},
                    "note": {"type": "string"},
                },
            },
        },
        "fits": {
            "type": "object",
            "required": ["nullity"],
            "properties": {
                "nullity": {
                    "type": ["object", "null"],
                    "properties": {
                        "kappa": {"type": "number"},
                        "mu": _NUMBER_OR_NULL,
                        "mu_determined": {"type": "boolean"},
                        "residual": {"type": "number"},
                        "condition": {"type": "number"},
                        "lambda": _NUMBER_OR_NULL,
                    },
                },
                "gssf": {"type": ["object", "null"]},
                "trans_s": {"type": ["object", "null"]},
            },
        },
        "spectrum": {
            "type": ["object", "null"],
            "properties": {
                "lambda": _NUMBER_OR_NULL,
                "eigenvalue_residual": {"type": "number"},
                "h_equal_residual": {"type": "number"},
                "f_swap_residual": _NUMBER_OR_NULL,
                "h_zero": {"type": "boolean"},
            },
        },
        "h_sectional": {
            "type": ["object", "null"],
            "properties": {
                "mean": {"type": "number"},
                "spread": {"type": "number"},
                "predicted": _NUMBER_OR_NULL,
            },
        },
        "verdicts": {
            "type": "object",
            "required": [
                "is_metric_f_contact",
                "is_normal",
                "is_s_manifold",
                "is_space_form_candidate",
            ],
            "additionalProperties": {"type": ["boolean", "null"]},
        },
        "seed": {"type": "integer"},
        "wall_time": {"type": "number"},
    },
}


def emit_report(report: CheckReport, format: str = "json") -> bytes:
    """Serialize a report as canonical JSON or a human-readable table."""
    if format == "json":
        return (json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n").encode()
    if format == "text":
        lines = []
        m = report.manifold
        lines.append(
            f"manifold {m['key']}  (n={m['n']}, s={m['s']}, dim={m['dim']}, "
            f"convention={m['convention']})"
        )
        for c in report.checks:
            verdict = "PASS" if c.passed else "FAIL"
            tag = "" if c.gating else "  [diagnostic]"
            note = f"  ({c.note})" if c.note else ""
            lines.append(f"  {c.name:<18} {c.residual:12.3e}  tol {c.tolerance:.0e}  {verdict}{tag}{note}")
        nf = report.fits.get("nullity")
        if nf:
            mu = "free" if nf["mu"] is None else f"{nf['mu']:.9g}"
            lines.append(f"  fit: kappa={nf['kappa']:.9g}  mu={mu}  residual={nf['residual']:.3e}")
        if report.h_sectional:
            h = report.h_sectional
            pred = "n/a" if h["predicted"] is None else f"{h['predicted']:.9g}"
            lines.append(f"  H: mean={h['mean']:.9g}  spread={h['spread']:.3e}  predicted={pred}")
        lines.append("  verdicts: " + ", ".join(f"{k}={v}" for k, v in report.verdicts.items()))
        lines.append(f"  overall: {'PASS' if report.passed else 'FAIL'}")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown report format {format!r}")


def parse_report(data: bytes | str) -> CheckReport:
    """Inverse of ``emit_report(..., 'json')``."""
    if isinstance(data, bytes):
        data = data.decode()
    return CheckReport.from_dict(json.loads(data))
