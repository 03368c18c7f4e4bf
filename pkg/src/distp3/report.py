"""The analysis pipeline and its JSON report."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Any, Optional, Sequence

from .errors import DistributionError, InconsistentInvariants, ValidationError
from .forms import (
    DistributionForm,
    contract_radial,
    exterior_derivative,
    integrability_defect,
    make_distribution_form,
    martinet_polynomial,
)
from .groebner import Ideal
from .hilbert import hilbert_polynomial
from .invariants import (
    additivity_chi,
    bounds_report,
    chern_from_invariants,
    chi_tangent,
    classify_low_degree,
    hard_violations,
    invariants_from_hilbert,
    stability_verdict,
)
from .parser import parse_poly
from .poly import Poly

FORMAT = "dist3/1"


def frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


@dataclass
class DistributionReport:
    input: list
    degree: int
    euler_ok: bool
    integrable: bool
    martinet: str
    hilbert_numerator: Optional[list] = None
    hilbert_polynomial: Optional[list] = None
    dim_Z: Optional[int] = None
    deg_C: Optional[int] = None
    p_a_C: Optional[int] = None
    len_U: Optional[int] = None
    kappa: Optional[int] = None
    chern: Optional[dict] = None
    locally_free: Optional[bool] = None
    parity_ok: Optional[bool] = None
    bounds: Optional[list] = None
    stability: Optional[dict] = None
    classification: Optional[str] = None
    chi_tangent: Optional[dict] = None
    provenance: Optional[dict] = None
    timing: dict = field(default_factory=dict)

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "format": FORMAT,
            "input": self.input,
            "degree": self.degree,
            "euler_ok": self.euler_ok,
            "integrable": self.integrable,
            "martinet": self.martinet,
            "hilbert_numerator": self.hilbert_numerator,
            "hilbert_polynomial": self.hilbert_polynomial,
            "dim_Z": self.dim_Z,
            "deg_C": self.deg_C,
            "p_a_C": self.p_a_C,
            "len_U": self.len_U,
            "kappa": self.kappa,
            "chern": self.chern,
            "locally_free": self.locally_free,
            "parity_ok": self.parity_ok,
            "bounds": self.bounds,
            "stability": self.stability,
            "classification": self.classification,
            "chi_tangent": self.chi_tangent,
            "provenance": self.provenance,
        }
        if include_timing:
            out["timing"] = {k: round(v, 6) for k, v in self.timing.items()}
        return out


class _Timer:
    def __init__(self):
        self.stages: dict = {}
        self._t = time.perf_counter()

    def lap(self, name: str):
        now = time.perf_counter()
        self.stages[name] = now - self._t
        self._t = now


def analyze_form(form: DistributionForm, skip_groebner: bool = False,
                 provenance: Optional[dict] = None) -> DistributionReport:
    """Run the whole pipeline on a validated form."""
    timer = _Timer()
    d = form.degree
    if contract_radial(exterior_derivative(form.omega)) != form.omega.scale(d + 2):
        raise InconsistentInvariants("contraction of d(omega) is not (d+2) omega")
    defect = integrability_defect(form)
    martinet = martinet_polynomial(form)
    timer.lap("exterior")
    report = DistributionReport(
        input=[str(c) for c in form.coefficients],
        degree=d,
        euler_ok=True,
        integrable=not defect,
        martinet=str(martinet),
        provenance=provenance,
    )
    if skip_groebner:
        report.timing = timer.stages
        return report

    hp = hilbert_polynomial(Ideal(form.coefficients))
    timer.lap("groebner")
    inv = invariants_from_hilbert(d, hp)
    chern = chern_from_invariants(inv)
    bounds = bounds_report(d, inv, chern)
    verdict = stability_verdict(d, inv.dim_Z, inv.deg_C, chern.c2)
    classification = classify_low_degree(d, chern, inv.dim_Z)
    chi = chi_tangent(d, chern.c2, chern.c3)
    additive = additivity_chi(d, hp.hilbert_polynomial)
    timer.lap("invariants")

    report.hilbert_numerator = list(hp.numerator)
    report.hilbert_polynomial = [frac_str(c) for c in hp.hilbert_polynomial]
    report.dim_Z = inv.dim_Z
    report.deg_C = inv.deg_C
    report.p_a_C = inv.p_a_C
    report.len_U = inv.len_U
    report.kappa = inv.kappa
    report.chern = {"c1": chern.c1, "c2": chern.c2, "c3": chern.c3}
    report.locally_free = chern.locally_free
    report.parity_ok = (d * chern.c2 - chern.c3) % 2 == 0
    report.bounds = [
        {"name": b.name, "satisfied": b.satisfied, "hard": b.hard,
         "citation": b.citation, "detail": b.detail}
        for b in bounds
    ]
    report.stability = {
        "verdict": verdict.stability,
        "rule": verdict.rule_fired,
        "rules_applicable": list(verdict.rules_applicable),
    }
    report.classification = classification
    report.chi_tangent = {
        "riemann_roch": [frac_str(c) for c in chi.riemann_roch],
        "additivity": [frac_str(c) for c in additive],
        "additivity_ok": tuple(chi.riemann_roch) == tuple(additive),
        "closed_form": [frac_str(c) for c in chi.printed],
        "closed_form_mismatch": chi.mismatch,
    }
    report.timing = timer.stages
    if not report.chi_tangent["additivity_ok"]:
        raise InconsistentInvariants("Riemann-Roch and the additivity identity disagree")
    violated = hard_violations(bounds)
    if violated:
        raise InconsistentInvariants(
            "violated bounds: " + ", ".join(f"{b.name} ({b.detail})" for b in violated))
    return report


def analyze(coefficients: Sequence, skip_groebner: bool = False,
            provenance: Optional[dict] = None) -> DistributionReport:
    polys = [c if isinstance(c, Poly) else parse_poly(c) for c in coefficients]
    return analyze_form(make_distribution_form(polys), skip_groebner, provenance)


# ---------------------------------------------------------------------------
# documents
# ---------------------------------------------------------------------------

def load_form_document(doc: Any) -> list[Poly]:
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise ValidationError(f"expected a JSON object with format {FORMAT!r}")
    coeffs = doc.get("coefficients")
    if not isinstance(coeffs, list) or len(coeffs) != 4 or not all(isinstance(c, str) for c in coeffs):
        raise ValidationError("'coefficients' must be a list of four expression strings")
    return [parse_poly(c) for c in coeffs]


def form_document(form: DistributionForm, **extra) -> dict:
    doc = {"format": FORMAT, "coefficients": [str(c) for c in form.coefficients]}
    doc.update(extra)
    return doc


def error_object(exc: DistributionError) -> dict:
    return {"error": exc.to_dict()}


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def run_document(doc: dict, skip_groebner: bool = False) -> tuple[dict, int]:
    """Analyze a form document; returns (json-ready result, exit code)."""
    try:
        polys = load_form_document(doc)
        report = analyze(polys, skip_groebner, doc.get("provenance"))
        return report.to_dict(), 0
    except DistributionError as exc:
        return error_object(exc), exc.exit_code


# ---------------------------------------------------------------------------
# bundled fixtures
# ---------------------------------------------------------------------------

def fixture_names() -> list[str]:
    root = resources.files("distp3") / "data" / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_fixture(name: str) -> dict:
    path = resources.files("distp3") / "data" / "fixtures" / f"{name}.json"
    return json.loads(path.read_text(encoding="utf-8"))


def strip_timing(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "timing"}
