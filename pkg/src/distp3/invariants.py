"""From the Hilbert polynomial of the singular scheme to Chern data and verdicts.

Notation: ``d`` is the degree of the distribution, Z its singular scheme,
C the pure one-dimensional part of Z and U the zero-dimensional residue.
The invariants (deg C, p_a(C), length U) are solved from two linear
relations: chi(O_Z) = (1 - p_a) + length U, and the identity

    length U = d^3 + 2d^2 + 2d - deg(C)(3d - 2) + 2 p_a(C) - 2

relating the third Chern class of the tangent sheaf to the curve data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

from .errors import (
    DivisorialSingularLocus,
    InconsistentInvariants,
    NonIntegralGenus,
    ParityViolation,
    UnclassifiedInvariants,
)
from .hilbert import HilbertData


def isolated_length(d: int) -> int:
    """Length of a zero-dimensional singular scheme: d^3 + 2d^2 + 2d."""
    return d ** 3 + 2 * d ** 2 + 2 * d


def _residual(d: int, deg_c: int) -> int:
    return isolated_length(d) - deg_c * (3 * d - 2)


@dataclass(frozen=True)
class SchemeInvariants:
    degree_d: int
    dim_Z: int
    deg_C: int
    p_a_C: int
    len_U: int
    kappa: int


@dataclass(frozen=True)
class ChernData:
    c1: int
    c2: int
    c3: int
    locally_free: bool

    @property
    def degree_d(self) -> int:
        return 2 - self.c1

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.c1, self.c2, self.c3)


def _as_int(x: Fraction, what: str) -> int:
    x = Fraction(x)
    if x.denominator != 1:
        raise InconsistentInvariants(f"{what} = {x} is not an integer")
    return int(x)


def invariants_from_hilbert(d: int, hp: HilbertData) -> SchemeInvariants:
    dim = hp.projective_dimension
    if dim >= 2:
        raise DivisorialSingularLocus(
            f"singular scheme has dimension {dim}: the coefficients share a common factor")
    kappa = _as_int(hp.kappa, "HP(0)")
    if dim == -1:
        if d != 0:
            raise InconsistentInvariants(f"empty singular scheme is impossible in degree {d}")
        return SchemeInvariants(d, -1, 0, 1, 0, 0)
    if dim == 0:
        if kappa != isolated_length(d):
            raise InconsistentInvariants(
                f"zero-dimensional scheme of length {kappa}, expected {isolated_length(d)}")
        return SchemeInvariants(d, 0, 0, 1, kappa, kappa)
    deg_c = hp.scheme_degree
    t = _residual(d, deg_c)
    p_a = kappa + 1 - t
    len_u = 2 * kappa - t
    if len_u < 0:
        raise InconsistentInvariants(f"negative residual length {len_u}")
    return SchemeInvariants(d, 1, deg_c, p_a, len_u, kappa)


def chern_from_invariants(inv: SchemeInvariants) -> ChernData:
    d = inv.degree_d
    c2 = d * d + 2 - inv.deg_C
    c3 = inv.len_U
    if (d * c2 - c3) % 2:
        raise ParityViolation(f"d*c2 = {d * c2} and c3 = {c3} have different parity")
    return ChernData(2 - d, c2, c3, c3 == 0)


def curve_data_from_chern(d: int, c2: int, c3: int) -> tuple[int, int]:
    """(deg C, p_a(C)) recovered from the Chern classes."""
    deg_c = d * d + 2 - c2
    twice = c3 - isolated_length(d) + deg_c * (3 * d - 2) + 2
    if twice % 2:
        raise NonIntegralGenus(f"arithmetic genus {twice}/2 is not an integer")
    return deg_c, twice // 2


# ---------------------------------------------------------------------------
# Euler characteristic of the tangent sheaf
# ---------------------------------------------------------------------------

def _binom3(shift: int) -> list[Fraction]:
    """Coefficients in t of C(t + shift, 3) as a polynomial."""
    coeffs = [Fraction(1)]
    for r in (shift, shift - 1, shift - 2):
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c * r
            nxt[i + 1] += c
        coeffs = nxt
    return [c / 6 for c in coeffs]


def _add(a, b, scale=1):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += scale * c
    return out


def _mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _trim(a) -> tuple:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _compose_shift(p, shift: int) -> list[Fraction]:
    """Coefficients of q(t) = p(t + shift)."""
    out = [Fraction(0)]
    for c in reversed(list(p)):
        out = _mul(out, [Fraction(shift), Fraction(1)])
        out[0] += c
    return out


def _eval(p, t) -> Fraction:
    return sum((c * Fraction(t) ** i for i, c in enumerate(p)), Fraction(0))


def riemann_roch_chi(d: int, c2: int, c3: int) -> tuple:
    """chi(T(t)) for a rank-2 sheaf on P^3 with c1 = 2 - d, as coefficients in t."""
    c1 = Fraction(2 - d)
    ch = [Fraction(2), c1, (c1 * c1 - 2 * c2) / 2, (c1 ** 3 - 3 * c1 * c2 + 3 * c3) / 6]
    todd = [Fraction(1), Fraction(2), Fraction(11, 6), Fraction(1)]
    # coefficient of H^3 in ch(E) * exp(tH) * todd, as a polynomial in t
    result = [Fraction(0)] * 4
    fact = [1, 1, 2, 6]
    for i, chi_ in enumerate(ch):
        for k in range(0, 4 - i):
            j = 3 - i - k
            # exp(tH) contributes t^k / k! H^k
            result[k] += chi_ * todd[j] / fact[k]
    return _trim(result)


def additivity_chi(d: int, hilbert_poly) -> tuple:
    """chi(TP^3(t)) - C(t+d+5, 3) + P_Z(t+d+2), from the defining sequence."""
    tp3 = _add([4 * c for c in _binom3(4)], _binom3(3), -1)
    out = _add(tp3, _binom3(d + 5), -1)
    out = _add(out, _compose_shift(hilbert_poly, d + 2))
    return _trim(out)


def printed_chi(d: int, c2: int, c3: int) -> tuple:
    """The closed form as it circulates in print (kept for comparison only):
    (t+3)(t+2)(t+1)/3 + (t+2)(t+1)(2-d)/2 - (t+2)c2 + (c3 + (d-2)c2)/2."""
    cubic = [Fraction(6 * x, 3) for x in _binom3(3)]  # 2*C(t+3,3) = (t+3)(t+2)(t+1)/3
    quad = _mul([Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)])
    out = _add(cubic, [Fraction(2 - d, 2) * c for c in quad])
    out = _add(out, [Fraction(-2 * c2), Fraction(-c2)])
    out = _add(out, [Fraction(c3 + (d - 2) * c2, 2)])
    return _trim(out)


@dataclass(frozen=True)
class ChiComparison:
    riemann_roch: tuple
    printed: tuple
    mismatch: bool

    def value(self, t: int) -> Fraction:
        return _eval(self.riemann_roch, t)

    def printed_value(self, t: int) -> Fraction:
        return _eval(self.printed, t)


def chi_tangent(d: int, c2: int, c3: int) -> ChiComparison:
    rr = riemann_roch_chi(d, c2, c3)
    pr = printed_chi(d, c2, c3)
    return ChiComparison(rr, pr, rr != pr)


# ---------------------------------------------------------------------------
# bounds and verdicts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundCheck:
    name: str
    satisfied: bool
    citation: str
    hard: bool = True
    detail: str = ""


def bounds_report(d: int, inv: SchemeInvariants, chern: ChernData) -> list[BoundCheck]:
    out = [
        BoundCheck("curve_degree_upper", inv.deg_C <= d * d + d + 1,
                   "singular curve degree is at most d^2+d+1",
                   detail=f"{inv.deg_C} <= {d * d + d + 1}"),
        BoundCheck("c2_lower", chern.c2 >= 1 - d,
                   "second Chern class is at least 1-d",
                   detail=f"{chern.c2} >= {1 - d}"),
        BoundCheck("c3_nonnegative", chern.c3 >= 0,
                   "third Chern class of a reflexive sheaf is non-negative",
                   detail=f"{chern.c3} >= 0"),
        BoundCheck("parity", (d * chern.c2 - chern.c3) % 2 == 0,
                   "d*c2 and c3 have the same parity",
                   detail=f"{d}*{chern.c2} vs {chern.c3}"),
    ]
    if d >= 2:
        out.append(BoundCheck("c2_upper", chern.c2 <= d * d + 2,
                              "second Chern class is at most d^2+2 when d >= 2",
                              detail=f"{chern.c2} <= {d * d + 2}"))
        if chern.locally_free:
            bound = Fraction((2 * d - 1) * (2 * d - 2)) * (Fraction(d, 3) + 2) / (3 * d)
            out.append(BoundCheck("c2_upper_reduced", chern.c2 <= bound,
                                  "second Chern bound for reduced locally free case "
                                  "(depends on an unverified closed form)",
                                  hard=False, detail=f"{chern.c2} <= {bound}"))
    return out


def hard_violations(bounds: list[BoundCheck]) -> list[BoundCheck]:
    return [b for b in bounds if b.hard and not b.satisfied]


RULE_SPLIT = "minimal-c2-split"
RULE_ISOLATED = "isolated-singularities-stable"
RULE_EVEN_STABLE = "even-degree-curve-bound-stable"
RULE_EVEN_SEMISTABLE = "even-degree-curve-bound-semistable"
RULE_ODD_STABLE = "odd-degree-curve-bound-stable"
RULE_NONE = "no-criterion-applies"

STABILITY_RANK = {"undetermined": 0, "mu_semistable": 1, "stable": 2}


@dataclass(frozen=True)
class Verdict:
    stability: str   # stable | mu_semistable | split | undetermined
    rule_fired: str
    classification: Optional[str] = None
    rules_applicable: tuple = field(default_factory=tuple)


def stability_verdict(d: int, dim_Z: int, deg_C: int, c2: int) -> Verdict:
    applicable = []
    if c2 == 1 - d:
        applicable.append((RULE_SPLIT, "split"))
    if dim_Z == 0:
        applicable.append((RULE_ISOLATED, "stable"))
    if d % 2 == 0:
        if 2 * deg_C < d * d + d:
            applicable.append((RULE_EVEN_STABLE, "stable"))
        if 2 * deg_C < d * d + 3 * d + 2:
            applicable.append((RULE_EVEN_SEMISTABLE, "mu_semistable"))
    elif 2 * deg_C < (d + 1) ** 2:
        applicable.append((RULE_ODD_STABLE, "stable"))
    rules = tuple(r for r, _ in applicable)
    if not applicable:
        return Verdict("undetermined", RULE_NONE, None, rules)
    rule, stability = applicable[0]
    return Verdict(stability, rule, None, rules)


# ---------------------------------------------------------------------------
# low-degree classification tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    deg_C: int
    c2: int
    c3_values: tuple
    tangent: str
    singular_scheme: str = ""
    realized: tuple = ()


DEGREE_ONE_TABLE = (
    TableRow(0, 3, (5,), "stable", "5 points", (5,)),
    TableRow(1, 2, (2,), "stable", "a line and 2 points", (2,)),
    TableRow(2, 1, (1,), "stable", "a conic and a point", (1,)),
    TableRow(3, 0, (0,), "split 𝒪⊕𝒪(1)", "a twisted cubic", (0,)),
)

DEGREE_TWO_TABLE = (
    TableRow(0, 6, (20,), "stable", "20 points", (20,)),
    TableRow(1, 5, (14,), "stable", "a line and 14 points", ()),
    TableRow(2, 4, (0, 2, 4, 6, 8, 10), "stable", "a conic-degree curve and points", ()),
    TableRow(3, 3, (0, 2, 4, 6, 8), "μ-semistable", "a cubic curve and points", (8,)),
    TableRow(4, 2, (0, 2, 4), "μ-semistable", "a quartic curve and points", (0, 4)),
    TableRow(5, 1, (0, 2), "μ-semistable", "a quintic curve and points", (0, 2)),
    TableRow(6, 0, (0,), "split 𝒪⊕𝒪", "a curve of degree 6 and genus 3", (0,)),
    TableRow(7, -1, (0,), "split 𝒪(1)⊕𝒪(-1)", "a curve of degree 7 and genus 5", (0,)),
)

DEGREE_TWO_LOCALLY_FREE = {
    -1: "split 𝒪(1)⊕𝒪(-1); singular curve degree 7 genus 5",
    0: "split 𝒪⊕𝒪; singular curve degree 6 genus 3",
    1: "null-correlation; singular curve degree 5 genus 1",
    2: "instanton of charge 2; singular curve degree 4 genus -1 (a line and a twisted cubic, up to deformation)",
}


def _row_for(table, deg_c: int, c2: int, c3: int) -> TableRow:
    for row in table:
        if row.deg_C == deg_c and row.c2 == c2 and c3 in row.c3_values:
            return row
    raise UnclassifiedInvariants(f"no table row for deg_C={deg_c}, c2={c2}, c3={c3}")


def classify_low_degree(d: int, chern: ChernData, dim_Z: int) -> Optional[str]:
    """Classification text for degrees 0, 1 and 2; None for higher degrees."""
    if d == 0:
        if dim_Z == -1 and chern.c2 == 2 and chern.c3 == 0:
            return "null-correlation twist N(1); empty singular scheme"
        if dim_Z == 1 and chern.c2 == 1 and chern.c3 == 0:
            return "split 𝒪(1)⊕𝒪(1); singular scheme a line"
        raise UnclassifiedInvariants(f"degree 0 with c2={chern.c2}, c3={chern.c3}, dim Z={dim_Z}")
    deg_c = d * d + 2 - chern.c2
    if d == 1:
        row = _row_for(DEGREE_ONE_TABLE, deg_c, chern.c2, chern.c3)
        return f"{row.tangent}; singular scheme {row.singular_scheme}"
    if d == 2:
        row = _row_for(DEGREE_TWO_TABLE, deg_c, chern.c2, chern.c3)
        if chern.locally_free and chern.c2 in DEGREE_TWO_LOCALLY_FREE:
            return DEGREE_TWO_LOCALLY_FREE[chern.c2]
        text = f"{row.tangent}; deg C = {deg_c}, c3 = {chern.c3}"
        if chern.c3 in row.realized:
            text += " (realized)"
        return text
    return None


def low_degree_table(d: int) -> list[dict]:
    """One row per admissible deg C, regenerated by running every listed c3 through the classifier."""
    if d == 0:
        rows = []
        for dim_z, deg_c, c2 in ((-1, 0, 2), (1, 1, 1)):
            text = classify_low_degree(0, ChernData(2, c2, 0, True), dim_z)
            rows.append({"deg_C": deg_c, "c2": c2, "c3_values": [0], "realized": [0],
                         "classification": {0: text}, "summary": text})
        return rows
    rows = []
    for row in {1: DEGREE_ONE_TABLE, 2: DEGREE_TWO_TABLE}[d]:
        dim_z = 0 if row.deg_C == 0 else 1
        texts = {c3: classify_low_degree(d, ChernData(2 - d, row.c2, c3, c3 == 0), dim_z)
                 for c3 in row.c3_values}
        # the largest c3 is never overridden by the locally free refinements
        summary = texts[max(row.c3_values)].split(";")[0]
        rows.append({"deg_C": row.deg_C, "c2": row.c2, "c3_values": list(row.c3_values),
                     "realized": list(row.realized), "classification": texts,
                     "summary": summary,
                     "verdict": stability_verdict(d, dim_z, row.deg_C, row.c2).stability})
    return rows
