"""Differential forms on affine 4-space with polynomial coefficients.

A p-form is stored as a map from strictly increasing index tuples to
nonzero polynomials.  0-forms and 4-forms use the same representation
(index tuples of length 0 and 4).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    EulerConditionViolated,
    MartinetDivisionFailed,
    MixedDegrees,
    NotAntisymmetric,
    NotDivisible,
    NotHomogeneous,
    ZeroForm,
)
from .poly import NVARS, Poly


def _sort_sign(idx: Sequence[int]) -> tuple[int, tuple]:
    """Sign of the permutation sorting ``idx`` (0 if an index repeats)."""
    if len(set(idx)) != len(idx):
        return 0, ()
    inversions = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
    return (-1) ** inversions, tuple(sorted(idx))


class PForm:
    __slots__ = ("p", "_coeffs")

    def __init__(self, p: int, coeffs: Mapping[tuple, Poly] | None = None):
        if not 0 <= p <= NVARS:
            raise ValueError(f"form degree {p} out of range")
        self.p = p
        clean = {}
        for idx, c in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != p or list(idx) != sorted(set(idx)) or any(not 0 <= i < NVARS for i in idx):
                raise ValueError(f"non-canonical index tuple {idx}")
            if c:
                clean[idx] = c
        self._coeffs = clean

    @classmethod
    def _raw(cls, p: int, coeffs: dict) -> "PForm":
        f = cls.__new__(cls)
        f.p = p
        f._coeffs = {k: v for k, v in coeffs.items() if v}
        return f

    @classmethod
    def zero(cls, p: int) -> "PForm":
        return cls._raw(p, {})

    @classmethod
    def scalar(cls, f: Poly) -> "PForm":
        return cls._raw(0, {(): f})

    @classmethod
    def dz(cls, *indices: int) -> "PForm":
        sign, idx = _sort_sign(indices)
        return cls._raw(len(indices), {idx: Poly.constant(sign)} if sign else {})

    @classmethod
    def one_form(cls, coeffs: Sequence[Poly]) -> "PForm":
        return cls._raw(1, {(i,): c for i, c in enumerate(coeffs)})

    @property
    def coefficients(self) -> Mapping[tuple, Poly]:
        return dict(self._coeffs)

    def coefficient(self, idx: Sequence[int]) -> Poly:
        return self._coeffs.get(tuple(idx), Poly.zero())

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, PForm):
            return NotImplemented
        if not self._coeffs and not other._coeffs:
            return True
        return self.p == other.p and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.p, frozenset(self._coeffs.items())))

    def __add__(self, other: "PForm") -> "PForm":
        if self.p != other.p:
            raise ValueError("cannot add forms of different degrees")
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out[k] + v if k in out else v
        return PForm._raw(self.p, out)

    def __neg__(self) -> "PForm":
        return PForm._raw(self.p, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other: "PForm") -> "PForm":
        return self + (-other)

    def scale(self, f) -> "PForm":
        """Multiply every coefficient by a polynomial or scalar."""
        return PForm._raw(self.p, {k: v * f for k, v in self._coeffs.items()})

    def __mul__(self, f):
        if isinstance(f, (Poly, int, Fraction)):
            return self.scale(f)
        return NotImplemented

    __rmul__ = __mul__

    def is_homogeneous_of_weight(self, w: int) -> bool:
        return all(c.homogeneous_degree == w - self.p for c in self._coeffs.values())

    def __repr__(self):
        if not self._coeffs:
            return f"PForm({self.p}, 0)"
        parts = []
        for idx in sorted(self._coeffs):
            basis = "^".join(f"dz{i}" for i in idx) or "1"
            parts.append(f"({self._coeffs[idx]})*{basis}")
        return " + ".join(parts)


def wedge(a: PForm, b: PForm) -> PForm:
    p = a.p + b.p
    if p > NVARS:
        return PForm.zero(NVARS)
    out: dict = {}
    for ia, ca in a._coeffs.items():
        for ib, cb in b._coeffs.items():
            sign, idx = _sort_sign(ia + ib)
            if not sign:
                continue
            term = ca * cb
            if sign < 0:
                term = -term
            out[idx] = out[idx] + term if idx in out else term
    return PForm._raw(p, out)


def exterior_derivative(a: PForm) -> PForm:
    if a.p == NVARS:
        return PForm.zero(NVARS)
    out: dict = {}
    for idx, c in a._coeffs.items():
        for j in range(NVARS):
            if j in idx:
                continue
            dc = c.diff(j)
            if not dc:
                continue
            sign, new = _sort_sign((j,) + idx)
            term = dc if sign > 0 else -dc
            out[new] = out[new] + term if new in out else term
    return PForm._raw(a.p + 1, out)


def contract_radial(a: PForm) -> PForm:
    """Interior product with the radial field R = sum z_i d/dz_i."""
    if a.p == 0:
        return PForm.zero(0)
    out: dict = {}
    for idx, c in a._coeffs.items():
        for k, i in enumerate(idx):
            rest = idx[:k] + idx[k + 1:]
            term = c * Poly.var(i)
            if k % 2:
                term = -term
            out[rest] = out[rest] + term if rest in out else term
    return PForm._raw(a.p - 1, out)


VOLUME = PForm.dz(0, 1, 2, 3)
RADIAL_VOLUME = contract_radial(VOLUME)


@dataclass(frozen=True)
class DistributionForm:
    """A validated twisted 1-form sum A_i dz_i with sum z_i A_i = 0."""

    omega: PForm
    degree: int

    @property
    def coefficients(self) -> tuple[Poly, Poly, Poly, Poly]:
        return tuple(self.omega.coefficient((i,)) for i in range(NVARS))


def _common_degree(polys) -> int:
    """Common homogeneous degree of the nonzero entries, with validation."""
    degs = set()
    for p in polys:
        if not p:
            continue
        if not p.is_homogeneous:
            raise NotHomogeneous(f"coefficient {p} is not homogeneous", witness=p)
        degs.add(p.degree)
    if not degs:
        raise ZeroForm("all coefficients vanish")
    if len(degs) > 1:
        raise MixedDegrees(f"coefficients have different degrees {sorted(degs)}")
    return degs.pop()


def make_distribution_form(coeffs: Sequence[Poly]) -> DistributionForm:
    if len(coeffs) != NVARS:
        raise ValueError("expected four coefficients")
    n = _common_degree(coeffs)
    omega = PForm.one_form(coeffs)
    contraction = contract_radial(omega).coefficient(())
    if contraction:
        raise EulerConditionViolated("sum z_i A_i does not vanish", witness=contraction)
    # n >= 1 here: a nonzero constant vector cannot satisfy the Euler condition
    return DistributionForm(omega, n - 1)


def form_from_antisym(B: Sequence[Sequence[Poly]]) -> DistributionForm:
    """The form with coefficient vector A = B z for an antisymmetric matrix B."""
    entries = [[B[i][j] for j in range(NVARS)] for i in range(NVARS)]
    for i in range(NVARS):
        for j in range(NVARS):
            if entries[i][j] != -entries[j][i]:
                raise NotAntisymmetric(f"B[{i}][{j}] != -B[{j}][{i}]")
    _common_degree(e for row in entries for e in row)
    coeffs = [sum((entries[i][j] * Poly.var(j) for j in range(NVARS)), Poly.zero()) for i in range(NVARS)]
    return make_distribution_form(coeffs)


def integrability_defect(f: DistributionForm) -> PForm:
    """The 3-form omega ^ d omega; zero exactly when the distribution is integrable."""
    return wedge(f.omega, exterior_derivative(f.omega))


def martinet_polynomial(f: DistributionForm) -> Poly:
    defect = integrability_defect(f)
    if not defect:
        return Poly.zero()
    quotient = None
    for idx, signed_coord in RADIAL_VOLUME._coeffs.items():
        try:
            q = defect.coefficient(idx).exact_div(signed_coord)
        except NotDivisible as exc:
            raise MartinetDivisionFailed(f"coefficient on {idx} not divisible", witness=exc.witness)
        if quotient is None:
            quotient = q
        elif q != quotient:
            raise MartinetDivisionFailed("quotients disagree across coefficients", witness=q - quotient)
    if quotient.homogeneous_degree != 2 * f.degree:
        raise MartinetDivisionFailed(f"Martinet polynomial has unexpected degree {quotient.degree}")
    return quotient
