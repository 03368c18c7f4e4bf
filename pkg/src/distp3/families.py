"""Families of integrable and random 1-forms with their closed-form invariants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, gcd
from typing import Sequence

import numpy as np

from .errors import (
    DistributionError,
    GenerationExhausted,
    InvalidSpec,
    UnknownComponent,
)
from .forms import DistributionForm, form_from_antisym, make_distribution_form
from .groebner import Ideal
from .hilbert import hilbert_polynomial
from .invariants import ChernData, Verdict, isolated_length
from .poly import NVARS, Poly, homogeneous_monomials

PRNG_NAME = "numpy-PCG64"


# ---------------------------------------------------------------------------
# rational forms  p psi dphi - q phi dpsi
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalSpec:
    psi: Poly
    phi: Poly

    def __post_init__(self):
        for name, f in (("psi", self.psi), ("phi", self.phi)):
            if f.homogeneous_degree is None or f.homogeneous_degree < 1:
                raise InvalidSpec(f"{name} must be a nonzero homogeneous polynomial of positive degree")
        if self.a > self.b:
            raise InvalidSpec("deg psi must not exceed deg phi")

    @property
    def a(self) -> int:
        return self.psi.degree

    @property
    def b(self) -> int:
        return self.phi.degree

    @property
    def p(self) -> int:
        return self.a // gcd(self.a, self.b)

    @property
    def q(self) -> int:
        return self.b // gcd(self.a, self.b)


def _d(f: Poly) -> list[Poly]:
    return [f.diff(i) for i in range(NVARS)]


def rational_form(spec: RationalSpec) -> DistributionForm:
    dpsi, dphi = _d(spec.psi), _d(spec.phi)
    coeffs = [spec.psi * dphi[i] * spec.p - spec.phi * dpsi[i] * spec.q for i in range(NVARS)]
    return make_distribution_form(coeffs)


def chern_rational(a: int, b: int) -> ChernData:
    if not 1 <= a <= b:
        raise InvalidSpec("need 1 <= a <= b")
    s = a + b - 2
    c3 = s ** 3 + 2 * s ** 2 + 2 * (1 - a * b) * s
    return ChernData(4 - (a + b), a * a + b * b + a * b - 4 * (a + b) + 6, c3, c3 == 0)


# ---------------------------------------------------------------------------
# logarithmic forms  f_1...f_r sum lambda_i df_i / f_i
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LogSpec:
    factors: tuple
    lambdas: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        object.__setattr__(self, "lambdas", tuple(Fraction(x) for x in self.lambdas))
        if len(self.factors) < 3:
            raise InvalidSpec("a logarithmic spec needs at least three factors")
        if len(self.factors) != len(self.lambdas):
            raise InvalidSpec("one residue per factor is required")
        for f in self.factors:
            if f.homogeneous_degree is None or f.homogeneous_degree < 1:
                raise InvalidSpec(f"factor {f} must be homogeneous of positive degree")
        if any(x == 0 for x in self.lambdas):
            raise InvalidSpec("residues must be nonzero")
        if sum(d * x for d, x in zip(self.degrees, self.lambdas)) != 0:
            raise InvalidSpec("residues must satisfy sum d_i lambda_i = 0")

    @property
    def degrees(self) -> tuple:
        return tuple(f.degree for f in self.factors)


def logarithmic_form(spec: LogSpec) -> DistributionForm:
    coeffs = [Poly.zero() for _ in range(NVARS)]
    for i, (f, lam) in enumerate(zip(spec.factors, spec.lambdas)):
        others = Poly.constant(lam)
        for j, g in enumerate(spec.factors):
            if j != i:
                others = others * g
        for k, df in enumerate(_d(f)):
            coeffs[k] = coeffs[k] + others * df
    return make_distribution_form(coeffs)


def _pair_sum(degrees: Sequence[int]) -> int:
    return sum(x * y for x, y in combinations(degrees, 2))


def log_c3(degrees: Sequence[int]) -> int:
    """Coefficient of h^3 in (1-h)^4 / prod(1 - d_i h)."""
    series = [Fraction(comb(4, k) * (-1) ** k) for k in range(4)]
    for di in degrees:
        # multiply by 1/(1 - di h) = sum di^k h^k, truncated
        series = [sum(series[j] * di ** (k - j) for j in range(k + 1)) for k in range(4)]
    return int(series[3])


def chern_logarithmic(degrees: Sequence[int]) -> ChernData:
    if len(degrees) < 3 or any(x < 1 for x in degrees):
        raise InvalidSpec("need at least three positive degrees")
    d = sum(degrees) - 2
    c3 = log_c3(degrees)
    return ChernData(2 - d, d * d + 2 - _pair_sum(degrees), c3, c3 == 0)


def log_genus(degrees: Sequence[int]) -> int:
    """p_a(C) obtained by equating the two expressions for c3."""
    d = sum(degrees) - 2
    twice = log_c3(degrees) - isolated_length(d) + (3 * d - 2) * _pair_sum(degrees) + 2
    return twice // 2


def log_bound_check(degrees: Sequence[int]) -> bool:
    r = len(degrees)
    d = sum(degrees) - 2
    return _pair_sum(degrees) <= Fraction(r * (r - 1) * (d + 2) ** 2, 2 * r * r)


def logstable_verdict(d: int, r: int) -> Verdict:
    if d < 3:
        raise InvalidSpec("the criterion applies to degree at least 3")
    if d % 2 == 0 and d > 3 * r - 2:
        return Verdict("stable", "log-even-degree-stable")
    if d % 2 == 1 and d > 2 * r - 2:
        return Verdict("stable", "log-odd-degree-stable")
    if d % 2 == 0 and d > r - 2:
        return Verdict("mu_semistable", "log-even-degree-semistable")
    return Verdict("undetermined", "no-criterion-applies")


# ---------------------------------------------------------------------------
# split tangent sheaf and random forms
# ---------------------------------------------------------------------------

def split_tangent_form(a0: Poly, a1: Poly, a2: Poly) -> DistributionForm:
    """The form a0 dz0 + a1 dz1 + a2 dz2 (no dz3 term)."""
    return make_distribution_form([a0, a1, a2, Poly.zero()])


def depends_only_on_first_three(f: DistributionForm) -> bool:
    return all(m[3] == 0 for c in f.coefficients for m in c.terms)


def _random_poly(rng: np.random.Generator, degree: int, bound: int) -> Poly:
    mons = homogeneous_monomials(degree)
    vals = rng.integers(-bound, bound + 1, size=len(mons))
    return Poly({m: int(v) for m, v in zip(mons, vals)})


def random_antisymmetric(rng: np.random.Generator, d: int, size: int = NVARS,
                         bound: int = 3) -> list[list[Poly]]:
    B = [[Poly.zero() for _ in range(NVARS)] for _ in range(NVARS)]
    for i in range(size):
        for j in range(i + 1, size):
            p = _random_poly(rng, d, bound)
            B[i][j], B[j][i] = p, -p
    return B


@dataclass(frozen=True)
class GeneratedForm:
    form: DistributionForm
    seed: int
    attempt: int
    algorithm: str = PRNG_NAME
    family: str = "random"


def _usable(f: DistributionForm) -> bool:
    return hilbert_polynomial(Ideal(f.coefficients)).projective_dimension <= 1


def random_form(d: int, seed: int, max_attempts: int = 16, bound: int = 3) -> GeneratedForm:
    """Random form A = B z from a seeded antisymmetric matrix of degree-d entries."""
    if d < 0:
        raise InvalidSpec("degree must be non-negative")
    for attempt in range(max_attempts):
        rng = np.random.Generator(np.random.PCG64([seed, attempt]))
        try:
            f = form_from_antisym(random_antisymmetric(rng, d, bound=bound))
        except DistributionError:
            continue
        if _usable(f):
            return GeneratedForm(f, seed, attempt)
    raise GenerationExhausted(f"no usable form of degree {d} from seed {seed} in {max_attempts} attempts")


def random_split_form(d: int, seed: int, max_attempts: int = 16, bound: int = 3) -> GeneratedForm:
    """Random form with A_3 = 0 from a 3x3 antisymmetric block acting on (z0, z1, z2)."""
    for attempt in range(max_attempts):
        rng = np.random.Generator(np.random.PCG64([seed, attempt, 3]))
        try:
            f = form_from_antisym(random_antisymmetric(rng, d, size=3, bound=bound))
        except DistributionError:
            continue
        if _usable(f):
            return GeneratedForm(f, seed, attempt, family="split")
    raise GenerationExhausted(f"no usable split form of degree {d} from seed {seed}")


# ---------------------------------------------------------------------------
# dimensions of families and moduli spaces
# ---------------------------------------------------------------------------

def _sections(k: int) -> int:
    """h^0(O(k)) on P^3."""
    return comb(k + 3, 3) if k >= 0 else 0


def _c3(n: int) -> int:
    return comb(n, 3) if n >= 0 else 0


# (dim of the moduli space of tangent sheaves, dim Hom(T_F, TP^3)) for known strata
_MODULI = {
    (1, 1, 1): (3, 12),
    (2, 2, 0): (13, 10),
    (2, 2, 4): (13, 16),
    (2, 3, 8): (21, 12),
}


def component_dimensions(kind: str, params: Sequence[int]) -> int:
    params = tuple(params)
    if kind == "rational":
        a, b = sorted(params)
        na, nb = _sections(a), _sections(b)
        if a == b:
            return 2 * (na - 2)          # pencils in H^0(O(a))
        if b % a == 0:
            return na + nb - 3           # projective bundle over PH^0(O(a))
        return na + nb - 2
    if kind == "logarithmic":
        return sum(_sections(x) for x in params) - 2
    if kind == "null_correlation":
        (a,) = params
        return 8 * _c3(a + 4) - 2 * _c3(a + 3) - 3 * a - 6
    if kind == "moduli":
        if params in _MODULI:
            m, hom = _MODULI[params]
            return m + hom - 1
        d, c2, c3 = params
        if (d, c2, c3) == (1, 3, 5):
            # an open subset of PH^0(Omega^1(3)); h^0(Omega^1(k)) = 4C(k+2,3) - C(k+3,3)
            return 4 * _sections(2) - _sections(3) - 1
        raise UnknownComponent(f"no dimension recorded for moduli stratum {params}")
    raise UnknownComponent(f"unknown component kind {kind!r}")


def glob_gen_chern(c1: int, c2: int, c3: int) -> tuple[int, int, int]:
    """(degree, c2, c3) of a distribution built from a globally generated G."""
    return c1, c2 - c1 + 1, c3


def random_rational_spec(a: int, b: int, seed: int, bound: int = 3) -> RationalSpec:
    rng = np.random.Generator(np.random.PCG64([seed, a, b]))
    while True:
        psi, phi = _random_poly(rng, a, bound), _random_poly(rng, b, bound)
        if psi and phi:
            return RationalSpec(psi, phi)


def random_log_spec(degrees: Sequence[int], seed: int, bound: int = 3) -> LogSpec:
    """Random factors of the given degrees; residues solve sum d_i lambda_i = 0."""
    degrees = sorted(degrees)
    rng = np.random.Generator(np.random.PCG64([seed] + list(degrees)))
    while True:
        factors = [_random_poly(rng, k, bound) for k in degrees]
        lams = [Fraction(int(rng.choice([-3, -2, -1, 1, 2, 3]))) for _ in degrees[:-1]]
        last = -sum(k * x for k, x in zip(degrees, lams)) / degrees[-1]
        if all(factors) and last != 0:
            return LogSpec(tuple(factors), tuple(lams) + (last,))
