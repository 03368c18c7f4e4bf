"""Hilbert series and Hilbert polynomials of homogeneous ideals in k[z0..z3]."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Sequence

from .errors import GuardExceeded
from .groebner import DEGREVLEX, Ideal, MonomialOrder, groebner
from .poly import NVARS, homogeneous_monomials

MAX_RECURSION_CALLS = 2_000_000
MAX_ORACLE_DEGREE = 12


def minimalize(monomials: Sequence[tuple]) -> tuple:
    """Minimal generators of a monomial ideal, in a canonical order."""
    ms = sorted(set(map(tuple, monomials)), key=lambda m: (sum(m), m))
    out = []
    for m in ms:
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return tuple(sorted(out))


def _poly_sub_shift(a: list, b: list, shift: int) -> list:
    """a - s^shift * b on coefficient lists (low degree first)."""
    out = list(a) + [0] * max(0, len(b) + shift - len(a))
    for i, c in enumerate(b):
        out[i + shift] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def hilbert_series_numerator(generators: Sequence[tuple]) -> tuple:
    """Coefficients (low degree first) of N(s) with HS(S/I) = N(s)/(1-s)^n.

    Uses N(J + (m)) = N(J) - s^deg(m) * N(J : m), memoized on the
    minimal generating set.
    """
    memo: dict = {}
    calls = 0

    def rec(gens: tuple) -> list:
        nonlocal calls
        calls += 1
        if calls > MAX_RECURSION_CALLS:
            raise GuardExceeded("Hilbert series recursion exceeded its call budget")
        if not gens:
            return [1]
        if any(sum(g) == 0 for g in gens):
            return [0]
        hit = memo.get(gens)
        if hit is not None:
            return hit
        # pairwise coprime generators: product of (1 - s^deg)
        if all(not any(x and y for x, y in zip(gens[i], gens[j]))
               for i in range(len(gens)) for j in range(i + 1, len(gens))):
            result = [1]
            for g in gens:
                result = _poly_sub_shift(result, result, sum(g))
            memo[gens] = result
            return result
        # split off a generator of largest degree
        pivot = max(gens, key=lambda m: (sum(m), m))
        rest = tuple(g for g in gens if g != pivot)
        colon = minimalize(tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in rest)
        result = _poly_sub_shift(rec(rest), rec(colon), sum(pivot))
        memo[gens] = result
        return result

    return tuple(rec(minimalize(generators)))


def _binomial_poly(shift: int) -> list[Fraction]:
    """Coefficients in t of C(t + shift, 3) = (t+shift)(t+shift-1)(t+shift-2)/6."""
    coeffs = [Fraction(1)]
    for r in (shift, shift - 1, shift - 2):
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c * r
            nxt[i + 1] += c
        coeffs = nxt
    return [c / 6 for c in coeffs]


def hilbert_polynomial_from_numerator(numerator: Sequence[int]) -> tuple:
    """HP(t) = sum_j a_j C(t+3-j, 3) as rational coefficients, low degree first."""
    total = [Fraction(0)] * 4
    for j, a in enumerate(numerator):
        if a:
            for i, c in enumerate(_binomial_poly(NVARS - 1 - j)):
                total[i] += a * c
    while total and total[-1] == 0:
        total.pop()
    return tuple(total)


def eval_poly(coeffs: Sequence, t) -> Fraction:
    return sum((Fraction(c) * Fraction(t) ** i for i, c in enumerate(coeffs)), Fraction(0))


@dataclass(frozen=True)
class HilbertData:
    numerator: tuple            # integer coefficients of N(s), low degree first
    hilbert_polynomial: tuple   # rational coefficients of HP(t), low degree first
    projective_dimension: int   # -1 for the empty scheme
    scheme_degree: int          # 0 for the empty scheme
    kappa: Fraction             # HP(0)
    order: str = "degrevlex"

    def __call__(self, t: int) -> Fraction:
        return eval_poly(self.hilbert_polynomial, t)


def hilbert_data_from_leading(leading: Sequence[tuple], order_name: str = "degrevlex") -> HilbertData:
    num = hilbert_series_numerator(leading)
    hp = hilbert_polynomial_from_numerator(num)
    dim = len(hp) - 1
    if dim < 0:
        degree = 0
    else:
        degree = hp[-1]
        for k in range(2, dim + 1):
            degree *= k
        if degree.denominator != 1:
            raise GuardExceeded("non-integral scheme degree")
        degree = int(degree)
    kappa = hp[0] if hp else Fraction(0)
    return HilbertData(num, hp, dim, degree, kappa, order_name)


def hilbert_polynomial(I: Ideal, order: MonomialOrder = DEGREVLEX) -> HilbertData:
    if I.is_zero():
        return hilbert_data_from_leading([], order.name)
    G = groebner(I, order)
    return hilbert_data_from_leading(G.leading_monomials, order.name)


# ---------------------------------------------------------------------------
# linear-algebra oracle
# ---------------------------------------------------------------------------

def _insert_row(pivots: dict, row: dict) -> bool:
    """Fraction-free elimination of ``row`` against ``pivots``; True if rank grew."""
    while row:
        col = min(row)
        piv = pivots.get(col)
        if piv is None:
            g = 0
            for v in row.values():
                g = gcd(g, v)
            pivots[col] = {k: v // g for k, v in row.items()}
            return True
        a, b = piv[col], row[col]
        new = {k: v * a for k, v in row.items()}
        for k, v in piv.items():
            w = new.get(k, 0) - b * v
            if w:
                new[k] = w
            else:
                new.pop(k, None)
        g = 0
        for v in new.values():
            g = gcd(g, v)
            if g == 1:
                break
        row = {k: v // g for k, v in new.items()} if g > 1 else new
    return False


def hilbert_function_oracle(I: Ideal, t: int) -> int:
    """dim S_t - rank span{m*g}: the Hilbert function by plain linear algebra."""
    if t < 0:
        return 0
    if t > MAX_ORACLE_DEGREE:
        raise GuardExceeded(f"oracle degree {t} exceeds {MAX_ORACLE_DEGREE}")
    basis = homogeneous_monomials(t)
    column = {m: i for i, m in enumerate(basis)}
    pivots: dict = {}
    for g in I.generators:
        k = t - g.degree
        if k < 0:
            continue
        den = 1
        for c in g.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        gi = {m: int(c * den) for m, c in g.terms.items()}
        for shift in homogeneous_monomials(k):
            row = {column[tuple(a + b for a, b in zip(m, shift))]: c for m, c in gi.items()}
            _insert_row(pivots, row)
            if len(pivots) == len(basis):
                return 0
    return len(basis) - len(pivots)


def expected_dimension_of_ring(t: int) -> int:
    return comb(t + NVARS - 1, NVARS - 1) if t >= 0 else 0
