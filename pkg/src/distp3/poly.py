"""Exact polynomials in z0..z3 with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .errors import NotDivisible

NVARS = 4
VAR_NAMES = ("z0", "z1", "z2", "z3")

Monomial = tuple  # tuple[int, int, int, int]
Scalar = Union[int, Fraction]
ONE_MONOMIAL: Monomial = (0, 0, 0, 0)


def degrevlex_key(m: Monomial) -> tuple:
    """Sort key for degrevlex with z0 > z1 > z2 > z3 (larger key = larger monomial)."""
    return (sum(m),) + tuple(-e for e in reversed(m))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


class Poly:
    """Immutable sparse polynomial; the term map never stores zero coefficients."""

    __slots__ = ("_terms", "_hdeg", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    if len(m) != NVARS or any(e < 0 for e in m):
                        raise ValueError(f"bad monomial {m!r}")
                    clean[tuple(m)] = Fraction(c)
        self._terms = clean
        degs = {sum(m) for m in clean}
        # None marks an inhomogeneous polynomial; the zero polynomial gets -1.
        self._hdeg = degs.pop() if len(degs) == 1 else (-1 if not degs else None)
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        # trusted constructor: terms already cleaned and Fraction-valued
        p = cls.__new__(cls)
        p._terms = terms
        degs = {sum(m) for m in terms}
        p._hdeg = degs.pop() if len(degs) == 1 else (-1 if not degs else None)
        p._hash = None
        return p

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw({})

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls({ONE_MONOMIAL: c})

    @classmethod
    def var(cls, i: int) -> "Poly":
        m = [0] * NVARS
        m[i] = 1
        return cls({tuple(m): 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], c: Scalar = 1) -> "Poly":
        return cls({tuple(exps): c})

    @classmethod
    def parse(cls, text: str) -> "Poly":
        from .parser import parse_poly
        return parse_poly(text)

    # -- inspection --------------------------------------------------------
    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_homogeneous(self) -> bool:
        return self._hdeg is not None

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if self._hdeg is not None:
            return self._hdeg
        return max(sum(m) for m in self._terms)

    @property
    def homogeneous_degree(self) -> int | None:
        """Degree when homogeneous and nonzero, else None."""
        return self._hdeg if self._hdeg is not None and self._hdeg >= 0 else None

    def leading_monomial(self) -> Monomial:
        return max(self._terms, key=degrevlex_key)

    def leading_term(self) -> tuple[Monomial, Fraction]:
        m = self.leading_monomial()
        return m, self._terms[m]

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: degrevlex_key(t[0]), reverse=True)

    def evaluate(self, point: Iterable[Scalar]) -> Fraction:
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c
            for x, e in zip(pt, m):
                if e:
                    v *= x ** e
            total += v
        return total

    # -- arithmetic --------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly.zero()
            return Poly._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                out[m] = out.get(m, 0) + c1 * c2
        return Poly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_monomial(self, m: Monomial, c: Scalar = 1) -> "Poly":
        if not c:
            return Poly.zero()
        return Poly._raw({mono_mul(k, m): v * c for k, v in self._terms.items()})

    def diff(self, i: int) -> "Poly":
        """Formal partial derivative with respect to z_i."""
        out = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                k = list(m)
                k[i] = e - 1
                out[tuple(k)] = c * e
        return Poly._raw(out)

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient q with self == q * other, by leading-term cancellation."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        lm_b, lc_b = other.leading_term()
        rem = self
        quot: dict = {}
        while rem:
            lm_r, lc_r = rem.leading_term()
            if not mono_divides(lm_b, lm_r):
                raise NotDivisible(f"{self} is not divisible by {other}", witness=rem)
            m = mono_div(lm_r, lm_b)
            c = lc_r / lc_b
            quot[m] = c
            rem = rem - other.mul_monomial(m, c)
        return Poly._raw(quot)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, Poly):
            return self.exact_div(other)
        return NotImplemented

    # -- comparison / printing ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for idx, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            factors = []
            for name, e in zip(VAR_NAMES, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if a != 1 or not factors:
                factors.insert(0, str(a))
            body = "*".join(factors)
            if idx == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"{'-' if neg else '+'} {body}")
        return " ".join(parts)


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    return a.exact_div(b)


def poly_diff(p: Poly, var_index: int) -> Poly:
    return p.diff(var_index)


def z(i: int) -> Poly:
    return Poly.var(i)


def homogeneous_monomials(degree: int, nvars: int = NVARS) -> list[Monomial]:
    """All exponent tuples of the given total degree, in descending degrevlex order."""
    if degree < 0:
        return []
    out = []

    def rec(prefix, left, k):
        if k == 1:
            out.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            rec(prefix + (e,), left - e, k - 1)

    rec((), degree, nvars)
    return sorted(out, key=degrevlex_key, reverse=True)
