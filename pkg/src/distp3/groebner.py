"""Buchberger's algorithm and ideal operations for homogeneous ideals.

Internally polynomials are plain dicts mapping exponent tuples to integers,
kept primitive (content 1, positive leading coefficient).  Working with
integers instead of fractions keeps coefficient arithmetic cheap; the public
API converts back to monic rational polynomials.  The internal layer is
agnostic to the number of variables so the same code serves the
auxiliary-variable elimination ring k[t, z0..z3].
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .poly import NVARS, Poly

RawPoly = dict  # dict[tuple[int, ...], int]


@dataclass(frozen=True)
class MonomialOrder:
    """Degrevlex, optionally refined into two blocks.

    ``block`` leading variables form an elimination block: any monomial
    involving them is larger than every monomial free of them.  Both blocks
    are ordered by degrevlex internally.
    """

    name: str
    block: int = 0

    def key(self, m: tuple) -> tuple:
        if not self.block:
            return (sum(m),) + tuple(-e for e in reversed(m))
        head, tail = m[: self.block], m[self.block:]
        return ((sum(head),) + tuple(-e for e in reversed(head))
                + (sum(tail),) + tuple(-e for e in reversed(tail)))


DEGREVLEX = MonomialOrder("degrevlex")
ELIMINATION = MonomialOrder("elimination", block=1)


# ---------------------------------------------------------------------------
# raw integer polynomials
# ---------------------------------------------------------------------------

def _content(values: Iterable[int]) -> int:
    g = 0
    for c in values:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


class _Ring:
    """Per-computation context caching monomial order keys."""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self._neg = {}

    def negkey(self, m: tuple) -> tuple:
        k = self._neg.get(m)
        if k is None:
            k = tuple(-x for x in self.order.key(m))
            self._neg[m] = k
        return k

    def lm(self, p: RawPoly) -> tuple:
        return min(p, key=self.negkey)

    def primitive(self, p: RawPoly) -> RawPoly:
        if not p:
            return p
        g = _content(p.values())
        if p[self.lm(p)] < 0:
            g = -g
        if g == 1:
            return p
        return {m: c // g for m, c in p.items()}

    def reduce(self, p: RawPoly, basis: Sequence[tuple], full: bool = True) -> tuple[RawPoly, Fraction]:
        """Pseudo-reduce ``p`` modulo basis entries ``(lm, lc, poly)``.

        Returns ``(r, factor)`` with ``r * factor`` equal to the true remainder
        of ``p``.  With ``full=False`` only the leading term is reduced.
        """
        h = dict(p)
        rem: RawPoly = {}
        factor = Fraction(1)
        heap = [(self.negkey(m), m) for m in h]
        heapq.heapify(heap)
        steps = 0
        while heap:
            _, m = heapq.heappop(heap)
            c = h.get(m)
            if not c:
                continue
            div = None
            for entry in basis:
                if _divides(entry[0], m):
                    div = entry
                    break
            if div is None:
                del h[m]
                rem[m] = c
                if not full:
                    rem.update(h)
                    h = {}
                    break
                continue
            glm, glc, g = div
            k = gcd(glc, c)
            mult, q = glc // k, c // k
            if mult != 1:
                for key in h:
                    h[key] *= mult
                for key in rem:
                    rem[key] *= mult
                factor /= mult
            shift = tuple(a - b for a, b in zip(m, glm))
            for gm, gc in g.items():
                nm = tuple(a + b for a, b in zip(gm, shift))
                old = h.get(nm)
                if old is None:
                    h[nm] = -q * gc
                    heapq.heappush(heap, (self.negkey(nm), nm))
                else:
                    v = old - q * gc
                    if v:
                        h[nm] = v
                    else:
                        del h[nm]
            steps += 1
            if mult != 1 and steps % 4 == 0:
                k = _content(list(h.values()) + list(rem.values()))
                if k > 1:
                    h = {a: b // k for a, b in h.items()}
                    rem = {a: b // k for a, b in rem.items()}
                    factor *= k
        return rem, factor


def _spoly(ring: _Ring, f: tuple, g: tuple) -> RawPoly:
    flm, flc, fp = f
    glm, glc, gp = g
    l = tuple(max(a, b) for a, b in zip(flm, glm))
    k = gcd(flc, glc)
    cf, cg = glc // k, flc // k
    sf = tuple(a - b for a, b in zip(l, flm))
    sg = tuple(a - b for a, b in zip(l, glm))
    out: RawPoly = {}
    for m, c in fp.items():
        nm = tuple(a + b for a, b in zip(m, sf))
        out[nm] = out.get(nm, 0) + cf * c
    for m, c in gp.items():
        nm = tuple(a + b for a, b in zip(m, sg))
        v = out.get(nm, 0) - cg * c
        if v:
            out[nm] = v
        else:
            out.pop(nm, None)
    return out


def _entry(ring: _Ring, p: RawPoly) -> tuple:
    lm = ring.lm(p)
    return (lm, p[lm], p)


def _lcm_mono(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: tuple, b: tuple) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def buchberger_raw(polys: Sequence[RawPoly], order: MonomialOrder) -> list[RawPoly]:
    """Reduced Groebner basis of integer polynomials (primitive, not monic).

    Pairs are pruned with the coprime-leading-term criterion and the chain
    criterion (Gebauer-Moeller update); the pair with the lowest-degree lcm is
    processed first, ties broken by creation order.
    """
    ring = _Ring(order)
    G: list[tuple] = []
    active: list[int] = []
    pairs: list[tuple] = []  # heap of (degree, serial, i, j, lcm)
    serial = 0

    def update(h: int):
        nonlocal pairs, active, serial
        h_lm = G[h][0]
        cands = [(g, _lcm_mono(G[g][0], h_lm)) for g in active]
        kept = []
        for idx, (g1, l1) in enumerate(cands):
            if _coprime(G[g1][0], h_lm):
                kept.append((g1, l1))
                continue
            dominated = any(_divides(l2, l1) for jdx, (_, l2) in enumerate(cands) if jdx > idx)
            dominated = dominated or any(_divides(l2, l1) for _, l2 in kept)
            if not dominated:
                kept.append((g1, l1))
        fresh = [(g, l) for g, l in kept if not _coprime(G[g][0], h_lm)]
        survivors = []
        for pair in pairs:
            _, _, i, j, l = pair
            if (_divides(h_lm, l) and _lcm_mono(G[i][0], h_lm) != l
                    and _lcm_mono(G[j][0], h_lm) != l):
                continue
            survivors.append(pair)
        for g, l in fresh:
            serial += 1
            survivors.append((sum(l), serial, g, h, l))
        heapq.heapify(survivors)
        pairs = survivors
        active = [g for g in active if not _divides(h_lm, G[g][0])] + [h]

    def add(p: RawPoly):
        r, _ = ring.reduce(p, [G[g] for g in active])
        if r:
            G.append(_entry(ring, ring.primitive(r)))
            update(len(G) - 1)

    for p in polys:
        if p:
            add(p)
    while pairs:
        _, _, i, j, _ = heapq.heappop(pairs)
        s = _spoly(ring, G[i], G[j])
        if s:
            add(s)
    return _interreduce(ring, [G[g][2] for g in active])


def _interreduce(ring: _Ring, polys: list[RawPoly]) -> list[RawPoly]:
    entries = [_entry(ring, p) for p in polys]
    # minimal basis: drop elements whose leading monomial is divisible by another's
    minimal = []
    for idx, e in enumerate(entries):
        dominated = False
        for jdx, f in enumerate(entries):
            if jdx == idx:
                continue
            if _divides(f[0], e[0]) and (f[0] != e[0] or jdx < idx):
                dominated = True
                break
        if not dominated:
            minimal.append(e)
    out = []
    for idx, e in enumerate(minimal):
        others = [f for jdx, f in enumerate(minimal) if jdx != idx]
        r, _ = ring.reduce(e[2], others)
        out.append(ring.primitive(r))
    out.sort(key=lambda p: ring.negkey(ring.lm(p)))
    return out


def _to_raw(p: Poly, pad_front: int = 0) -> RawPoly:
    den = 1
    for c in p.terms.values():
        den = lcm(den, c.denominator)
    return {(0,) * pad_front + m: int(c * den) for m, c in p.terms.items()}


def _monic_poly(ring: _Ring, p: RawPoly) -> Poly:
    lc = p[ring.lm(p)]
    return Poly({m: Fraction(c, lc) for m, c in p.items()})


# ---------------------------------------------------------------------------
# public types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Ideal:
    generators: tuple

    def __init__(self, generators: Iterable[Poly]):
        gens = []
        for g in generators:
            if not g:
                continue
            if not g.is_homogeneous:
                raise ValueError(f"generator {g} is not homogeneous")
            gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def of(cls, *gens) -> "Ideal":
        return cls(Poly.parse(g) if isinstance(g, str) else g for g in gens)

    def is_zero(self) -> bool:
        return not self.generators


@dataclass(frozen=True)
class GroebnerBasis:
    basis: tuple
    order: MonomialOrder

    @property
    def leading_monomials(self) -> list[tuple]:
        return [max(g.terms, key=self.order.key) for g in self.basis]

    def ideal(self) -> Ideal:
        return Ideal(self.basis)


def groebner(I: Ideal, order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
    raw = buchberger_raw([_to_raw(g) for g in I.generators], order)
    ring = _Ring(order)
    return GroebnerBasis(tuple(_monic_poly(ring, p) for p in raw), order)


def normal_form(p: Poly, G: GroebnerBasis) -> Poly:
    if not p:
        return p
    ring = _Ring(G.order)
    basis = [_entry(ring, _to_raw(g)) for g in G.basis]
    den = 1
    for c in p.terms.values():
        den = lcm(den, c.denominator)
    r, factor = ring.reduce(_to_raw(p), basis)
    factor /= den
    return Poly({m: c * factor for m, c in r.items()})


def s_polynomial(f: Poly, g: Poly, order: MonomialOrder = DEGREVLEX) -> Poly:
    lf = max(f.terms, key=order.key)
    lg = max(g.terms, key=order.key)
    l = _lcm_mono(lf, lg)
    a = f.mul_monomial(tuple(x - y for x, y in zip(l, lf)), 1 / f.terms[lf])
    b = g.mul_monomial(tuple(x - y for x, y in zip(l, lg)), 1 / g.terms[lg])
    return a - b


# ---------------------------------------------------------------------------
# elimination-based ideal operations
# ---------------------------------------------------------------------------

def _eliminate_aux(raw_polys: list[RawPoly]) -> list[Poly]:
    """Groebner basis in k[t, z] (t first), keep the t-free part as Polys in z."""
    ring = _Ring(ELIMINATION)
    basis = buchberger_raw(raw_polys, ELIMINATION)
    out = []
    for p in basis:
        if all(m[0] == 0 for m in p):
            out.append(_monic_poly(ring, {m[1:]: c for m, c in p.items()}))
    return out


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I intersected with J via t*I + (1-t)*J, eliminating t."""
    if I.is_zero() or J.is_zero():
        return Ideal([])
    polys = []
    for g in I.generators:
        polys.append({(1,) + m: c for m, c in _to_raw(g).items()})
    for g in J.generators:
        raw = _to_raw(g)
        h: RawPoly = {}
        for m, c in raw.items():
            h[(0,) + m] = c
            h[(1,) + m] = -c
        polys.append(h)
    return Ideal(_eliminate_aux(polys))


def ideal_quotient(I: Ideal, f: Poly) -> Ideal:
    """(I : f), as (I intersected with (f)) divided by f."""
    if not f:
        raise ValueError("quotient by the zero polynomial")
    meet = intersect(I, Ideal([f]))
    return Ideal([g.exact_div(f) for g in meet.generators])


def _same(I: Ideal, J: Ideal) -> bool:
    return groebner(I).basis == groebner(J).basis


def saturate(I: Ideal, f: Poly, max_rounds: int = 64) -> Ideal:
    current = Ideal(groebner(I).basis)
    for _ in range(max_rounds):
        nxt = Ideal(groebner(ideal_quotient(current, f)).basis)
        if nxt.generators == current.generators:
            return current
        current = nxt
    raise RuntimeError("saturation did not stabilize")


def saturate_irrelevant(I: Ideal) -> Ideal:
    """Saturation by (z0,..,z3), the intersection of the four variable saturations."""
    result = None
    for i in range(NVARS):
        sat = saturate(I, Poly.var(i))
        result = sat if result is None else intersect(result, sat)
    return Ideal(groebner(result).basis)
