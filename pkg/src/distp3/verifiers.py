"""Exhaustive integer searches backing the "no integer solutions" statements.

Each search is finite; the reports say which range was covered.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import UnknownClaim
from .invariants import isolated_length


@dataclass(frozen=True)
class SearchReport:
    claim: str
    searched: dict
    solutions: tuple
    expected: tuple
    note: str = ""
    diagnostics: tuple = field(default_factory=tuple)

    @property
    def agrees(self) -> bool:
        return tuple(sorted(self.solutions)) == tuple(sorted(self.expected))

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "searched": self.searched,
            "solutions": [list(s) for s in self.solutions],
            "expected": [list(s) for s in self.expected],
            "agrees": self.agrees,
            "note": self.note,
            "diagnostics": [list(s) for s in self.diagnostics],
        }


def genus_without_residue(d: int, deg_c: int):
    """p_a(C) forced when the singular scheme is a curve (no isolated points), or None."""
    twice = 2 - isolated_length(d) + (3 * d - 2) * deg_c
    return twice // 2 if twice % 2 == 0 else None


def verify_canonical_rational(d_max: int = 40, d_min: int = 5) -> SearchReport:
    """Curves with p_a = 0 or 2p_a - 2 = deg C among locally free degree-d distributions."""
    found = []
    for d in range(d_min, d_max + 1):
        for deg_c in range(1, d * d + d + 2):
            p_a = genus_without_residue(d, deg_c)
            if p_a is None:
                continue
            if p_a == 0:
                found.append((d, deg_c, p_a, "rational"))
            if 2 * p_a - 2 == deg_c:
                found.append((d, deg_c, p_a, "canonical"))
    return SearchReport(
        "canonical_rational",
        {"d": [d_min, d_max], "deg_C": "1..d^2+d+1"},
        tuple(found),
        (),
        note="deg_C bounded by d^2+d+1; the genus is linear in deg_C, so each d has at most one candidate per condition",
    )


def verify_elliptic(d_max: int = 200) -> SearchReport:
    found = []
    for d in range(1, d_max + 1):
        if isolated_length(d) % (3 * d - 2) == 0:
            found.append((d,))
    return SearchReport("elliptic", {"d": [1, d_max]}, tuple(found),
                        tuple((d,) for d in (1, 2, 12) if d <= d_max))


def verify_plane_curve(d_max: int = 100) -> SearchReport:
    """Plane curves of degree m: 2 - 2p_a = -m(m-3) against the curve identity."""
    found = []
    for d in range(0, d_max + 1):
        rhs0 = isolated_length(d)
        for m in range(1, d * d + d + 2):
            if -m * (m - 3) == rhs0 - (3 * d - 2) * m:
                found.append((m, d))
    return SearchReport("plane_curve", {"d": [0, d_max], "m": "1..d^2+d+1"}, tuple(found), ((1, 0),))


def verify_martinet_picard(d_max: int = 100) -> SearchReport:
    found = []
    for d in range(1, d_max + 1):
        for r in range(1, d + 4):
            value = isolated_length(d) - (3 * d - 2) * (2 * d * r) + 2 * d * r * (r + 2 * d - 4)
            if value == 0:
                found.append((d, r))
    return SearchReport("martinet_picard", {"d": [1, d_max], "r": "1..d+3"}, tuple(found), ())


VERIFIERS: dict[str, Callable[[int], SearchReport]] = {
    "canonical": verify_canonical_rational,
    "elliptic": verify_elliptic,
    "plane": verify_plane_curve,
    "martinet": verify_martinet_picard,
}

DEFAULT_RANGES = {"canonical": 40, "elliptic": 200, "plane": 100, "martinet": 100}


def run_claim(claim: str, d_max: int | None = None) -> SearchReport:
    if claim not in VERIFIERS:
        raise UnknownClaim(f"unknown claim {claim!r}; expected one of {sorted(VERIFIERS)}")
    return VERIFIERS[claim](DEFAULT_RANGES[claim] if d_max is None else d_max)


def run_all(d_max: int | None = None) -> list[SearchReport]:
    return [run_claim(c, d_max) for c in VERIFIERS]
