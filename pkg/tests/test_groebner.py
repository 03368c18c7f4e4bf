import numpy as np
import pytest
import sympy

from distp3.errors import GuardExceeded
from distp3.families import random_form
from distp3.groebner import (
    DEGREVLEX,
    ELIMINATION,
    Ideal,
    groebner,
    ideal_quotient,
    intersect,
    normal_form,
    s_polynomial,
    saturate,
    saturate_irrelevant,
)
from distp3.hilbert import (
    hilbert_function_oracle,
    hilbert_polynomial,
    hilbert_series_numerator,
)
from distp3.parser import parse_poly
from distp3.poly import Poly, z

from conftest import VALID_FIXTURES, fixture_coefficients
from oracles import Z, to_sympy

P = parse_poly
TWISTED_CUBIC = Ideal.of("z0*z2 - z1^2", "z1*z3 - z2^2", "z0*z3 - z1*z2")


def fixture_ideal(name):
    return Ideal(P(c) for c in fixture_coefficients(name))


FIXTURE_IDEALS = {name: fixture_ideal(name) for name in VALID_FIXTURES}
FIXTURE_IDEALS["twisted_cubic"] = TWISTED_CUBIC
FIXTURE_IDEALS["line"] = Ideal.of("z0", "z1")


def same_ideal(I, J):
    return groebner(I).basis == groebner(J).basis


def test_monomial_ideal_is_its_own_basis():
    assert set(groebner(Ideal.of("z0", "z1")).basis) == {z(0), z(1)}


def test_single_generator_made_monic():
    assert groebner(Ideal.of("3*z0^2 - 6*z1*z2")).basis == (P("z0^2 - 2*z1*z2"),)


def test_twisted_cubic_membership():
    G = groebner(TWISTED_CUBIC)
    member = P("z0*z3^2 - z1*z2*z3")
    assert normal_form(member, G).is_zero()
    assert normal_form(P("z1^2 - z0*z2"), G).is_zero()
    # independent check: the cubic lies in the degree-3 span of the generators
    span = Ideal(list(TWISTED_CUBIC.generators) + [member])
    assert hilbert_function_oracle(span, 3) == hilbert_function_oracle(TWISTED_CUBIC, 3)


def test_normal_form_examples():
    G = groebner(Ideal.of("z0", "z1"))
    assert normal_form(z(0), G).is_zero()
    assert normal_form(z(2), G) == z(2)


@pytest.mark.parametrize("name", sorted(FIXTURE_IDEALS))
def test_buchberger_postconditions(name):
    I = FIXTURE_IDEALS[name]
    G = groebner(I)
    for g in I.generators:
        assert normal_form(g, G).is_zero()
    for i, f in enumerate(G.basis):
        for g in G.basis[i + 1:]:
            assert normal_form(s_polynomial(f, g), G).is_zero()
    # reduced: monic and no term divisible by another leading monomial
    lms = G.leading_monomials
    for f, lm in zip(G.basis, lms):
        assert f.terms[lm] == 1
        for other in lms:
            if other != lm:
                assert not any(all(a >= b for a, b in zip(m, other)) for m in f.terms)


@pytest.mark.parametrize("name", sorted(FIXTURE_IDEALS))
def test_reduced_basis_matches_sympy(name):
    I = FIXTURE_IDEALS[name]
    ours = {to_sympy(str(g)) for g in groebner(I).basis}
    theirs = sympy.groebner([to_sympy(str(g)) for g in I.generators], *Z, order="grevlex", domain="QQ")
    assert ours == {sympy.expand(g.as_expr()) for g in theirs.exprs}


def test_normal_form_idempotent_on_random_polys():
    rng = np.random.Generator(np.random.PCG64(11))
    G = groebner(TWISTED_CUBIC)
    for _ in range(50):
        p = random_form(2, int(rng.integers(0, 10**6))).form.coefficients[0]
        r = normal_form(p, G)
        assert normal_form(r, G) == r
        assert normal_form(p - r, G).is_zero()


def test_quotient_examples():
    assert same_ideal(ideal_quotient(Ideal.of("z0^2"), z(0)), Ideal.of("z0"))
    assert same_ideal(ideal_quotient(Ideal.of("z0*z1", "z0*z2"), z(0)), Ideal.of("z1", "z2"))
    assert same_ideal(ideal_quotient(Ideal.of("z0"), z(1)), Ideal.of("z0"))


def test_intersection():
    meet = intersect(Ideal.of("z0"), Ideal.of("z1"))
    assert same_ideal(meet, Ideal.of("z0*z1"))


def test_saturation_examples():
    assert same_ideal(saturate(Ideal.of("z0^2", "z0*z1"), z(1)), Ideal.of("z0"))
    assert same_ideal(saturate(Ideal.of("z0", "z1"), z(2)), Ideal.of("z0", "z1"))
    I = Ideal.of("z0^2 - z1*z3", "z2^3")
    assert same_ideal(saturate(I, Poly.constant(1)), I)


def test_irrelevant_saturation_examples():
    m2 = Ideal(a * b for a in map(z, range(4)) for b in map(z, range(4)))
    assert groebner(saturate_irrelevant(m2)).basis == (Poly.constant(1),)
    assert same_ideal(saturate_irrelevant(Ideal.of("z0^2", "z0*z1", "z0*z2", "z0*z3")), Ideal.of("z0"))
    sat = saturate_irrelevant(TWISTED_CUBIC)
    assert same_ideal(sat, TWISTED_CUBIC)
    for t in range(7):
        assert hilbert_function_oracle(sat, t) == hilbert_function_oracle(TWISTED_CUBIC, t)


def test_numerator_examples():
    assert hilbert_series_numerator([(1, 0, 0, 0)]) == (1, -1)
    assert hilbert_series_numerator([(1, 0, 0, 0), (0, 1, 0, 0)]) == (1, -2, 1)
    lead = groebner(TWISTED_CUBIC).leading_monomials
    hp = hilbert_polynomial(TWISTED_CUBIC)
    assert hp.numerator == hilbert_series_numerator(lead)
    for t in range(1, 6):
        assert hp(t) == hilbert_function_oracle(TWISTED_CUBIC, t) == 3 * t + 1


def test_hilbert_polynomial_examples():
    line = hilbert_polynomial(Ideal.of("z0", "z1"))
    assert line.hilbert_polynomial == (1, 1)
    assert (line.projective_dimension, line.scheme_degree, line.kappa) == (1, 1, 1)
    empty = hilbert_polynomial(Ideal.of("z0", "z1", "z2", "z3"))
    assert empty.hilbert_polynomial == () and empty.projective_dimension == -1
    cubic = hilbert_polynomial(TWISTED_CUBIC)
    assert (cubic.projective_dimension, cubic.scheme_degree, cubic.kappa) == (1, 3, 1)


def test_oracle_examples():
    assert hilbert_function_oracle(Ideal.of("z0", "z1"), 2) == 3
    for t in range(5):
        assert hilbert_function_oracle(Ideal([Poly.constant(1)]), t) == 0
    assert hilbert_function_oracle(TWISTED_CUBIC, 2) == 7
    with pytest.raises(GuardExceeded):
        hilbert_function_oracle(TWISTED_CUBIC, 13)


@pytest.mark.parametrize("name", sorted(FIXTURE_IDEALS))
def test_hilbert_polynomial_matches_oracle_past_stabilization(name):
    I = FIXTURE_IDEALS[name]
    hp = hilbert_polynomial(I)
    t0 = max(0, len(hp.numerator) - 1 - 3)
    for t in range(t0, t0 + 4):
        assert hp(t) == hilbert_function_oracle(I, t), t


@pytest.mark.parametrize("name", sorted(FIXTURE_IDEALS))
def test_hilbert_polynomial_is_saturation_invariant(name):
    I = FIXTURE_IDEALS[name]
    a, b = hilbert_polynomial(I), hilbert_polynomial(saturate_irrelevant(I))
    # the series numerator changes; the polynomial part does not
    assert (a.hilbert_polynomial, a.projective_dimension, a.scheme_degree, a.kappa) == \
        (b.hilbert_polynomial, b.projective_dimension, b.scheme_degree, b.kappa)


@pytest.mark.parametrize("name", sorted(FIXTURE_IDEALS))
def test_order_independence(name):
    I = FIXTURE_IDEALS[name]
    a, b = hilbert_polynomial(I, DEGREVLEX), hilbert_polynomial(I, ELIMINATION)
    assert (a.scheme_degree, a.projective_dimension, a.kappa) == (b.scheme_degree, b.projective_dimension, b.kappa)
    assert a.hilbert_polynomial == b.hilbert_polynomial


def test_random_forms_hilbert_consistency():
    for d in (1, 2):
        for seed in range(5):
            I = Ideal(random_form(d, seed).form.coefficients)
            hp = hilbert_polynomial(I)
            t0 = max(0, len(hp.numerator) - 4)
            for t in range(t0, t0 + 2):
                assert hp(t) == hilbert_function_oracle(I, t)
