"""Independent sympy-based oracles used to cross-check the hand-written engines."""

import sympy

Z = sympy.symbols("z0:4")


def to_sympy(text):
    return sympy.expand(sympy.sympify(text.replace("^", "**"), locals={f"z{i}": Z[i] for i in range(4)}))


def integrability_3form(coeffs):
    """omega ^ d omega for omega = sum A_i dz_i, by the explicit cyclic formula."""
    A = [to_sympy(c) if isinstance(c, str) else c for c in coeffs]

    def curl(i, j):
        return sympy.diff(A[j], Z[i]) - sympy.diff(A[i], Z[j])

    out = {}
    for i, j, k in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
        out[(i, j, k)] = sympy.expand(A[i] * curl(j, k) - A[j] * curl(i, k) + A[k] * curl(i, j))
    return out


def martinet_oracle(coeffs):
    """Quotient of omega ^ d omega by the contraction of the volume form with R."""
    three = integrability_3form(coeffs)
    if all(v == 0 for v in three.values()):
        return sympy.Integer(0)
    # contraction of the volume form with R, written out by hand
    signed = {(0, 1, 2): -Z[3], (0, 1, 3): Z[2], (0, 2, 3): -Z[1], (1, 2, 3): Z[0]}
    quotients = set()
    for idx, coord in signed.items():
        q, r = sympy.div(three[idx], coord, *Z)
        assert r == 0
        quotients.add(sympy.expand(q))
    assert len(quotients) == 1
    return quotients.pop()
