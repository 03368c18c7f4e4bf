import pytest

from distp3.errors import UnknownClaim
from distp3.invariants import isolated_length
from distp3.verifiers import (
    VERIFIERS,
    genus_without_residue,
    run_all,
    run_claim,
    verify_canonical_rational,
    verify_elliptic,
    verify_martinet_picard,
    verify_plane_curve,
)


def test_elliptic():
    report = verify_elliptic(200)
    assert report.solutions == ((1,), (2,), (12,))
    assert report.agrees
    assert isolated_length(12) == 2040 and 2040 // 34 == 60 and 2040 % 34 == 0
    assert isolated_length(1) == 5


def test_plane_curve():
    report = verify_plane_curve(100)
    assert report.solutions == ((1, 0),)
    assert report.agrees
    for m in range(1, 30):
        p_a = (m - 1) * (m - 2) // 2
        assert 2 - 2 * p_a == -m * (m - 3)


def test_martinet_picard():
    report = verify_martinet_picard(100)
    assert report.solutions == () and report.agrees
    assert verify_martinet_picard(5).agrees
    d, r = 1, 1
    assert isolated_length(d) - (3 * d - 2) * 2 * d * r + 2 * d * r * (r + 2 * d - 4) != 0


def test_canonical_search_finds_a_degree_six_canonical_curve():
    report = verify_canonical_rational(40)
    # d = 6, deg C = 20: 2 p_a - 2 = 16*20 - 300 = 20, so the curve would be canonical
    assert report.solutions == ((6, 20, 11, "canonical"),)
    assert genus_without_residue(6, 20) == 11
    assert 20 <= 6 * 6 + 6 + 1
    assert not report.agrees


def test_canonical_search_is_clean_beyond_six():
    assert verify_canonical_rational(120, d_min=7).solutions == ()


def test_canonical_diagnostic_low_degrees():
    low = verify_canonical_rational(4, d_min=1)
    assert low.solutions  # small degrees do admit rational or canonical candidates
    assert verify_canonical_rational(4).solutions == ()  # empty range passes vacuously


@pytest.mark.parametrize("claim", sorted(VERIFIERS))
def test_monotone_in_range(claim):
    small, large = run_claim(claim, 20), run_claim(claim, 40)
    assert set(small.solutions) <= set(large.solutions)


def test_run_all_and_unknown_claim():
    reports = {r.claim: r for r in run_all()}
    assert {k: v.agrees for k, v in reports.items()} == {
        "canonical_rational": False, "elliptic": True, "plane_curve": True, "martinet_picard": True}
    with pytest.raises(UnknownClaim):
        run_claim("riemann")


def test_report_serialization():
    d = verify_elliptic(20).to_dict()
    assert d["solutions"] == [[1], [2], [12]] and d["agrees"] is True
