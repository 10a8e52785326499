import dataclasses
import json
import math

import pytest

from floorfull.certificates import (
    CASE_I,
    CASE_II,
    CASE_III,
    Certificate,
    construct_certificate,
    dirichlet_search,
    validate_certificate,
    verify_non_rfull,
)
from floorfull.classify import is_r_full
from floorfull.errors import NotFoundWithinBound


def oracle_is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


# --- dirichlet search -------------------------------------------------------

@pytest.mark.parametrize(
    "ell,expected_s,expected_q",
    [(3, 2, 5), (6, 2, 11), (15, 2, 29), (25, 6, 149)],
)
def test_dirichlet_search_finds_smallest(ell, expected_s, expected_q):
    s, q_star = dirichlet_search(ell, 100)
    assert (s, q_star) == (expected_s, expected_q)
    assert oracle_is_prime(q_star)
    assert q_star == ell * s - 1
    for smaller in range(2, s):
        assert not oracle_is_prime(ell * smaller - 1)


def test_dirichlet_search_bound_exhaustion():
    # for ell = 25 the first hit is s = 6, so a bound of 5 must fail loudly
    with pytest.raises(NotFoundWithinBound) as exc:
        dirichlet_search(25, 5)
    assert exc.value.bound == 5


def test_dirichlet_search_rejects_bad_args():
    with pytest.raises(ValueError):
        dirichlet_search(1)
    with pytest.raises(ValueError):
        dirichlet_search(3, 1)


# --- construction -----------------------------------------------------------

def test_construct_case_i():
    cert = construct_certificate(2, 2)
    assert (cert.case, cert.k) == (CASE_I, 10)
    assert validate_certificate(cert).ok


def test_construct_case_ii():
    cert = construct_certificate(2, 4)
    assert (cert.case, cert.p, cert.k) == (CASE_II, 2, 2)
    assert validate_certificate(cert).ok


def test_construct_case_iii():
    cert = construct_certificate(2, 3)
    assert (cert.case, cert.q, cert.s, cert.q_star, cert.k) == (CASE_III, 3, 2, 5, 12)
    assert validate_certificate(cert).ok


def test_construct_case_selection_partition():
    # ell = 2 -> I; squared prime divisor -> II; square-free >= 3 -> III
    for ell in range(2, 80):
        cert = construct_certificate(3, ell)
        if ell == 2:
            assert cert.case == CASE_I
        elif any(ell % (p * p) == 0 for p in range(2, ell)):
            assert cert.case == CASE_II
        else:
            assert cert.case == CASE_III
        assert validate_certificate(cert).ok, (ell, cert)


def test_construct_is_deterministic_and_r_independent():
    certs = [construct_certificate(r, 21) for r in (2, 3, 4, 5)]
    assert len({(c.case, c.k, c.q, c.s, c.q_star) for c in certs}) == 1
    assert construct_certificate(2, 21) == construct_certificate(2, 21)


def test_construct_rejects_bad_args():
    with pytest.raises(ValueError):
        construct_certificate(1, 3)
    with pytest.raises(ValueError):
        construct_certificate(2, 1)


# --- validation -------------------------------------------------------------

def test_validate_reports_reason_codes():
    base3 = construct_certificate(2, 3)

    tampered = dataclasses.replace(base3, q=2)
    result = validate_certificate(tampered)
    assert not result.ok and result.reason == "q_must_be_odd"

    bad_case2 = Certificate(r=2, ell=6, case=CASE_II, k=3, p=3)
    result = validate_certificate(bad_case2)
    assert not result.ok and result.reason == "p_squared_does_not_divide_ell"

    result = validate_certificate(dataclasses.replace(base3, k=13))
    assert not result.ok and result.reason == "k_formula_mismatch"

    result = validate_certificate(dataclasses.replace(base3, s=3, q_star=8, k=3 * 7))
    assert not result.ok and result.reason == "q_star_not_prime"

    not_squarefree = Certificate(
        r=2, ell=12, case=CASE_III, k=12 * 22, q=3, s=2, q_star=23
    )
    result = validate_certificate(not_squarefree)
    assert not result.ok and result.reason == "ell_not_squarefree"

    wrong_case1 = Certificate(r=2, ell=3, case=CASE_I, k=10)
    assert validate_certificate(wrong_case1).reason == "case1_requires_ell_2"

    unknown = Certificate(r=2, ell=3, case="IV", k=10)
    assert validate_certificate(unknown).reason == "unknown_case"


def test_certificate_json_round_trip():
    for ell in (2, 4, 15):
        cert = construct_certificate(3, ell)
        blob = json.dumps(cert.to_json_dict())
        assert Certificate.from_json_dict(json.loads(blob)) == cert


# --- verification -----------------------------------------------------------

def test_verify_case_i_witnesses():
    report = verify_non_rfull(construct_certificate(2, 2), max_m=40)
    assert report.all_passed
    by_m = {line.m: line for line in report.lines}
    assert by_m[1].witness == 3  # 12 = 2^2 * 3 fails through the odd prime
    assert by_m[3].witness == 2  # 18 = 2 * 9: single factor of 2
    assert (2**3 + 10) % 2 == 0 and (2**3 + 10) % 4 != 0


def test_verify_case_iii_first_exponent():
    report = verify_non_rfull(construct_certificate(2, 3), max_m=1)
    line = report.lines[0]
    assert line.witness == 5
    assert 3 + 12 == 15 == 3 * 5


def test_verify_case_ii_witness():
    report = verify_non_rfull(construct_certificate(2, 4), max_m=5)
    line = {l.m: l for l in report.lines}[2]
    assert line.witness == 2
    assert (16 + 2) % 2 == 0 and (16 + 2) % 4 != 0


def test_verify_witness_skeleton_directly():
    # recompute the divisibility pattern on the full integers, independent of
    # the modular-pow route used inside verify_non_rfull
    for ell in (2, 3, 4, 6, 15, 18):
        cert = construct_certificate(2, ell)
        report = verify_non_rfull(cert, max_m=12)
        for line in report.lines:
            value = ell ** line.m + cert.k
            assert value % line.witness == 0
            assert value % line.witness**2 != 0


def test_verify_crosschecks_small_values():
    report = verify_non_rfull(construct_certificate(2, 3), max_m=40)
    assert any(line.cross_checked for line in report.lines)
    assert not all(line.cross_checked for line in report.lines)  # 3^40 is huge


def test_case_iii_shift_never_squarefull_by_factorization():
    for m in range(1, 41):
        assert not is_r_full(3 ** m + 12, 2)


def test_verify_rejects_invalid_certificate():
    broken = Certificate(r=2, ell=6, case=CASE_II, k=3, p=3)
    with pytest.raises(ValueError, match="p_squared_does_not_divide_ell"):
        verify_non_rfull(broken)
    with pytest.raises(ValueError):
        verify_non_rfull(construct_certificate(2, 2), max_m=0)


def test_small_grid_constructs_validates_verifies():
    for r in (2, 3):
        for ell in range(2, 13):
            cert = construct_certificate(r, ell)
            assert validate_certificate(cert).ok
            assert verify_non_rfull(cert, max_m=20).all_passed


def test_report_json_shape():
    payload = verify_non_rfull(construct_certificate(2, 2), max_m=3).to_json_dict()
    assert payload["certificate"]["case"] == "I"
    assert payload["max_m"] == 3
    assert [line["m"] for line in payload["lines"]] == [1, 2, 3]
    assert payload["all_passed"] is True
