from pathlib import Path

import pytest

import ellrank

DATA = Path(__file__).resolve().parents[2] / "data"
EXAMPLE = DATA / "example_k3.txt"


def test_fibers_of_example_surface():
    r = ellrank.fibers(EXAMPLE)
    assert r["configuration"]["summary"] == "III* + 2 I0* + 3 I1"
    assert r["configuration"]["total_euler"] == 24


def test_fibers_from_text():
    r = ellrank.fibers(ellrank.model_text("t^3 (t - 2)", "t^5"))
    assert r["configuration"]["summary"] == "III* + 3 I1"


def test_construct_ledger():
    r = ellrank.construct(2, 4, 2)
    assert r["configuration"]["summary"] == "24 I1"
    assert r["ledger"]["final_expression"].startswith("15 + ")
    assert ellrank.fibers(r["model_text"])["configuration"]["summary"] == "24 I1"


def test_count_matches_known_value():
    r = ellrank.count(EXAMPLE, 17, 1, threads=1)
    assert (r["weierstrass_count"], r["correction"], r["t2"]) == ("324", "170", "204")


def test_certify_and_verify():
    cert = ellrank.certify(EXAMPLE, threads=1)
    assert cert["rho_upper"] == 17
    passed, failed = ellrank.verify(cert)
    assert not failed and passed
    cert["rho_upper"] = 16
    assert ellrank.verify(cert)[1]


@pytest.mark.parametrize(
    "call, code",
    [
        (lambda: ellrank.construct(1, 1, 1), 4),
        (lambda: ellrank.count(EXAMPLE, 2), 5),
        (lambda: ellrank.fibers(DATA / "rational_bad.txt"), 2),
        (lambda: ellrank.fibers(ellrank.model_text("0", "0")), 3),
        (lambda: ellrank.count(EXAMPLE, 17, 9), 6),
    ],
)
def test_errors_carry_exit_codes(call, code):
    with pytest.raises(ellrank.Error) as e:
        call()
    assert e.value.code == code
    assert isinstance(e.value, ValueError)
