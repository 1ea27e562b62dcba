from fractions import Fraction

import pytest

import biortho


def test_coeffs_examples():
    assert biortho.coeffs("M", 1, p=5, q=0, upsilon=1) == [Fraction(-1), Fraction(3)]
    assert biortho.coeffs("Mfrak", 1, p=10, q=0, upsilon=2) == [Fraction(-1, 2), Fraction(4)]
    assert biortho.coeffs("M", 1, p="7/2", q=Fraction(1, 2)) == [Fraction(-3, 2), Fraction(3, 2)]


def test_constraint_is_value_error():
    with pytest.raises(ValueError):
        biortho.coeffs("M", 1, p=3, q=0, upsilon=2)
    with pytest.raises(biortho.ConstraintError):
        biortho.verify(["nosuch"])


def test_evaluate_matches_exact_coefficients():
    c = biortho.coeffs("M", 1, p=8, q=1, upsilon=2)
    x = 0.5
    assert biortho.evaluate("M", 1, x, p=8, q=1, upsilon=2) == float(sum(ck * Fraction(x) ** k for k, ck in enumerate(c)))


def test_inner_and_laplace():
    assert biortho.inner_M(10, 0, 2, 1, 1)["value"] == Fraction(1, 3)
    assert biortho.inner_M(10, 0, 2, 1, 0)["value"] == 0
    assert biortho.inner_M("21/2", "1/2", 2, 1, 1)["value"] is None
    assert biortho.laplace(8, 1, 2, 1, w=1, alpha=2)["exact"] == Fraction(39, 4)
    assert biortho.laplace(8, 1, 2, 1, w=1, alpha=2, variant="printed")["exact"] == Fraction(21, 16)


def test_fourier_check():
    rep = biortho.fourier_check(3, 3, 3, 3, n=1, m=1)
    assert rep["verdict"] == "PASS"
    assert biortho.fourier_check(3, 3, 3, 3, n=1, m=1, phi="printed")["verdict"] == "FAIL"


def test_verify_is_deterministic():
    a = biortho.verify(["eq15-printed", "mort"], seed=7)
    b = biortho.verify(["mort", "eq15-printed"], seed=7)
    assert a == b
    assert not a["drift"]
    claims = {c["id"]: c for c in a["report"]["claims"]}
    assert claims["eq15-printed"]["verdict"] == "FAIL"
    assert claims["eq15-printed"]["residual_repr"] == [["8", "1"], ["28", "1"]]
    assert claims["mort"]["verdict"] == "PASS"
    assert "eq14" in biortho.claim_ids()
