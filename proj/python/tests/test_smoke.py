import math

import pytest

import abelnorm


def test_digits_and_prefixes():
    assert abelnorm.champernowne_digit(11) == 0
    assert abelnorm.stream_prefix("c10", 12) == "123456789101"
    assert abelnorm.stream_prefix("d10", 14) == "12345678901111"
    assert abelnorm.sigma_transform("24911010010772") == "24900001111772"
    assert abelnorm.binary_runs("c10", 15) == [(1, 1, 0, 1), (10, 5, 1, 4)]


def test_counts():
    assert abelnorm.count_A("c10", "12", 50) == 3
    assert abelnorm.count_B("c10", "12", 50) == 5
    assert abelnorm.count_A("d10", "10", 100000) == 0
    assert abelnorm.count_D("4501140", 39123) == 1
    assert abelnorm.count_C("4501140", 40972, causal=True) == 1


def test_weights():
    w = abelnorm.weight("10")
    assert w["case_tag"] == "binary-series"
    assert abs(w["value"] - 16 / 9) <= w["abs_error"]
    assert abelnorm.weight("2345")["value"] == 24
    mixed = abelnorm.weight("4501140", estimate_n=1000)
    assert mixed["abs_error"] is None
    assert mixed["value"] == 630
    assert mixed["estimator_n"] == 1000


def test_reports():
    rows = abelnorm.verify_identity("4501140", [50000])
    assert rows[0]["mismatch"] == 0
    report = abelnorm.verify_paper_examples()
    assert report["checks"]["A_12(C10, 50)"][0]
    table = abelnorm.convergence_table("d10", "11", [1000, 10000])
    assert [r["n"] for r in table] == [1000, 10000]
    assert all(math.isfinite(r["ratio"]) for r in table)


def test_errors():
    with pytest.raises(ValueError):
        abelnorm.count_A("c10", "1x", 10)
    with pytest.raises(ValueError):
        abelnorm.stream_prefix("pi", 10)
    with pytest.raises(ValueError):
        abelnorm.weight("10", tol=0)
