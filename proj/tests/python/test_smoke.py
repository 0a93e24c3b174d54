from fractions import Fraction

import pytest

import randmin


def test_exact_density_engines_agree():
    expected = Fraction(17, 24)
    for algo in ("naive", "dict", "weiner"):
        assert randmin.exact_density(2, 2, 2, algo=algo) == expected
    assert randmin.closed_form_density(2, 2, 2) == expected
    assert randmin.average_over_all_orders(2, 2, 2) == expected


def test_closed_form_matches_enumeration():
    for k, w in [(3, 2), (4, 3), (5, 5)]:
        assert randmin.closed_form_density(2, k, w) == randmin.exact_density(2, k, w)


def test_density_factor_crosses_two():
    assert randmin.density_factor(2, 16, 16) > 2
    assert randmin.density_factor(2, 17, 17) < 2
    assert randmin.find_crossing(2)["first_negative"] == 17
    assert randmin.find_crossing(10)["first_negative"] == 30


def test_deviation_and_delta():
    assert randmin.deviation(2, 1) == 0
    assert randmin.deviation(2, 3) == Fraction(4, 3)
    assert randmin.delta(2, 1) + randmin.delta(2, 2) == randmin.deviation(2, 3)


def test_prim_counts_are_python_ints():
    counts = randmin.prim(2, 6)
    assert counts == [2, 2, 6, 12, 30, 54]
    big = randmin.prim(2, 80)[-1]
    assert isinstance(big, int) and big > 2**64


def test_gamechanger_probability():
    assert randmin.gamechanger_probability("0101", 2, 2, 2) == Fraction(1, 2)
    assert randmin.gamechanger_probability("0011", 2, 2, 2) == Fraction(2, 3)


def test_major_run():
    assert randmin.find_major_run("0101010") == (1, 7, 2)
    assert randmin.find_major_run("0011") is None


def test_sampling():
    # Each order gives density 11/16 or 3/4, so with few replicates the
    # markup mean sits between them rather than near 17/24.
    e = randmin.mc_density(2, 2, 2, n=200_000, replicates=8, seed=3)
    assert 11 / 16 - 0.005 <= e["mean"] <= 3 / 4 + 0.005
    c = randmin.mc_density(2, 2, 2, n=200_000, replicates=8, seed=3, estimator="context")
    assert abs(c["mean"] - 17 / 24) <= 4 * c["std_error"]
    assert randmin.bigw_window(2, 2) == 36
    assert randmin.bigw_upper_bound(2, 2, 36) > 0.25


def test_verify_suite():
    report = randmin.verify("major-run", max_total=10, max_length=12)
    assert report["passed"] is True
    assert "lemma2" in randmin.suite_names()


def test_errors():
    with pytest.raises(ValueError):
        randmin.closed_form_density(2, 2, 5)
    with pytest.raises(OverflowError):
        randmin.exact_density(4, 12, 12, algo="naive", cap=1000)
