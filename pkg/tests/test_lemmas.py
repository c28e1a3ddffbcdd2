import pytest

from algebra import PolynomialRing
from forms import transvectant
from lemmas import (A_NAMES, compare, nonic, nullform_checks, pair_2_7_checks, pair_6_3_checks,
                    verify_lemma_expansions, x_power_form, zero_set_checks)


@pytest.fixture(scope="module")
def report():
    return verify_lemma_expansions()


def test_every_transcription_matches(report):
    assert report.failures == []
    assert report.passed


@pytest.mark.parametrize("name", [
    "p = (f, x^2)_2",
    "case 1: substitution gives q = 0",
    "case 2: l with a7 = a8 = 0",
    "case 2: 5 d5 a9 identity",
    "(q, f)_6 = (f, q)_6",
    "(h^2, g^7)_14",
    "h = xy^2: (g, (h,h)_2^3)_6",
    "A_20 with l = x^2",
])
def test_named_checks_pass(report, name):
    assert report.check(name).passed


def test_check_groups():
    assert len(pair_2_7_checks()) == 4
    assert len(pair_6_3_checks()) == 6
    assert len(zero_set_checks()) == 4
    assert {c.lemma for c in nullform_checks()} == {"nullform"}


def test_compare_reports_wrong_coefficients():
    ring = PolynomialRing(A_NAMES)
    f = nonic(ring)
    r = transvectant(f, x_power_form(ring, [1, 0, 0, 0, 0, 0, 0]), 6)
    check = compare("test", "r with a wrong y^3 term", r, {"y^3": "2*a9", "x^3": "a6"})
    assert not check.passed
    assert [m.term for m in check.mismatches] == ["y^3", "x^2y", "xy^2"]
    assert check.mismatches[0].found == "a9"
    assert check.as_dict()["mismatches"][0] == {"term": "y^3", "expected": "2*a9", "found": "a9"}


def test_partial_comparison_ignores_unlisted_terms():
    ring = PolynomialRing(A_NAMES)
    f = nonic(ring)
    r = transvectant(f, x_power_form(ring, [1, 0, 0, 0, 0, 0, 0]), 6)
    assert compare("test", "only y^3", r, {"y^3": "a9"}, complete=False).passed


def test_bad_monomial_label():
    ring = PolynomialRing(A_NAMES)
    r = transvectant(nonic(ring), x_power_form(ring, [1, 0, 0, 0, 0, 0, 0]), 6)
    with pytest.raises(ValueError):
        compare("test", "wrong degree", r, {"x^2": "a6"})


def test_report_frame(report):
    frame = report.to_dataframe()
    assert list(frame.columns) == ["lemma", "check", "passed", "mismatches"]
    assert len(frame) == len(report.checks)
    assert frame["passed"].all()
