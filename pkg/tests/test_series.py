import pytest
from sympy.polys.domains import QQ

import reference
from series import (DegreeSequence, InsufficientDepthError, check_sequence, check_weight_lemma,
                    covariant_dimension, ecriture_minimale_search, invariant_dimension, lowering_operator_dimension,
                    min_degree_count,
                    poincare_series, prime_power_count, rational_by_division, to_rational)

NONIC_HSOP = DegreeSequence(reference.nonic_hsop_degrees)


@pytest.mark.parametrize("d, dim", [(0, 1), (2, 0), (4, 2), (6, 0), (8, 8), (10, 5), (12, 28), (20, 217)])
def test_nonic_dimensions(d, dim):
    assert invariant_dimension(9, d) == dim


def test_odd_degrees_of_odd_forms_are_empty():
    assert all(invariant_dimension(9, d) == 0 for d in range(1, 40, 2))


@pytest.mark.parametrize("n, d, dim", [(3, 4, 1), (3, 8, 1), (3, 6, 0), (4, 6, 2), (4, 12, 3)])
def test_small_dimensions(n, d, dim):
    assert invariant_dimension(n, d) == dim


@pytest.mark.parametrize("n, d, m", [(9, 3, 3), (9, 4, 6), (5, 7, 5), (6, 6, 12)])
def test_hermite_reciprocity(n, d, m):
    assert covariant_dimension(n, d, m) == covariant_dimension(d, n, m)


@pytest.mark.parametrize("n", range(1, 9))
def test_hermite_reciprocity_for_invariants(n):
    assert all(invariant_dimension(n, d) == invariant_dimension(d, n) for d in range(1, 9))


@pytest.mark.parametrize("n", range(1, 7))
def test_partition_count_matches_the_lowering_operator(n):
    for d in range(11):
        assert invariant_dimension(n, d) == lowering_operator_dimension(n, d), (n, d)


@pytest.mark.parametrize("d, dim", [(0, 1), (2, 1), (4, 2), (5, 0), (6, 3)])
def test_lowering_operator_on_sextics(d, dim):
    assert lowering_operator_dimension(6, d) == dim


def test_nonic_series_matches_published_table():
    table = poincare_series(9, 66)
    assert list(table) == reference.expand(reference.nonic_poincare, 66)
    assert table.to_dataarray().sel(degree=20).item() == 217
    assert table.as_dict()["36"] == 3811


def test_nonic_numerator():
    rational = to_rational(poincare_series(9, 92), NONIC_HSOP)
    assert list(rational.numerator) == reference.expand(reference.nonic_numerator, 66)
    assert rational.numerator_degree == 66
    assert rational.numerator == rational.numerator[::-1]
    assert rational.expand(66) == reference.expand(reference.nonic_poincare, 66)


def test_cubic_numerator():
    rational = to_rational(poincare_series(3, 8), (4,))
    assert rational.numerator == (1,)
    assert rational.limit_ratio() == QQ(1, 4)


def test_negative_numerator_is_rejected():
    assert to_rational(poincare_series(3, 4), (2,)) is None


def test_shallow_table():
    with pytest.raises(InsufficientDepthError):
        to_rational(poincare_series(9, 20), NONIC_HSOP)


def test_rational_by_division_agrees_with_the_table():
    table = poincare_series(9, 120)
    base = to_rational(table, NONIC_HSOP)
    other = DegreeSequence((4, 4, 10, 12, 14, 16, 24))
    assert rational_by_division(base, other) == to_rational(table, other)
    assert rational_by_division(base, (4, 4, 4, 4, 4, 4, 4)) is None


@pytest.mark.parametrize("t, expected", [(2, (4, 4)), (3, (2, 6)), (4, (2, 8)), (5, (1, 10))])
def test_min_degree_count(t, expected):
    assert min_degree_count(9, t) == expected


@pytest.mark.parametrize("t", [2, 3, 4, 5, 7, 8, 9])
def test_prime_power_count_agrees_on_counts(t):
    assert prime_power_count(9, t)[0] == min_degree_count(9, t)[0]


@pytest.mark.parametrize("t", [2, 4, 8])
def test_prime_power_count_for_powers_of_two(t):
    assert prime_power_count(9, t) == min_degree_count(9, t)


def test_prime_power_count_rejects_composites():
    with pytest.raises(ValueError):
        prime_power_count(9, 6)


def test_published_sequence_passes():
    assert check_sequence(9, NONIC_HSOP)
    assert check_weight_lemma(9, NONIC_HSOP)


def test_failing_sequence():
    check = check_sequence(9, (4, 4, 4, 10, 12, 14, 16))
    assert not check
    assert [v.t for v in check.violations] == [3, 4]
    assert (check.first_violation.required, check.first_violation.divisor, check.first_violation.found) == (2, 6, 1)


def test_degree_sequence_parse():
    seq = DegreeSequence.parse("16,4, 8")
    assert seq.degrees == (4, 8, 16)
    assert (seq.product, seq.sum, seq.max, str(seq)) == (512, 28, 16, "4,8,16")
    with pytest.raises(ValueError):
        DegreeSequence((0, 4))


def test_cubic_ecriture():
    rows = ecriture_minimale_search(3)
    assert [(r.numerator, r.denominator.degrees) for r in rows] == [((1,), (4,))]


def test_ecriture_needs_a_seed():
    with pytest.raises(ValueError):
        ecriture_minimale_search(11)


@pytest.mark.slow
def test_nonic_ecritures():
    rows = ecriture_minimale_search(9)
    found = sorted((r.numerator_degree, r.denominator.degrees) for r in rows)
    assert found == reference.nonic_ecritures
    assert {r.denominator.product for r in rows} == {NONIC_HSOP.product}


@pytest.mark.slow
def test_septic_ecritures():
    rows = ecriture_minimale_search(7)
    assert set(reference.hsop_sequences[7]) <= {r.denominator.degrees for r in rows}
    assert all(r.is_nonnegative() for r in rows)
