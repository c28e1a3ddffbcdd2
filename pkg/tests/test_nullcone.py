import numpy as np
import pytest

from algebra import PrimeField
from forms import BinaryForm, act, evaluate_expr, parse_form
from nullcone import (INFINITY, is_nullform, pair_nullcone_test, random_form, random_nullform, random_sl2,
                      root_multiplicity_max, weyman_check, weyman_hypothesis)


def linear_power(alpha, beta, k, ring):
    return BinaryForm.linear(alpha, beta, ring).power(k)


def test_multiplicity_of_a_finite_root(qq):
    f = linear_power(1, -2, 7, qq) * linear_power(1, 1, 2, qq)
    report = root_multiplicity_max(f)
    assert report.max_multiplicity == 7
    assert report.witness == "x - 2"
    assert is_nullform(f)


def test_multiplicity_at_infinity(qq):
    report = root_multiplicity_max(BinaryForm.monomial(0, 9, qq))
    assert report.as_dict() == {"multiplicity": 9, "witness": INFINITY, "zero_form": False}


def test_zero_form(qq):
    report = root_multiplicity_max(BinaryForm.zero(9, qq))
    assert report.zero_form
    assert report.max_multiplicity == 10
    assert is_nullform(BinaryForm.zero(9, qq))


def test_squarefree_form(qq):
    f = BinaryForm.linear(1, 1, qq) * BinaryForm.linear(1, -1, qq) * BinaryForm.linear(0, 1, qq)
    assert root_multiplicity_max(f).max_multiplicity == 1


@pytest.mark.parametrize("text, expected", [
    ("9: 0,0,0,0,1,0,0,0,0,0", True),   # x^5 y^4
    ("9: 0,0,0,0,1,1,0,0,0,0", False),  # x^4 y^4 (x + y)
    ("9: 0,0,0,0,0,1,0,0,0,0", True),   # x^4 y^5
    ("9: 0,0,0,0,0,0,1,0,0,0", True),   # x^3 y^6
])
def test_is_nullform(qq, text, expected):
    assert is_nullform(parse_form(text, qq)) == expected


def test_nullforms_stay_nullforms_under_sl2(qq):
    f = BinaryForm.monomial(6, 3, qq)
    assert is_nullform(act(((2, 3), (1, 2)), f))


@pytest.mark.parametrize("multiplicities", [(5, 2, 2), (3, 3, 1), (1, 1, 1, 1), (7,), (4, 4, 1)])
def test_root_multiplicity_is_sl2_invariant(qq, rng, multiplicities):
    f = BinaryForm.monomial(0, 0, qq)
    for k in multiplicities:
        f = f * linear_power(int(rng.integers(1, 6)), int(rng.integers(-6, 7)), k, qq)
    expected = root_multiplicity_max(f).max_multiplicity
    for _ in range(3):
        moved = act(random_sl2(qq, rng), f)
        assert root_multiplicity_max(moved).max_multiplicity == expected
        assert is_nullform(moved) == is_nullform(f)


def test_root_multiplicity_at_infinity_moves_to_a_finite_root(qq, rng):
    f = BinaryForm.monomial(2, 7, qq)
    moved = act(random_sl2(qq, rng), f)
    assert root_multiplicity_max(moved).max_multiplicity == 7


def test_multiplicity_needs_rationals(gf):
    with pytest.raises(TypeError):
        root_multiplicity_max(BinaryForm.monomial(5, 4, gf))


@pytest.mark.parametrize("g, h, expected", [
    ((2, 0), (4, 3), True),
    ((2, 0), (0, 7), False),
    ((1, 1), (4, 3), False),
    ((0, 2), (0, 7), True),
])
def test_pair_nullcone_test(qq, g, h, expected):
    assert pair_nullcone_test(BinaryForm.monomial(*g, qq), BinaryForm.monomial(*h, qq)) == expected


def test_pair_nullcone_test_rejects_zero(qq):
    with pytest.raises(ValueError):
        pair_nullcone_test(BinaryForm.zero(2, qq), BinaryForm.monomial(4, 3, qq))


@pytest.mark.parametrize("seed", range(6))
def test_pair_nullcone_test_is_symmetric(qq, seed):
    rng = np.random.default_rng(seed)
    root = (int(rng.integers(1, 6)), int(rng.integers(-6, 7)))
    g = linear_power(*root, 3, qq) * linear_power(1, int(rng.integers(7, 12)), 2, qq)
    h = linear_power(*root, 4, qq) * linear_power(1, int(rng.integers(-12, -7)), 2, qq)
    other = random_form(6, qq, rng)
    assert pair_nullcone_test(g, h) and pair_nullcone_test(h, g)
    for first, second in [(g, other), (h, other), (act(random_sl2(qq, rng), g), h)]:
        assert pair_nullcone_test(first, second) == pair_nullcone_test(second, first)


@pytest.mark.parametrize("seed", range(5))
def test_random_nullforms(qq, seed):
    f = random_nullform(9, qq, seed)
    assert f.order == 9
    assert is_nullform(f)
    assert random_nullform(9, qq, seed) == f


def test_random_nullforms_kill_the_hsop(gf, nonic):
    for seed in range(3):
        f = random_nullform(9, gf, seed)
        for entry in nonic.hsop:
            assert evaluate_expr(entry.expr, f, nonic).is_zero(), entry.name


def test_random_forms_are_generic(qq):
    assert not is_nullform(random_form(9, qq, 0))
    assert random_form(9, PrimeField(101), 3) == random_form(9, PrimeField(101), 3)


def test_weyman_conclusion_holds(qq):
    verdict = weyman_check(BinaryForm.monomial(8, 1, qq), 2)
    assert verdict.hypothesis_holds
    assert verdict.conclusion_holds
    assert (verdict.multiplicity, verdict.required) == (8, 8)
    assert verdict.passed


def test_weyman_hypothesis_fails_for_generic_forms(qq):
    verdict = weyman_check(random_form(9, qq, 1), 2)
    assert not verdict.hypothesis_holds
    assert verdict.passed


def test_weyman_order_too_small(qq):
    with pytest.raises(ValueError):
        weyman_hypothesis(BinaryForm.monomial(3, 0, qq), 3)


def test_weyman_boundary_order_adds_a_transvectant(qq):
    # d = 4k - 4 adds ((f, f)_(2k-2), f)_d to the list
    forms = weyman_hypothesis(BinaryForm.monomial(8, 0, qq), 3)
    assert [g.order for g in forms] == [4, 0, 0]
