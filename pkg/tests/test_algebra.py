import numpy as np
import pytest
from sympy.polys.domains import QQ

from algebra import (Dual, DualField, PolynomialRing, PrimeField, RationalField, evaluate_poly, falling,
                     format_poly, gcd_univariate, make_ring, parse_poly, partial_derivative, poly_arith, to_qq)


def test_prime_field_inverse():
    gf = PrimeField(32003)
    assert gf.inverse(2) == 16002
    assert gf.from_rational(1, 2) == 16002
    assert gf.mul(2, gf.inverse(2)) == 1


@pytest.mark.parametrize("p", [2, 4, 9, 32004])
def test_prime_field_rejects_non_primes(p):
    with pytest.raises(ValueError):
        PrimeField(p)


def test_prime_field_denominator_divisible_by_p():
    with pytest.raises(ValueError):
        PrimeField(7).from_rational(1, 14)


def test_dual_arithmetic():
    p = 32003
    a, b = Dual(2, 3, p), Dual(5, 7, p)
    assert a * b == Dual(10, 29, p)
    assert a + b == Dual(7, 10, p)
    assert -a == Dual(p - 2, p - 3, p)
    with pytest.raises(TypeError):
        a * Dual(1, 1, 7)


def test_dual_field_vector_holds_values_and_slopes():
    ring = DualField(101)
    vec = ring.vector([(1, 2), 3])
    assert ring.elements(vec) == [Dual(1, 2, 101), Dual(3, 0, 101)]


def test_to_qq():
    assert to_qq("-4/245") == QQ(-4, 245)
    assert to_qq(3) == QQ(3)
    assert RationalField().element_text(to_qq("6/4")) == "3/2"


def test_make_ring():
    assert make_ring("QQ") == RationalField()
    assert make_ring("7") == PrimeField(7)
    assert make_ring("dual:32003") == DualField(32003)
    assert make_ring("7") != make_ring("dual:7")


def test_gcd_univariate():
    ring = PolynomialRing("x")
    x = ring["x"]
    assert gcd_univariate((x - 1) ** 2 * (x + 2), (x - 1) * (x + 3)) == x - 1
    assert gcd_univariate(2 * x + 2, ring.zero()) == x + 1
    assert gcd_univariate(x ** 2 + 1, x + 1) == ring.one()


def test_gcd_univariate_rejects_two_variables():
    ring = PolynomialRing("x y")
    x, y = ring["x"], ring["y"]
    with pytest.raises(ValueError):
        gcd_univariate(x * y, x)
    with pytest.raises(ValueError):
        gcd_univariate(x + 1, y + 1)


def test_format_and_parse():
    ring = PolynomialRing("a1 a2 a5")
    a1, a2, a5 = ring["a1"], ring["a2"], ring["a5"]
    poly = 70 * a5 ** 2 - QQ(1, 3) * a1 * a2 + 4
    assert parse_poly(ring, format_poly(poly)) == poly
    assert ring.coerce("70*a5^2 - 1/3*a1*a2 + 4") == poly
    assert format_poly(ring.zero()) == "0"


def test_polynomials_of_different_rings_do_not_mix():
    with pytest.raises(TypeError):
        PolynomialRing("x").coerce(PolynomialRing("y")["y"])


def test_poly_arith():
    ring = PolynomialRing("a4 a5 x y")
    a4, a5, x, y = ring["a4"], ring["a5"], ring["x"], ring["y"]
    assert poly_arith(x + y, x - y, "mul") == x ** 2 - y ** 2
    assert poly_arith(x + y, -(x + y), "add") == ring.zero()
    square = poly_arith(a4 * x + a5 * y, a4 * x + a5 * y, "mul")
    assert square == a4 ** 2 * x ** 2 + 2 * a4 * a5 * x * y + a5 ** 2 * y ** 2
    with pytest.raises(TypeError):
        poly_arith(x, PolynomialRing("x")["x"], "add")
    with pytest.raises(ValueError):
        poly_arith(x, y, "sub")


def test_falling():
    assert falling(5, 2) == 20
    assert falling(3, 0) == 1
    assert falling(2, 3) == 0


def test_partial_derivative():
    ring = PolynomialRing("x y")
    x, y = ring["x"], ring["y"]
    assert partial_derivative(x ** 2 * y, "x") == 2 * x * y
    assert partial_derivative(x ** 2 * y, "y") == x ** 2
    with pytest.raises(ValueError):
        partial_derivative(x, "z")


def test_evaluate_poly():
    ring = PolynomialRing("x y")
    x, y = ring["x"], ring["y"]
    poly = x ** 2 + QQ(1, 2) * y
    assert evaluate_poly(poly, [3, 4], PrimeField(7)) == 4
    assert evaluate_poly(poly, [QQ(3), QQ(4)], RationalField()) == QQ(11)


def test_prime_field_agrees_with_integer_arithmetic(rng):
    gf = PrimeField(32003)
    for a, b in rng.integers(-2 ** 62, 2 ** 62, size=(1000, 2)).tolist():
        x, y = gf.from_int(a), gf.from_int(b)
        assert gf.add(x, y) == (a + b) % gf.p
        assert gf.sub(x, y) == (a - b) % gf.p
        assert gf.mul(x, y) == a * b % gf.p
        assert gf.neg(x) == -a % gf.p
        if b % gf.p:
            assert gf.mul(gf.inverse(y), b) % gf.p == 1


def random_polynomial(ring, rng, terms=6, max_exponent=4):
    poly = ring.zero()
    for _ in range(terms):
        term = ring.from_int(int(rng.integers(-9, 10)))
        for gen in ring.gens.values():
            term = term * gen ** int(rng.integers(0, max_exponent))
        poly = poly + term
    return poly


@pytest.mark.parametrize("seed", range(5))
def test_dual_slope_is_the_partial_derivative(seed):
    rng = np.random.default_rng(seed)
    ring = PolynomialRing("x y z")
    poly = random_polynomial(ring, rng)
    gf, dual = PrimeField(32003), DualField(32003)
    point = [int(v) for v in rng.integers(0, gf.p, 3)]
    for k, name in enumerate(ring.names):
        values = [dual.coerce((v, int(j == k))) for j, v in enumerate(point)]
        result = evaluate_poly(poly, values, dual)
        assert result.a == evaluate_poly(poly, point, gf)
        assert result.b == evaluate_poly(partial_derivative(poly, name), point, gf)


@pytest.mark.parametrize("seed", range(5))
def test_gcd_divides_both_and_leaves_coprime_quotients(seed):
    rng = np.random.default_rng(seed)
    ring = PolynomialRing("x")
    x = ring["x"]

    def monic(degree):
        return sum((int(rng.integers(-5, 6)) * x ** k for k in range(degree)), x ** degree)

    common = monic(2)
    p, q = common * monic(3), common * monic(1)
    g = gcd_univariate(p, q)
    assert g.LC == 1 and g.degree() >= 2
    p_quotient, p_remainder = divmod(p, g)
    q_quotient, q_remainder = divmod(q, g)
    assert not p_remainder and not q_remainder
    assert gcd_univariate(p_quotient, q_quotient) == ring.one()
