"""Scalar rings and polynomial arithmetic.

Every binary form carries one of the rings defined here. A ring knows its
element arithmetic and a few operations on coefficient vectors (integer
scaling, convolution, linear combination), so the transvectant in
``forms.py`` is written once for all of them. The prime-field rings keep
their vectors as numpy arrays and override the vector operations.

Rationals are sympy ``QQ`` elements and symbolic coefficients live in sympy
sparse polynomial rings over ``QQ`` with graded lexicographic order.
"""
import logging
from dataclasses import dataclass
from math import prod

import numpy as np
import sympy
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

LOGGER = logging.getLogger(__name__)

DEFAULT_PRIME = 32003

# Above this bound a product of two residues no longer fits comfortably in
# an int64 accumulator, and prime-field vectors fall back to Python ints.
_WIDE_PRIME_LIMIT = 2**26


def is_prime(p):
    return p >= 2 and sympy.isprime(int(p))


def to_qq(value):
    """Convert an int, a ``QQ`` element or a text literal like ``-4/245``."""
    if isinstance(value, str):
        return QQ.from_sympy(sympy.Rational(value.strip()))
    if isinstance(value, int):
        return QQ(value)
    return QQ.convert(value)


class ScalarRing:
    """Base class of the scalar rings.

    Subclasses must provide ``zero``, ``one``, ``from_int`` and
    ``from_rational``; the generic vector operations below are written in
    terms of element operators and are enough for exact rings.
    """

    name = "ring"

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def __repr__(self):
        return self.name

    def _key(self):
        return ()

    # Elements

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, k):
        raise NotImplementedError

    def from_rational(self, numerator, denominator):
        raise NotImplementedError

    def from_qq(self, q):
        return self.from_rational(int(QQ.numer(q)), int(QQ.denom(q)))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def power(self, a, k):
        result = self.one()
        for _ in range(k):
            result = self.mul(result, a)
        return result

    def is_zero(self, a):
        return not a

    def element_text(self, a):
        return str(a)

    # Coefficient vectors

    def vector(self, values):
        return tuple(self.coerce(v) for v in values)

    def coerce(self, value):
        if isinstance(value, int):
            return self.from_int(value)
        return value

    def elements(self, vec):
        return list(vec)

    def scale_ints(self, vec, ints):
        return tuple(self.mul(self.from_int(k), c) for k, c in zip(ints, vec))

    def scale(self, vec, c):
        return tuple(self.mul(c, v) for v in vec)

    def convolve(self, u, v):
        out = [self.zero() for _ in range(len(u) + len(v) - 1)]
        for i, a in enumerate(u):
            if self.is_zero(a):
                continue
            for j, b in enumerate(v):
                out[i + j] = self.add(out[i + j], self.mul(a, b))
        return tuple(out)

    def combine(self, vecs, weights):
        out = [self.zero() for _ in range(len(vecs[0]))]
        for vec, w in zip(vecs, weights):
            if w == 0:
                continue
            scaled = self.scale_ints(vec, [w] * len(vec))
            out = [self.add(a, b) for a, b in zip(out, scaled)]
        return tuple(out)

    def vector_is_zero(self, vec):
        return all(self.is_zero(c) for c in vec)

    def vectors_equal(self, u, v):
        return len(u) == len(v) and all(self.is_zero(self.sub(a, b)) for a, b in zip(u, v))


class RationalField(ScalarRing):
    """Exact rationals, always in lowest terms with a positive denominator."""

    name = "QQ"

    def zero(self):
        return QQ(0)

    def one(self):
        return QQ(1)

    def from_int(self, k):
        return QQ(int(k))

    def from_rational(self, numerator, denominator):
        return QQ(int(numerator), int(denominator))

    def from_qq(self, q):
        return QQ.convert(q)

    def coerce(self, value):
        return to_qq(value)

    def inverse(self, a):
        if not a:
            raise ZeroDivisionError("zero has no inverse")
        return QQ(1) / a

    def random_element(self, rng, bound=9):
        return QQ(int(rng.integers(-bound, bound + 1)))

    def element_text(self, a):
        num, den = int(QQ.numer(a)), int(QQ.denom(a))
        return str(num) if den == 1 else f"{num}/{den}"


class PrimeField(ScalarRing):
    """The field F_p with elements stored as ints in [0, p)."""

    def __init__(self, p=DEFAULT_PRIME):
        p = int(p)
        if p == 2 or not is_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        self.p = p
        self._dtype = np.int64 if p < _WIDE_PRIME_LIMIT else object
        self.name = f"GF({p})"

    def _key(self):
        return (self.p,)

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, k):
        return int(k) % self.p

    def from_rational(self, numerator, denominator):
        if denominator % self.p == 0:
            raise ValueError(f"denominator {denominator} is not invertible modulo {self.p}")
        return int(numerator) * pow(int(denominator), -1, self.p) % self.p

    def coerce(self, value):
        if isinstance(value, str):
            value = to_qq(value)
        if isinstance(value, (int, np.integer)):
            return self.from_int(int(value))
        return self.from_qq(value)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def power(self, a, k):
        return pow(int(a), k, self.p)

    def inverse(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(int(a), -1, self.p)

    def random_element(self, rng):
        return int(rng.integers(self.p))

    def _array(self, values):
        arr = np.array([int(v) % self.p for v in values], dtype=self._dtype)
        arr.setflags(write=False)
        return arr

    def vector(self, values):
        return self._array(self.coerce(v) for v in values)

    def elements(self, vec):
        return [int(c) for c in vec]

    def scale_ints(self, vec, ints):
        ints = np.array([k % self.p for k in ints], dtype=self._dtype)
        return self._freeze(vec * ints % self.p)

    def scale(self, vec, c):
        return self._freeze(vec * (int(c) % self.p) % self.p)

    def convolve(self, u, v):
        return self._freeze(np.convolve(u, v) % self.p)

    def combine(self, vecs, weights):
        out = np.zeros(len(vecs[0]), dtype=self._dtype)
        for vec, w in zip(vecs, weights):
            out = (out + vec * (w % self.p)) % self.p
        return self._freeze(out)

    def vector_is_zero(self, vec):
        return not np.any(vec)

    def vectors_equal(self, u, v):
        return len(u) == len(v) and bool(np.all(np.asarray(u) == np.asarray(v)))

    def _freeze(self, arr):
        arr = np.asarray(arr, dtype=self._dtype)
        arr.setflags(write=False)
        return arr


@dataclass(frozen=True)
class Dual:
    """Dual number a + b·eps over F_p, with eps^2 = 0."""

    a: int
    b: int
    p: int

    def _check(self, other):
        if self.p != other.p:
            raise TypeError("dual numbers over different primes")

    def __add__(self, other):
        self._check(other)
        return Dual((self.a + other.a) % self.p, (self.b + other.b) % self.p, self.p)

    def __sub__(self, other):
        self._check(other)
        return Dual((self.a - other.a) % self.p, (self.b - other.b) % self.p, self.p)

    def __mul__(self, other):
        self._check(other)
        return Dual(self.a * other.a % self.p,
                    (self.a * other.b + self.b * other.a) % self.p, self.p)

    def __neg__(self):
        return Dual(-self.a % self.p, -self.b % self.p, self.p)

    def __bool__(self):
        return bool(self.a or self.b)

    def __repr__(self):
        return f"{self.a} + {self.b}ε"


class DualField(PrimeField):
    """Dual numbers over F_p, used for exact first derivatives.

    Vectors are 2 x L arrays: row 0 holds the values, row 1 the
    eps-coefficients.
    """

    def __init__(self, p=DEFAULT_PRIME):
        super().__init__(p)
        self.name = f"GF({self.p})[eps]"

    def zero(self):
        return Dual(0, 0, self.p)

    def one(self):
        return Dual(1, 0, self.p)

    def from_int(self, k):
        return Dual(int(k) % self.p, 0, self.p)

    def from_rational(self, numerator, denominator):
        return Dual(super().from_rational(numerator, denominator), 0, self.p)

    def coerce(self, value):
        if isinstance(value, Dual):
            return value
        if isinstance(value, tuple):
            return Dual(int(value[0]) % self.p, int(value[1]) % self.p, self.p)
        return Dual(super().coerce(value), 0, self.p)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def power(self, a, k):
        return ScalarRing.power(self, a, k)

    def random_element(self, rng):
        return Dual(int(rng.integers(self.p)), int(rng.integers(self.p)), self.p)

    def vector(self, values):
        values = [self.coerce(v) for v in values]
        arr = np.array([[v.a for v in values], [v.b for v in values]], dtype=self._dtype)
        return self._freeze(arr)

    def elements(self, vec):
        return [Dual(int(a), int(b), self.p) for a, b in zip(vec[0], vec[1])]

    def scale_ints(self, vec, ints):
        ints = np.array([k % self.p for k in ints], dtype=self._dtype)
        return self._freeze(vec * ints[None, :] % self.p)

    def scale(self, vec, c):
        a, b = np.array([c.a, c.b], dtype=self._dtype)
        return self._freeze(np.stack([vec[0] * a, vec[0] * b + vec[1] * a]) % self.p)

    def convolve(self, u, v):
        value = np.convolve(u[0], v[0]) % self.p
        slope = (np.convolve(u[0], v[1]) + np.convolve(u[1], v[0])) % self.p
        return self._freeze(np.stack([value, slope]))

    def combine(self, vecs, weights):
        out = np.zeros_like(vecs[0])
        for vec, w in zip(vecs, weights):
            out = (out + vec * (w % self.p)) % self.p
        return self._freeze(out)


class PolynomialRing(ScalarRing):
    """Sparse multivariate polynomials over QQ in declared variables."""

    def __init__(self, names):
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        self.names = tuple(names)
        self.poly_ring = PolyRing(self.names, QQ, grlex)
        self.gens = dict(zip(self.names, self.poly_ring.gens))
        self.name = f"QQ[{','.join(self.names)}]"

    def _key(self):
        return self.names

    def __getitem__(self, name):
        return self.gens[name]

    def zero(self):
        return self.poly_ring.zero

    def one(self):
        return self.poly_ring.one

    def from_int(self, k):
        return self.poly_ring(int(k))

    def from_rational(self, numerator, denominator):
        return self.poly_ring(QQ(int(numerator), int(denominator)))

    def coerce(self, value):
        if isinstance(value, PolyElement):
            if value.ring != self.poly_ring:
                raise TypeError(f"polynomial over {value.ring} given to {self.name}")
            return value
        if isinstance(value, str):
            return parse_poly(self, value)
        return self.poly_ring(to_qq(value))

    def element_text(self, a):
        return format_poly(a)


def make_ring(value):
    """Build a ring from a short name: ``QQ``, a prime, or ``dual:<p>``."""
    if isinstance(value, ScalarRing):
        return value
    text = str(value).strip()
    if text.upper() in ("QQ", "Q", "RATIONAL"):
        return RationalField()
    if text.startswith("dual:"):
        return DualField(int(text[5:]))
    return PrimeField(int(text))


def _check_same_ring(p, q):
    if p.ring != q.ring:
        raise TypeError(f"ring mismatch: {p.ring} and {q.ring}")


def poly_arith(p, q, op):
    """Add or multiply two polynomials of the same ring."""
    _check_same_ring(p, q)
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def partial_derivative(p, var):
    names = [str(s) for s in p.ring.symbols]
    key = var if isinstance(var, str) else str(var)
    if key not in names:
        raise ValueError(f"{key} is not a variable of {p.ring}")
    return p.diff(p.ring.gens[names.index(key)])


def _univariate_index(p):
    used = [i for i, d in enumerate(p.degrees()) if d > 0]
    if len(used) > 1:
        raise ValueError("gcd_univariate needs univariate polynomials")
    return used[0] if used else None


def gcd_univariate(p, q):
    """Monic gcd of two univariate polynomials over QQ; gcd(p, 0) = monic(p)."""
    _check_same_ring(p, q)
    if p.ring.domain != QQ:
        raise ValueError("gcd_univariate works over the rationals")
    i, j = _univariate_index(p), _univariate_index(q)
    if i is not None and j is not None and i != j:
        raise ValueError("gcd_univariate needs both inputs in the same variable")
    if not q:
        return p.monic() if p else p
    if not p:
        return q.monic()
    return p.gcd(q).monic()


def evaluate_poly(poly, values, ring):
    """Evaluate a QQ polynomial at ``values`` (one ring element per variable)."""
    total = ring.zero()
    for monom, coeff in poly.terms():
        term = ring.from_qq(coeff)
        for value, e in zip(values, monom):
            if e:
                term = ring.mul(term, ring.power(value, e))
        total = ring.add(total, term)
    return total


def _monomial_text(names, monom):
    factors = []
    for name, e in zip(names, monom):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def format_poly(poly):
    """Plain-text sum in graded lexicographic order, e.g. ``70*a5^2*y^2 + ...``."""
    if not poly:
        return "0"
    names = [str(s) for s in poly.ring.symbols]
    pieces = []
    for monom, coeff in poly.terms():
        num, den = int(QQ.numer(coeff)), int(QQ.denom(coeff))
        sign = "-" if num < 0 else "+"
        magnitude = str(abs(num)) if den == 1 else f"{abs(num)}/{den}"
        mono = _monomial_text(names, monom)
        if mono and magnitude == "1":
            body = mono
        elif mono:
            body = f"{magnitude}*{mono}"
        else:
            body = magnitude
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def parse_poly(ring, text):
    """Inverse of ``format_poly`` for a ``PolynomialRing``."""
    symbols = {name: sympy.Symbol(name) for name in ring.names}
    expr = sympy.sympify(text.replace("^", "**"), locals=symbols)
    return ring.poly_ring.from_expr(expr)


def falling(a, k):
    """a (a-1) ... (a-k+1)."""
    return prod(range(a - k + 1, a + 1)) if k > 0 else 1
