"""Binary forms, the SL2 action, transvectants and covariant expressions.

A binary form of order n is stored in the raw convention: ``coeffs[i]`` is
the coefficient of x^(n-i) y^i. ``BinaryForm.from_a_convention`` builds
f = sum C(n, i) a_i x^(n-i) y^i for fixtures written with binomial weights.

Covariants are described by small expression trees (``BaseForm``,
``Transvect``, ``Power``, ``NamedRef``) with the text grammar::

    f | (tr E E INT) | (pow E INT) | @name
"""
import logging
import re
from dataclasses import dataclass
from functools import cached_property
from math import comb, factorial, gcd

from algebra import PolynomialRing, falling

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BinaryForm:
    """A homogeneous form in x, y of the given order over ``ring``."""

    order: int
    coeffs: object
    ring: object

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if self.size != self.order + 1:
            raise ValueError(f"order {self.order} form needs {self.order + 1} coefficients, got {self.size}")

    @property
    def size(self):
        return self.coeffs.shape[-1] if hasattr(self.coeffs, "shape") else len(self.coeffs)

    @classmethod
    def from_coeffs(cls, coeffs, ring):
        coeffs = list(coeffs)
        return cls(len(coeffs) - 1, ring.vector(coeffs), ring)

    @classmethod
    def from_a_convention(cls, a_coeffs, ring):
        a_coeffs = [ring.coerce(a) for a in a_coeffs]
        n = len(a_coeffs) - 1
        raw = [ring.mul(ring.from_int(comb(n, i)), a) for i, a in enumerate(a_coeffs)]
        return cls(n, ring.vector(raw), ring)

    @classmethod
    def zero(cls, order, ring):
        return cls.from_coeffs([0] * (order + 1), ring)

    @classmethod
    def monomial(cls, i, j, ring, coefficient=1):
        """coefficient * x^i y^j."""
        coeffs = [0] * (i + j + 1)
        coeffs[j] = coefficient
        return cls.from_coeffs(coeffs, ring)

    @classmethod
    def linear(cls, alpha, beta, ring):
        """alpha x + beta y."""
        return cls.from_coeffs([alpha, beta], ring)

    def coefficients(self):
        return self.ring.elements(self.coeffs)

    def is_zero(self):
        return self.ring.vector_is_zero(self.coeffs)

    def scalar(self):
        """The value of an order-0 form (an invariant)."""
        if self.order != 0:
            raise ValueError(f"form of order {self.order} is not a scalar")
        return self.coefficients()[0]

    def __eq__(self, other):
        return (isinstance(other, BinaryForm) and self.order == other.order
                and self.ring == other.ring and self.ring.vectors_equal(self.coeffs, other.coeffs))

    __hash__ = None

    def __mul__(self, other):
        _check_ring(self, other)
        return BinaryForm(self.order + other.order, self.ring.convolve(self.coeffs, other.coeffs), self.ring)

    def __add__(self, other):
        _check_ring(self, other)
        if self.order != other.order:
            raise ValueError("cannot add forms of different orders")
        return BinaryForm(self.order, self.ring.combine([self.coeffs, other.coeffs], [1, 1]), self.ring)

    def __sub__(self, other):
        _check_ring(self, other)
        if self.order != other.order:
            raise ValueError("cannot subtract forms of different orders")
        return BinaryForm(self.order, self.ring.combine([self.coeffs, other.coeffs], [1, -1]), self.ring)

    def scale(self, c):
        return BinaryForm(self.order, self.ring.scale(self.coeffs, self.ring.coerce(c)), self.ring)

    def power(self, k):
        result = BinaryForm(0, self.ring.vector([1]), self.ring)
        for _ in range(k):
            result = result * self
        return result

    def as_poly(self, poly_ring, x="x", y="y"):
        """The form as an element of a ``PolynomialRing`` holding x and y."""
        if not isinstance(self.ring, PolynomialRing) or self.ring != poly_ring:
            coeffs = [poly_ring.coerce(c) for c in self.coefficients()]
        else:
            coeffs = self.coefficients()
        gx, gy = poly_ring[x], poly_ring[y]
        total = poly_ring.zero()
        for i, c in enumerate(coeffs):
            total += c * gx ** (self.order - i) * gy ** i
        return total

    def text(self):
        return f"{self.order}: " + ",".join(self.ring.element_text(c) for c in self.coefficients())

    def __repr__(self):
        return f"BinaryForm({self.text()} over {self.ring})"


def _check_ring(g, h):
    if g.ring != h.ring:
        raise TypeError(f"ring mismatch: {g.ring} and {h.ring}")


def parse_form(text, ring, a_convention=False):
    """Parse ``order: c0,c1,...,cn``; ``...`` between commas is not expanded."""
    if ":" not in text:
        raise ValueError(f"form literal {text!r} needs the shape 'order: c0,...,cn'")
    head, body = text.split(":", 1)
    order = int(head.strip())
    values = [v.strip() for v in body.split(",") if v.strip()]
    if len(values) != order + 1:
        raise ValueError(f"order {order} needs {order + 1} coefficients, got {len(values)}")
    if a_convention:
        return BinaryForm.from_a_convention(values, ring)
    return BinaryForm.from_coeffs(values, ring)


def _derivative(form, dx, dy):
    """Coefficient vector of d^(dx+dy) form / dx^dx dy^dy."""
    m = form.order
    ring = form.ring
    weights = [falling(m - k, dx) * falling(k, dy) for k in range(dy, m - dx + 1)]
    return ring.scale_ints(_slice(ring, form.coeffs, dy, m - dx + 1), weights)


def _slice(ring, vec, start, stop):
    if hasattr(vec, "shape"):
        return vec[..., start:stop]
    return vec[start:stop]


def transvectant(g, h, p):
    """The p-th transvectant (g, h)_p.

    (g,h)_p = (m-p)!(n-p)!/(m! n!) * sum_i (-1)^i C(p,i)
              d^p g / dx^(p-i) dy^i * d^p h / dx^i dy^(p-i)
    """
    _check_ring(g, h)
    m, n = g.order, h.order
    if p < 0 or p > min(m, n):
        raise ValueError(f"transvectant index {p} out of range for orders {m}, {n}")
    ring = g.ring
    terms = [ring.convolve(_derivative(g, p - i, i), _derivative(h, i, p - i)) for i in range(p + 1)]
    weights = [(-1) ** i * comb(p, i) for i in range(p + 1)]
    total = ring.combine(terms, weights)
    num = factorial(m - p) * factorial(n - p)
    den = factorial(m) * factorial(n)
    d = gcd(num, den)
    return BinaryForm(m + n - 2 * p, ring.scale(total, ring.from_rational(num // d, den // d)), ring)


def transvectant_poly(g, h, p, m, n, x="x", y="y"):
    """Transvectant of two polynomials in x, y, straight from partial derivatives.

    Independent of the coefficient-vector route above; used to cross-check it.
    """
    from algebra import partial_derivative

    def nth(poly, var, k):
        for _ in range(k):
            poly = partial_derivative(poly, var)
        return poly

    poly_ring = g.ring
    total = poly_ring.zero
    for i in range(p + 1):
        dg = nth(nth(g, x, p - i), y, i)
        dh = nth(nth(h, x, i), y, p - i)
        total += (-1) ** i * comb(p, i) * dg * dh
    num = factorial(m - p) * factorial(n - p)
    den = factorial(m) * factorial(n)
    from sympy.polys.domains import QQ
    return total * QQ(num, den)


def act(matrix, f):
    """g . f, where (g . f)(v) = f(g^-1 v) for g in SL2."""
    ring = f.ring
    (a, b), (c, d) = [[ring.coerce(v) for v in row] for row in matrix]
    det = ring.sub(ring.mul(a, d), ring.mul(b, c))
    if not ring.is_zero(ring.sub(det, ring.one())):
        raise ValueError("matrix must have determinant 1")
    # g^-1 = [[d, -b], [-c, a]]
    first = ring.vector([d, ring.neg(b)])
    second = ring.vector([ring.neg(c), a])
    n = f.order
    first_powers = [ring.vector([1])]
    second_powers = [ring.vector([1])]
    for _ in range(n):
        first_powers.append(ring.convolve(first_powers[-1], first))
        second_powers.append(ring.convolve(second_powers[-1], second))
    terms = [ring.scale(ring.convolve(first_powers[n - i], second_powers[i]), coeff)
             for i, coeff in enumerate(f.coefficients())]
    return BinaryForm(n, ring.combine(terms, [1] * len(terms)), ring)


# Covariant expressions


@dataclass(frozen=True, eq=False)
class CovariantExpr:
    """Base class of covariant expression nodes; equality is structural."""

    def __eq__(self, other):
        return isinstance(other, CovariantExpr) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __str__(self):
        return self.key

    def __repr__(self):
        return f"CovariantExpr({self.key})"

    @property
    def is_invariant(self):
        return self.order == 0

    def children(self):
        return ()

    def refs(self):
        """Names of every catalog entry referenced in the tree."""
        found = set()
        for child in self.children():
            found |= child.refs()
        return found


@dataclass(frozen=True, eq=False)
class BaseForm(CovariantExpr):
    n: int

    @property
    def order(self):
        return self.n

    @property
    def degree(self):
        return 1

    @cached_property
    def key(self):
        return "f"

    @property
    def base_order(self):
        return self.n


@dataclass(frozen=True, eq=False)
class Transvect(CovariantExpr):
    left: CovariantExpr
    right: CovariantExpr
    index: int

    def __post_init__(self):
        if self.index < 0 or self.index > min(self.left.order, self.right.order):
            raise ValueError(f"transvectant index {self.index} out of range for orders "
                             f"{self.left.order}, {self.right.order}")

    @cached_property
    def order(self):
        return self.left.order + self.right.order - 2 * self.index

    @cached_property
    def degree(self):
        return self.left.degree + self.right.degree

    @cached_property
    def key(self):
        return f"(tr {self.left.key} {self.right.key} {self.index})"

    @property
    def base_order(self):
        return self.left.base_order or self.right.base_order

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, eq=False)
class Power(CovariantExpr):
    child: CovariantExpr
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("power exponent must be at least 1")

    @cached_property
    def order(self):
        return self.k * self.child.order

    @cached_property
    def degree(self):
        return self.k * self.child.degree

    @cached_property
    def key(self):
        return f"(pow {self.child.key} {self.k})"

    @property
    def base_order(self):
        return self.child.base_order

    def children(self):
        return (self.child,)


@dataclass(frozen=True, eq=False)
class NamedRef(CovariantExpr):
    name: str
    order: int
    degree: int

    @cached_property
    def key(self):
        return f"@{self.name}"

    @property
    def base_order(self):
        return None

    def refs(self):
        return {self.name}


def tr(left, right, index):
    return Transvect(left, right, index)


def product(*exprs):
    """Product of expressions as nested zeroth transvectants, collecting powers."""
    factors = []
    for e in exprs:
        if factors and factors[-1][0] == e:
            factors[-1][1] += 1
        else:
            factors.append([e, 1])
    result = None
    for e, k in factors:
        term = e if k == 1 else Power(e, k)
        result = term if result is None else Transvect(result, term, 0)
    return result


_TOKEN = re.compile(r"\s*(\(|\)|@[A-Za-z0-9_']+|[A-Za-z_]+|-?\d+)")


def _tokenize(text):
    tokens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            raise ValueError(f"cannot parse expression at {text[pos:]!r}")
        tokens.append(match.group(1))
        pos = match.end()
    return tokens


def parse_expr(text, n, catalog=None):
    """Parse the expression grammar for forms of order ``n``."""
    tokens = _tokenize(text)
    expr, rest = _parse(tokens, n, catalog)
    if rest:
        raise ValueError(f"trailing tokens in expression: {' '.join(rest)}")
    return expr


def _integer(tokens):
    if not tokens:
        raise ValueError("unexpected end of expression")
    return int(tokens[0]), tokens[1:]


def _parse(tokens, n, catalog):
    if not tokens:
        raise ValueError("unexpected end of expression")
    head, rest = tokens[0], tokens[1:]
    if head == "f":
        return BaseForm(n), rest
    if head.startswith("@"):
        name = head[1:]
        if catalog is None or name not in catalog:
            raise KeyError(f"unknown catalog name {name!r}")
        entry = catalog[name]
        return NamedRef(name, entry.order, entry.degree), rest
    if head != "(" or not rest:
        raise ValueError(f"unexpected token {head!r}")
    op, rest = rest[0], rest[1:]
    if op == "tr":
        left, rest = _parse(rest, n, catalog)
        right, rest = _parse(rest, n, catalog)
        index, rest = _integer(rest)
        node = Transvect(left, right, index)
    elif op == "pow":
        child, rest = _parse(rest, n, catalog)
        k, rest = _integer(rest)
        node = Power(child, k)
    else:
        raise ValueError(f"unknown operator {op!r}")
    if not rest or rest[0] != ")":
        raise ValueError("missing closing parenthesis")
    return node, rest[1:]


def base_order_of(expr, catalog=None):
    order = expr.base_order
    if order is None and catalog is not None:
        order = catalog.n
    return order


def evaluate_expr(expr, f, catalog=None, memo=None, overrides=None):
    """Value of the covariant ``expr`` at the form ``f``.

    Order-0 results are 1-coefficient forms. ``memo`` maps expression keys to
    values and may be shared between expressions evaluated at the same point.
    ``overrides`` maps catalog names to forms that replace them.
    """
    order = base_order_of(expr, catalog)
    if order is not None and order != f.order:
        raise ValueError(f"expression for order {order} forms evaluated at an order {f.order} form")
    if memo is None:
        memo = {}
    return _evaluate(expr, f, catalog, memo, overrides or {})


def _evaluate(expr, f, catalog, memo, overrides):
    key = expr.key
    if key in memo:
        return memo[key]
    if isinstance(expr, BaseForm):
        value = f
    elif isinstance(expr, NamedRef):
        if expr.name in overrides:
            value = overrides[expr.name]
        else:
            if catalog is None or expr.name not in catalog:
                raise KeyError(f"unknown catalog name {expr.name!r}")
            value = _evaluate(catalog[expr.name].expr, f, catalog, memo, overrides)
    elif isinstance(expr, Transvect):
        left = _evaluate(expr.left, f, catalog, memo, overrides)
        right = _evaluate(expr.right, f, catalog, memo, overrides)
        value = transvectant(left, right, expr.index)
    elif isinstance(expr, Power):
        value = _evaluate(expr.child, f, catalog, memo, overrides).power(expr.k)
    else:
        raise TypeError(f"unknown expression node {expr!r}")
    memo[key] = value
    return value


def expand(expr, catalog):
    """Inline every ``NamedRef`` so that the tree only mentions ``f``."""
    if isinstance(expr, NamedRef):
        return expand(catalog[expr.name].expr, catalog)
    if isinstance(expr, Transvect):
        return Transvect(expand(expr.left, catalog), expand(expr.right, catalog), expr.index)
    if isinstance(expr, Power):
        return Power(expand(expr.child, catalog), expr.k)
    return expr
