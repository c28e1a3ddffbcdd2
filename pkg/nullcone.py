"""Nullforms: root multiplicities, membership tests and random samples.

A form of order n is a nullform when it has a projective root of
multiplicity greater than n/2. Multiplicities are read off gcd chains over
the rationals, g_0 = f, g_(k+1) = gcd(g_k, g_k'), after splitting off the
power of y (the root at infinity of the dehomogenization in x).
"""
import logging
import warnings
from dataclasses import dataclass

import numpy as np

from algebra import PolynomialRing, RationalField, format_poly, gcd_univariate
from forms import BinaryForm, act, transvectant

LOGGER = logging.getLogger(__name__)

INFINITY = "point at infinity"

_X = PolynomialRing(("x",))


@dataclass(frozen=True)
class MultiplicityReport:
    """Largest root multiplicity of a form and the roots attaining it.

    ``witness`` is ``INFINITY`` for the root of y, otherwise the monic
    squarefree polynomial in x whose roots attain the maximum.
    """

    max_multiplicity: int
    witness: str
    zero_form: bool = False

    def as_dict(self):
        return {"multiplicity": self.max_multiplicity, "witness": self.witness, "zero_form": self.zero_form}


def _rational_coefficients(f):
    if not isinstance(f.ring, RationalField):
        raise TypeError(f"root multiplicities need a form over QQ, got {f.ring}")
    return f.coefficients()


def _split(f):
    """(power of y dividing f, dehomogenized cofactor as a polynomial in x)."""
    coeffs = _rational_coefficients(f)
    e = next(i for i, c in enumerate(coeffs) if c)
    x = _X["x"]
    poly = _X.zero()
    for i in range(e, f.order + 1):
        poly += x ** (f.order - i) * coeffs[i]
    return e, poly


def _chain(poly):
    """The gcd chain g_0, g_1, ... up to the first constant entry."""
    chain = [poly]
    while chain[-1].degree() > 0:
        g = chain[-1]
        chain.append(gcd_univariate(g, g.diff(_X["x"])))
    return chain


def _roots_above(poly, k):
    """Monic polynomial whose roots are the roots of ``poly`` with multiplicity > k."""
    chain = _chain(poly)
    if k >= len(chain):
        return _X.one()
    g = chain[k]
    # squarefree part of g_k: g_k / gcd(g_k, g_k')
    if g.degree() <= 0:
        return _X.one()
    h = gcd_univariate(g, g.diff(_X["x"]))
    return (g.quo(h)).monic()


def root_multiplicity_max(f):
    """Largest multiplicity among the projective roots of ``f`` over QQ."""
    if f.is_zero():
        return MultiplicityReport(f.order + 1, "zero form", zero_form=True)
    e, poly = _split(f)
    chain = _chain(poly)
    finite = len(chain) - 1
    if e >= finite and e > 0:
        return MultiplicityReport(e, INFINITY)
    if finite == 0:
        return MultiplicityReport(0, "")
    witness = _roots_above(poly, finite - 1)
    return MultiplicityReport(finite, format_poly(witness))


def is_nullform(f):
    """True iff f has a root of multiplicity > n/2. The zero form counts as a nullform."""
    if f.is_zero():
        LOGGER.debug("zero form classified as nullform")
        return True
    return 2 * root_multiplicity_max(f).max_multiplicity > f.order


def pair_nullcone_test(g, h):
    """True iff g and h share a root of multiplicity > order/2 in each."""
    if g.is_zero() or h.is_zero():
        raise ValueError("pair nullcone test needs nonzero forms")
    eg, pg = _split(g)
    eh, ph = _split(h)
    kg, kh = g.order // 2, h.order // 2
    if eg > kg and eh > kh:
        return True
    common = gcd_univariate(_roots_above(pg, kg), _roots_above(ph, kh))
    return common.degree() > 0


def _as_rng(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    seed = seed if isinstance(seed, tuple) else (seed,)
    return np.random.default_rng((*seed, 3))


def random_sl2(ring, rng, bound=5):
    """A random det-1 matrix [[a, b], [c, d]] with a != 0."""
    def draw():
        if isinstance(ring, RationalField):
            return ring.random_element(rng, bound)
        return ring.random_element(rng)

    a = draw()
    while ring.is_zero(a):
        a = draw()
    b, c = draw(), draw()
    d = ring.mul(ring.add(ring.one(), ring.mul(b, c)), ring.inverse(a))
    return ((a, b), (c, d))


def random_nullform(n, ring, seed):
    """act(g, x^(n//2+1) r) for a seeded random det-1 g and random cofactor r."""
    rng = _as_rng(seed)
    k = n // 2 + 1
    cofactor = [ring.random_element(rng) for _ in range(n - k + 1)]
    base = BinaryForm.from_coeffs(cofactor + [0] * k, ring)
    return act(random_sl2(ring, rng), base)


def random_form(n, ring, seed):
    """A seeded random form; generic, so almost never a nullform."""
    rng = _as_rng(seed)
    return BinaryForm.from_coeffs([ring.random_element(rng) for _ in range(n + 1)], ring)


@dataclass(frozen=True)
class WeymanVerdict:
    hypothesis_holds: bool
    conclusion_holds: bool
    multiplicity: int
    required: int

    @property
    def passed(self):
        return self.conclusion_holds or not self.hypothesis_holds


def weyman_hypothesis(f, k):
    """The transvectants whose vanishing forces a root of multiplicity d-k+1."""
    d = f.order
    if d < 4 * k - 4:
        raise ValueError(f"order {d} below 4k-4 = {4 * k - 4}")
    forms = [transvectant(f, f, i) for i in range(2 * k, d + 1, 2)]
    if d == 4 * k - 4:
        forms.append(transvectant(transvectant(f, f, 2 * k - 2), f, d))
    return forms


def weyman_check(f, k):
    """If the hypothesis transvectants vanish, check the multiplicity conclusion."""
    hypothesis = all(g.is_zero() for g in weyman_hypothesis(f, k))
    required = f.order - k + 1
    multiplicity = root_multiplicity_max(f).max_multiplicity
    verdict = WeymanVerdict(hypothesis, hypothesis and multiplicity >= required, multiplicity, required)
    if not verdict.passed:
        warnings.warn(f"multiplicity {multiplicity} below {required} although the hypothesis holds")
    return verdict
