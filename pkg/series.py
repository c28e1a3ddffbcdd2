"""Dimensions of invariant spaces, Poincare series and degree sequences.

dim I_d(V_n) is the number of partitions of nd/2 into at most d parts of
size at most n, minus the same count at nd/2 - 1. Counts come from the
coefficients of the Gaussian binomial [n+d choose n]_q and are exact
Python integers.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, groupby
from math import gcd, prod

import pandas as pd
import xarray as xr
from sympy import factorint
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

LOGGER = logging.getLogger(__name__)


class InsufficientDepthError(ValueError):
    """The dimension table does not reach the degree a computation needs."""


@lru_cache(maxsize=None)
def _box_partition_counts(size, parts, max_weight):
    """Coefficients of [size+parts choose size]_q up to q^max_weight.

    The coefficient of q^w counts partitions of w into at most ``parts``
    parts, each at most ``size``.
    """
    coeffs = [0] * (max_weight + 1)
    coeffs[0] = 1
    for i in range(1, size + 1):
        # multiply by (1 - q^(parts+i)), then divide by (1 - q^i)
        step = parts + i
        for w in range(max_weight, step - 1, -1):
            coeffs[w] -= coeffs[w - step]
        for w in range(i, max_weight + 1):
            coeffs[w] += coeffs[w - i]
    return tuple(coeffs)


def box_partitions(weight, parts, size):
    if weight < 0:
        return 0
    if weight > parts * size:
        return 0
    return _box_partition_counts(size, parts, weight)[weight]


@lru_cache(maxsize=None)
def covariant_dimension(n, d, m):
    """Dimension of the covariants of order ``m`` and degree ``d`` of V_n."""
    if d < 0 or m < 0 or (n * d - m) % 2:
        return 0
    if d == 0:
        return 1 if m == 0 else 0
    weight = (n * d - m) // 2
    return max(box_partitions(weight, d, n) - box_partitions(weight - 1, d, n), 0)


def invariant_dimension(n, d):
    """dim I_d for binary forms of order n."""
    return covariant_dimension(n, d, 0)


def _weight_monomials(n, d, weight):
    """Exponent vectors in a_0..a_n of degree d whose indices sum to ``weight``."""
    monomials = []
    for indices in combinations_with_replacement(range(n + 1), d):
        if sum(indices) == weight:
            exponents = [0] * (n + 1)
            for i in indices:
                exponents[i] += 1
            monomials.append(tuple(exponents))
    return monomials


def lowering_operator_dimension(n, d):
    """dim I_d computed as the kernel of sum (n-i) a_(i+1) d/da_i on weight nd/2.

    Independent of the partition count: the operator is applied to every
    monomial of degree d and weight nd/2, and the rank of the resulting
    matrix is exact over QQ.
    """
    if (n * d) % 2:
        return 0
    source = _weight_monomials(n, d, n * d // 2)
    if not source:
        return 0
    columns = {}
    rows = {}
    for r, exponents in enumerate(source):
        row = {}
        for i in range(n):
            if exponents[i]:
                image = list(exponents)
                image[i] -= 1
                image[i + 1] += 1
                c = columns.setdefault(tuple(image), len(columns))
                row[c] = row.get(c, QQ(0)) + QQ(exponents[i] * (n - i))
        if row:
            rows[r] = row
    if not rows:
        return len(source)
    rank = DomainMatrix(rows, (len(source), len(columns)), QQ).rank()
    return len(source) - rank


@dataclass(frozen=True)
class DimTable:
    """dim I_d for d = 0 .. max_degree."""

    n: int
    dims: tuple

    @property
    def max_degree(self):
        return len(self.dims) - 1

    def __getitem__(self, d):
        return self.dims[d]

    def __iter__(self):
        return iter(self.dims)

    def nonzero_degrees(self, minimum=1):
        return [d for d, dim in enumerate(self.dims) if dim and d >= minimum]

    def to_dataarray(self):
        return xr.DataArray(list(self.dims), coords={"degree": list(range(len(self.dims)))},
                            dims="degree", name="dim", attrs={"n": self.n})

    def to_dataframe(self):
        return pd.DataFrame({"degree": range(len(self.dims)), "dim": list(self.dims)})

    def as_dict(self):
        return {str(d): dim for d, dim in enumerate(self.dims)}


def poincare_series(n, max_degree):
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    return DimTable(n, tuple(invariant_dimension(n, d) for d in range(max_degree + 1)))


@dataclass(frozen=True, order=True)
class DegreeSequence:
    """Sorted multiset of the degrees of the denominator factors (1 - t^d)."""

    degrees: tuple = field()

    def __post_init__(self):
        degrees = tuple(sorted(int(d) for d in self.degrees))
        if any(d < 1 for d in degrees):
            raise ValueError("degrees must be positive")
        object.__setattr__(self, "degrees", degrees)

    @classmethod
    def parse(cls, text):
        return cls(tuple(int(d) for d in text.replace(" ", "").split(",") if d))

    @property
    def product(self):
        return prod(self.degrees)

    @property
    def sum(self):
        return sum(self.degrees)

    @property
    def max(self):
        return max(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self):
        return len(self.degrees)

    def __str__(self):
        return ",".join(str(d) for d in self.degrees)


def _times_one_minus(coeffs, d, depth):
    """coeffs * (1 - t^d), truncated to degree ``depth``."""
    out = list(coeffs[:depth + 1]) + [0] * max(0, depth + 1 - len(coeffs))
    for k in range(depth, d - 1, -1):
        out[k] -= out[k - d]
    return out


def _divide_one_minus(coeffs, d):
    """coeffs / (1 - t^d) if the division is exact, else None."""
    top = len(coeffs) - 1
    if top < d:
        return None if any(coeffs) else [0]
    quotient = [0] * (top - d + 1)
    for k in range(top - d + 1):
        quotient[k] = coeffs[k] + (quotient[k - d] if k >= d else 0)
    for k in range(top - d + 1, top + 1):
        if coeffs[k] + (quotient[k - d] if k - d >= 0 else 0) != 0:
            return None
    return quotient


def _trim(coeffs):
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class PoincareRational:
    """P(t) = numerator(t) / prod (1 - t^d_i)."""

    numerator: tuple
    denominator: DegreeSequence

    @property
    def numerator_degree(self):
        return len(self.numerator) - 1

    @property
    def numerator_at_one(self):
        return sum(self.numerator)

    def limit_ratio(self):
        """a(1) / prod d_i, the leading coefficient of P at t = 1."""
        return QQ(self.numerator_at_one, self.denominator.product)

    def is_nonnegative(self):
        return all(c >= 0 for c in self.numerator)

    def expand(self, max_degree):
        coeffs = list(self.numerator[:max_degree + 1]) + [0] * max(0, max_degree + 1 - len(self.numerator))
        for d in self.denominator:
            for k in range(d, max_degree + 1):
                coeffs[k] += coeffs[k - d]
        return coeffs

    def as_dict(self):
        return {
            "degrees": list(self.denominator.degrees),
            "numerator_degree": self.numerator_degree,
            "numerator": list(self.numerator),
        }


def to_rational(table, degrees):
    """Numerator of the series over prod (1 - t^d) for ``degrees``.

    Returns ``None`` when the candidate is rejected: a negative coefficient up
    to degree sum(degrees), or a nonzero coefficient in the guard window
    (sum, sum + max]. Raises ``InsufficientDepthError`` if the table is too
    shallow to decide.
    """
    degrees = degrees if isinstance(degrees, DegreeSequence) else DegreeSequence(tuple(degrees))
    depth = degrees.sum + degrees.max
    if table.max_degree < depth:
        raise InsufficientDepthError(f"table reaches degree {table.max_degree}, need {depth}")
    coeffs = list(table.dims[:depth + 1])
    for d in degrees:
        coeffs = _times_one_minus(coeffs, d, depth)
    body, guard = coeffs[:degrees.sum + 1], coeffs[degrees.sum + 1:]
    if any(guard):
        LOGGER.debug("rejected %s: nonzero guard window", degrees)
        return None
    if any(c < 0 for c in body):
        LOGGER.debug("rejected %s: negative numerator coefficient", degrees)
        return None
    return PoincareRational(_trim(body), degrees)


def rational_by_division(reference, degrees):
    """Numerator for ``degrees`` derived from a known rational form by exact division.

    Computes reference.numerator * prod (1 - t^d_i) / prod (1 - t^e_j) and
    returns ``None`` if the division is not exact or the result has a
    negative coefficient.
    """
    degrees = degrees if isinstance(degrees, DegreeSequence) else DegreeSequence(tuple(degrees))
    multiply = list(degrees.degrees)
    divide = []
    for e in reference.denominator:
        if e in multiply:
            multiply.remove(e)
        else:
            divide.append(e)
    coeffs = list(reference.numerator)
    for d in multiply:
        coeffs = _times_one_minus(coeffs, d, len(coeffs) - 1 + d)
    for e in divide:
        coeffs = _divide_one_minus(coeffs, e)
        if coeffs is None:
            return None
    candidate = PoincareRational(_trim(coeffs), degrees)
    if not candidate.is_nonnegative():
        return None
    return candidate


def _minimal_j(n, t):
    if n % 2:
        candidates = range(0, n + 1)
        key = lambda j: n - 2 * j  # noqa: E731
    else:
        candidates = range(0, n // 2 + 1)
        key = lambda j: n // 2 - j  # noqa: E731
    for j in candidates:
        if gcd(key(j), t) == 1:
            return j
    return None


def min_degree_count(n, t):
    """(count, divisor): at least ``count`` hsop degrees are divisible by ``divisor``."""
    if t < 2:
        raise ValueError("t must be at least 2")
    j = _minimal_j(n, t)
    if j is None:
        return 0, (2 * t if n % 2 else t)
    return (n - j) // t, (2 * t if n % 2 else t)


def prime_power_count(n, t):
    """The prime-power specialisation of ``min_degree_count``."""
    factors = factorint(t)
    if t < 2 or len(factors) != 1:
        raise ValueError(f"{t} is not a prime power")
    (p, _), = factors.items()
    if p == 2:
        if n % 2:
            return n // t, 2 * t
        if (n // 2) % 2:
            return n // t, t
        return (n - 2) // t, t
    return (n - 1) // t, t


def weight_congruence_holds(n, d, j, t):
    """Whether a degree-d invariant can be nonzero on forms supported on i = j (mod t).

    Every monomial prod a_i^m_i of such an invariant has sum m_i = d and
    sum i m_i = nd/2, so nd/2 = jd (mod t) is necessary.
    """
    value = d * (n - 2 * j)
    if value % 2:
        return False
    return (value // 2) % t == 0


@dataclass(frozen=True)
class Violation:
    t: int
    required: int
    divisor: int
    found: int
    j: int = None


@dataclass(frozen=True)
class SequenceCheck:
    passed: bool
    violations: tuple = ()

    def __bool__(self):
        return self.passed

    @property
    def first_violation(self):
        return self.violations[0] if self.violations else None


def check_sequence(n, seq):
    """Test the divisibility counts every hsop degree sequence must meet."""
    seq = seq if isinstance(seq, DegreeSequence) else DegreeSequence(tuple(seq))
    violations = []
    # beyond t = n every required count is zero
    for t in range(2, min(seq.max, n) + 1):
        required, divisor = min_degree_count(n, t)
        found = sum(1 for d in seq if d % divisor == 0)
        if found < required:
            violations.append(Violation(t, required, divisor, found))
    return SequenceCheck(not violations, tuple(violations))


def check_weight_lemma(n, seq):
    """For every t > 1 and 0 <= j < t: at least (n-j)//t degrees meet the weight congruence."""
    seq = seq if isinstance(seq, DegreeSequence) else DegreeSequence(tuple(seq))
    violations = []
    for t in range(2, n + 1):
        for j in range(min(t, n + 1)):
            required = (n - j) // t
            if not required:
                continue
            found = sum(1 for d in seq if weight_congruence_holds(n, d, j, t))
            if found < required:
                violations.append(Violation(t, required, t, found, j))
    return SequenceCheck(not violations, tuple(violations))


def _nondecreasing_tuples(domain, length, bound, start=0, prefix=(), running=1):
    if length == 0:
        yield prefix
        return
    for idx in range(start, len(domain)):
        d = domain[idx]
        if running * d ** length > bound:
            break
        yield from _nondecreasing_tuples(domain, length - 1, bound, idx, prefix + (d,), running * d)


def ecriture_minimale_search(n, seed=None):
    """All écritures of P(t) over n-2 factors with minimal product of degrees.

    ``seed`` is a known degree sequence; its product bounds the search and
    its numerator, read off the dimension table, is the reference for the
    exact-division test of every other candidate.
    """
    import reference

    if seed is None:
        seed = reference.minimal_seed(n)
    if seed is None:
        raise ValueError(f"no seed degree sequence known for n={n}; pass one explicitly")
    seed = seed if isinstance(seed, DegreeSequence) else DegreeSequence(tuple(seed))
    if len(seed) != n - 2:
        raise ValueError(f"seed has {len(seed)} degrees, need {n - 2}")
    table = poincare_series(n, seed.sum + seed.max)
    base = to_rational(table, seed)
    if base is None:
        raise ValueError(f"seed {seed} does not give a polynomial numerator")

    bound = seed.product
    smallest = min(table.nonzero_degrees())
    largest = bound // smallest ** (n - 3)
    dims = base.expand(largest)
    domain = [d for d in range(1, largest + 1) if dims[d] > 0]
    LOGGER.info("searching n=%d over %d degrees up to %d, product bound %d", n, len(domain), largest, bound)

    candidates = []
    for degrees in _nondecreasing_tuples(domain, n - 2, bound):
        seq = DegreeSequence(degrees)
        if check_sequence(n, seq) and check_weight_lemma(n, seq):
            candidates.append(seq)
    candidates.sort(key=lambda s: (s.product, s.degrees))
    LOGGER.info("%d sequences pass the degree filters", len(candidates))

    for product, level in groupby(candidates, key=lambda s: s.product):
        accepted = [r for r in (rational_by_division(base, s) for s in level) if r is not None]
        if accepted:
            LOGGER.info("minimal product %d reached by %d sequences", product, len(accepted))
            return sorted(accepted, key=lambda r: r.denominator.degrees)
    return [base]
