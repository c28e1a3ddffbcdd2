"""Campaigns over F_p: basic-invariant discovery and hsop certification.

Both campaigns are sequences of datablock steps run by ``utils.pipeline.Pipeline``.
Ranks are Monte Carlo: an evaluation matrix at N random points has the rank
of the space of invariants it spans with high probability once N exceeds the
dimension by the configured margin.
"""
import logging
import warnings
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import List, Literal, Optional

import numpy as np
import xarray as xr
from pydantic import BaseModel, computed_field

from algebra import DEFAULT_PRIME, DualField, PrimeField, RationalField
from catalog import catalog_for
from datablock_setup import PointStream, build_datablock
from forms import BaseForm, BinaryForm, Power, Transvect, base_order_of, evaluate_expr, product
from modlinalg import EchelonBasis, ModMatrix, rank_streaming
from nullcone import random_form, random_nullform
from series import DegreeSequence, check_sequence, covariant_dimension, invariant_dimension, \
    poincare_series, to_rational
from settings import RunConfig
from utils.cache import MemoryCache
from utils.helper_functions import seeded_rng
from utils.pipeline import Pipeline, datablock_write
import reference

LOGGER = logging.getLogger(__name__)

# rows evaluated per block while streaming into an echelon basis
_BATCH = 256


class InconclusiveError(RuntimeError):
    """A degree could not be saturated, or a spanning basis is incomplete."""


@dataclass(frozen=True)
class BasisRecord:
    """A basic invariant of degree ``degree`` with its values at the fingerprint points."""

    degree: int
    expr: object
    fingerprint: tuple

    def __post_init__(self):
        if self.expr.order != 0:
            raise ValueError(f"basis element {self.expr} has order {self.expr.order}")
        if self.expr.degree != self.degree:
            raise ValueError(f"basis element {self.expr} has degree {self.expr.degree}, not {self.degree}")

    def as_dict(self):
        return {"degree": self.degree, "expr": self.expr.key, "fingerprint": list(self.fingerprint)}


class DegreeEntry(BaseModel):
    degree: int
    dim: int
    product_rank: int
    d_m: int
    adjoined: int
    points: int
    candidates_tried: int = 0
    method: Literal["rank", "hsop-bound"] = "rank"


@dataclass
class DmTable:
    """d_m per degree together with the ranks that support it."""

    n: int
    prime: int
    seed: int
    entries: dict

    def d(self, m):
        entry = self.entries.get(m)
        return entry.d_m if entry is not None else 0

    @property
    def total(self):
        return sum(entry.d_m for entry in self.entries.values())

    def nonzero(self):
        return {m: entry.d_m for m, entry in sorted(self.entries.items()) if entry.d_m}

    def to_dataset(self):
        degrees = sorted(self.entries)
        columns = ["dim", "product_rank", "d_m", "adjoined", "points"]
        data = {c: ("degree", [getattr(self.entries[m], c) for m in degrees]) for c in columns}
        data["method"] = ("degree", [self.entries[m].method for m in degrees])
        return xr.Dataset(data, coords={"degree": degrees},
                          attrs={"n": self.n, "prime": self.prime, "seed": self.seed})

    def to_dataframe(self):
        return self.to_dataset().to_dataframe().reset_index()

    def as_dict(self):
        return {
            "n": self.n,
            "prime": self.prime,
            "seed": self.seed,
            "total": self.total,
            "degrees": [self.entries[m].model_dump() for m in sorted(self.entries)],
        }


def _expr(item):
    return item.expr if isinstance(item, BasisRecord) else item


def spanning_products(basis, m, include_generators=False):
    """Every monomial of total degree ``m`` in the basis elements of degree < m.

    Monomials are enumerated as multisets of basis indices in lexicographic
    order. With ``include_generators`` the elements of degree exactly ``m``
    are included as one-factor monomials.
    """
    usable = [_expr(b) for b in basis if b.degree < m or (include_generators and b.degree == m)]
    monomials = []

    def walk(start, remaining, chosen):
        if remaining == 0:
            monomials.append(product(*(usable[i] for i in chosen)))
            return
        for i in range(start, len(usable)):
            if usable[i].degree <= remaining:
                walk(i, remaining - usable[i].degree, chosen + [i])

    if m > 0:
        walk(0, m, [])
    return monomials


def _factor(expr, exponent, counts):
    # products of invariants are split into their invariant factors
    if isinstance(expr, Transvect) and expr.index == 0 and expr.left.order == 0 and expr.right.order == 0:
        _factor(expr.left, exponent, counts)
        _factor(expr.right, exponent, counts)
    elif isinstance(expr, Power) and expr.child.order == 0:
        _factor(expr.child, exponent * expr.k, counts)
    else:
        counts[expr] += exponent


def _power_mod(values, k, p):
    result = np.ones_like(values)
    base = values.copy()
    while k:
        if k & 1:
            result = result * base % p
        base = base * base % p
        k >>= 1
    return result


def _evaluate_chunk(atoms, chunk, catalog):
    out = np.zeros((len(atoms), len(chunk)), dtype=np.int64)
    for j, f in enumerate(chunk):
        memo = {}
        for i, atom in enumerate(atoms):
            out[i, j] = int(evaluate_expr(atom, f, catalog, memo).scalar())
    return out


def _evaluate_atoms(atoms, points, catalog, threads):
    if threads <= 1 or len(points) < 2:
        return _evaluate_chunk(atoms, points, catalog)
    blocks = np.array_split(np.arange(len(points)), threads)
    with ThreadPoolExecutor(max_workers=threads) as executor:
        parts = list(executor.map(
            lambda idx: _evaluate_chunk(atoms, [points[i] for i in idx], catalog), blocks))
    return np.concatenate(parts, axis=1)


def evaluate_at_points(exprs, points, p=None, catalog=None, cache=None, threads=1):
    """Matrix of invariant values: one row per expression, one column per point.

    Products of invariants are evaluated factor by factor; factor values are
    shared between rows and, when ``points`` is a prefix of the stream that
    ``cache`` belongs to, read from and written to the cache.
    """
    exprs = list(exprs)
    if not len(points):
        return ModMatrix.zeros(len(exprs), 0, p or DEFAULT_PRIME)
    ring = points[0].ring
    if not isinstance(ring, PrimeField) or isinstance(ring, DualField):
        raise TypeError(f"evaluation points must lie over a prime field, not {ring}")
    if p is not None and p != ring.p:
        raise ValueError(f"points lie over GF({ring.p}), not GF({p})")
    n = points[0].order
    if catalog is None and any(e.refs() for e in exprs):
        catalog = catalog_for(n)
    factored, atoms = [], {}
    for e in exprs:
        if e.order != 0:
            raise ValueError(f"{e} has order {e.order}; only invariants can be evaluated at points")
        order = base_order_of(e, catalog)
        if order is not None and order != n:
            raise ValueError(f"{e} is an invariant of order {order} forms, points have order {n}")
        counts = Counter()
        _factor(e, 1, counts)
        factored.append(counts)
        for atom in counts:
            atoms.setdefault(atom.key, atom)

    use_cache = cache is not None and getattr(points, "origin", None) == cache.origin
    values, missing = {}, []
    for key, atom in atoms.items():
        cached = cache.get(key, len(points)) if use_cache else None
        if cached is not None:
            values[key] = np.asarray(cached, dtype=np.int64)
        else:
            missing.append(atom)
    if missing:
        computed = _evaluate_atoms(missing, points, catalog, threads)
        for atom, row in zip(missing, computed):
            values[atom.key] = row
            if use_cache:
                cache.put(atom.key, row)

    rows = np.ones((len(exprs), len(points)), dtype=np.int64)
    for r, counts in enumerate(factored):
        for atom, k in counts.items():
            rows[r] = rows[r] * _power_mod(values[atom.key], k, ring.p) % ring.p
    return ModMatrix(rows, ring.p)


def degree_relations(exprs, points, catalog=None, cache=None):
    """Linear relations among ``exprs`` read off at the points: the left nullspace."""
    return evaluate_at_points(exprs, points, catalog=catalog, cache=cache).nullspace()


@lru_cache(maxsize=None)
def _options(n, d, m, max_order):
    """(d1, m1, d2, m2, index) splits of a degree-d order-m node into two covariant children."""
    options = []
    for d1 in range((d + 1) // 2, d):
        d2 = d - d1
        for m1 in range(1, max_order + 1):
            if not _has_covariants(n, d1, m1, max_order):
                continue
            for m2 in range(1, max_order + 1):
                if (m1 + m2 - m) % 2:
                    continue
                index = (m1 + m2 - m) // 2
                if not 0 <= index <= min(m1, m2):
                    continue
                if _has_covariants(n, d2, m2, max_order):
                    options.append((d1, m1, d2, m2, index))
    return tuple(options)


@lru_cache(maxsize=None)
def _has_covariants(n, d, m, max_order):
    if covariant_dimension(n, d, m) == 0:
        return False
    if d == 1:
        return m == n
    return bool(_options(n, d, m, max_order))


def _random_tree(n, d, m, rng, max_order):
    if d == 1:
        return BaseForm(n)
    options = _options(n, d, m, max_order)
    d1, m1, d2, m2, index = options[int(rng.integers(len(options)))]
    left = _random_tree(n, d1, m1, rng, max_order)
    right = _random_tree(n, d2, m2, rng, max_order)
    return Transvect(left, right, index)


def generate_candidate(n, degree, seed, config=None, points=None, cache=None):
    """A seeded random transvectant tree that is an invariant of the given degree.

    Trees whose value vanishes at every fingerprint point are redrawn, at most
    ``config.redraw_budget`` times.
    """
    config = config or RunConfig(n=n, use_cache=False)
    if invariant_dimension(n, degree) == 0:
        raise ValueError(f"forms of order {n} have no invariants of degree {degree}")
    if not _has_covariants(n, degree, 0, config.max_order):
        raise ValueError(f"degree {degree} is not reachable with intermediate orders <= {config.max_order}")
    if points is None:
        points = PointStream(n, PrimeField(config.prime), config.seed).take(config.fingerprint_points)
    for attempt in range(config.redraw_budget):
        rng = seeded_rng(seed, 2, degree, attempt)
        expr = _random_tree(n, degree, 0, rng, config.max_order)
        if np.any(evaluate_at_points([expr], points, cache=cache).entries[0]):
            return expr
        LOGGER.debug("candidate %s vanishes at the fingerprint points, redrawing", expr)
    raise ValueError(f"no nonzero candidate of degree {degree} after {config.redraw_budget} draws")


def _stream_into(echelon, exprs, points, target, cache, threads, keep=False):
    """Add evaluation rows of ``exprs`` until the rank reaches ``target``; return the kept expressions."""
    kept = []
    for start in range(0, len(exprs), _BATCH):
        if echelon.rank >= target:
            break
        batch = exprs[start:start + _BATCH]
        matrix = evaluate_at_points(batch, points, cache=cache, threads=threads)
        if keep:
            for expr, row in zip(batch, matrix.entries):
                if echelon.add(row):
                    kept.append(expr)
                    if echelon.rank >= target:
                        break
        else:
            rank_streaming(matrix.entries, len(points), target_rank=target, p=echelon.p, basis=echelon)
    return kept


def compute_dm(n, m, basis, config, stream=None, cache=None):
    """d_m and the basic invariants adjoined in degree ``m``.

    Returns ``(DegreeEntry, records)``. The products of lower-degree basis
    elements give the product rank; seeded candidates are adjoined while they
    raise the rank, until it reaches dim I_m.
    """
    dim = invariant_dimension(n, m)
    if dim == 0:
        return DegreeEntry(degree=m, dim=0, product_rank=0, d_m=0, adjoined=0, points=0), []
    stream = stream or PointStream(n, PrimeField(config.prime), config.seed)
    if cache is None:
        cache = MemoryCache(stream.origin)
    products = spanning_products(basis, m)
    fingerprint_points = stream.take(config.fingerprint_points)
    margin = config.margin(dim)
    for attempt in range(2):
        points = stream.take(dim + margin)
        echelon = EchelonBasis(len(points), config.prime)
        _stream_into(echelon, products, points, dim, cache, config.threads)
        product_rank = echelon.rank
        LOGGER.debug("degree %d: %d products reach rank %d of %d", m, len(products), product_rank, dim)
        records, tried = [], 0
        while echelon.rank < dim and tried < config.candidate_budget:
            expr = generate_candidate(n, m, (config.seed, tried), config, fingerprint_points, cache)
            tried += 1
            row = evaluate_at_points([expr], points, cache=cache).entries[0]
            if echelon.add(row):
                values = evaluate_at_points([expr], fingerprint_points, cache=cache).entries[0]
                records.append(BasisRecord(m, expr, tuple(int(v) for v in values)))
        if echelon.rank == dim:
            entry = DegreeEntry(degree=m, dim=dim, product_rank=product_rank, d_m=dim - product_rank,
                                adjoined=len(records), points=len(points), candidates_tried=tried)
            return entry, records
        message = f"degree {m}: rank {echelon.rank} of dim I_{m} = {dim} at {len(points)} points"
        if attempt == 0:
            warnings.warn(message + "; doubling the point margin")
            LOGGER.warning("%s; doubling the point margin", message)
            margin *= 2
    raise InconclusiveError(message)


def hsop_bound(n):
    """Degree of the écriture numerator for the known hsop of order ``n`` forms, or None.

    Every invariant of larger degree lies in the ideal of that hsop, so no
    basic invariant has larger degree.
    """
    seed = reference.minimal_seed(n)
    if seed is None:
        return None
    rational = to_rational(poincare_series(n, seed.sum + seed.max), seed)
    return None if rational is None else rational.numerator_degree


def compute_dm_step(datablock, m, bound=None):
    """Pipeline step: settle degree ``m`` and extend the datablock's basis."""
    config, n = datablock["config"], datablock["n"]
    if bound is not None and m > bound:
        dim = invariant_dimension(n, m)
        entry, records = DegreeEntry(degree=m, dim=dim, product_rank=dim, d_m=0, adjoined=0,
                                     points=0, method="hsop-bound"), []
    else:
        entry, records = compute_dm(n, m, datablock["basis"], config, datablock["points"], datablock["cache"])
    datablock_write(datablock, ["dm", m], entry)
    datablock["basis"].extend(records)
    LOGGER.info("d_%d = %d (dim %d, product rank %d)", m, entry.d_m, entry.dim, entry.product_rank)
    return datablock


def find_basic_invariants(n, max_degree, config, datablock=None, verbose=False):
    """Run ``compute_dm`` for every degree up to ``max_degree``; return (DmTable, basis)."""
    datablock = datablock or build_datablock(config, n)
    if datablock["cache"] is None:
        datablock["cache"] = MemoryCache(datablock["points"].origin)
    bound = hsop_bound(n)
    pipeline = Pipeline(datablock)
    for m in range(1, max_degree + 1):
        if (n * m) % 2 == 0:
            pipeline.add_step(compute_dm_step, {"m": m, "bound": bound})
    datablock = pipeline.run(verbose=verbose)
    table = DmTable(n, config.prime, config.seed, dict(sorted(datablock["dm"].items())))
    return table, datablock["basis"]


def jacobian_rank(invariants, point, p=None, catalog=None):
    """Rank of the matrix of partial derivatives of the invariants at ``point``.

    Each column comes from one evaluation over dual numbers with the
    corresponding coefficient perturbed.
    """
    if isinstance(point, BinaryForm):
        coefficients = [int(c) for c in point.coefficients()]
        p = p or point.ring.p
    else:
        coefficients = [int(c) for c in point]
        p = p or DEFAULT_PRIME
    n = len(coefficients) - 1
    invariants = list(invariants)
    if catalog is None and any(e.refs() for e in invariants):
        catalog = catalog_for(n)
    for inv in invariants:
        if inv.order != 0:
            raise ValueError(f"{inv} is not an invariant")
    dual = DualField(p)
    matrix = np.zeros((len(invariants), n + 1), dtype=np.int64)
    for i in range(n + 1):
        values = [(c, 1 if j == i else 0) for j, c in enumerate(coefficients)]
        f = BinaryForm(n, dual.vector(values), dual)
        memo = {}
        for k, inv in enumerate(invariants):
            matrix[k, i] = evaluate_expr(inv, f, catalog, memo).scalar().b
    return ModMatrix(matrix, p).rank()


class NonzeroWitness(BaseModel):
    trial: int
    invariants: List[str]


class NullconeSampleReport(BaseModel):
    ring: str
    nullform_trials: int
    nullform_all_vanish: int
    nonzero_on_nullforms: List[NonzeroWitness] = []
    generic_trials: int
    generic_all_vanish: int


def vanish_on_nullcone_sample(invariants, n, trials, seed, catalog=None, ring=None, p=DEFAULT_PRIME,
                              labels=None):
    """Evaluate the invariants on seeded nullforms and on seeded generic forms over F_p."""
    invariants = list(invariants)
    ring = ring or RationalField()
    labels = list(labels) if labels is not None else [e.key for e in invariants]
    if catalog is None and any(e.refs() for e in invariants):
        catalog = catalog_for(n)
    vanished, nonzero = 0, []
    for t in range(trials):
        f = random_nullform(n, ring, seeded_rng(seed, 3, t))
        memo = {}
        bad = [label for label, e in zip(labels, invariants)
               if not ring.is_zero(evaluate_expr(e, f, catalog, memo).scalar())]
        if bad:
            LOGGER.error("nullform trial %d: %s nonzero on a nullform", t, ", ".join(bad))
            nonzero.append(NonzeroWitness(trial=t, invariants=bad))
        else:
            vanished += 1
    generic = PrimeField(p)
    generic_vanish = 0
    for t in range(trials):
        f = random_form(n, generic, seeded_rng(seed, 4, t))
        memo = {}
        if all(evaluate_expr(e, f, catalog, memo).scalar() == 0 for e in invariants):
            LOGGER.warning("generic trial %d: every invariant vanishes", t)
            generic_vanish += 1
    return NullconeSampleReport(ring=str(ring), nullform_trials=trials, nullform_all_vanish=vanished,
                                nonzero_on_nullforms=nonzero, generic_trials=trials,
                                generic_all_vanish=generic_vanish)


class MembershipResult(BaseModel):
    """dim(I_i ∩ H) at degree ``degree`` against the écriture numerator coefficient a_i."""

    degree: int
    dim: int
    rank: int
    a_i: Optional[int] = None
    points: int = 0

    @computed_field
    @property
    def certified(self) -> bool:
        return self.rank == self.dim

    @computed_field
    @property
    def consistent(self) -> bool:
        return self.a_i is not None and self.rank + self.a_i == self.dim


def numerator_coefficient(n, degrees, i):
    """a_i of the numerator over prod (1 - t^d) for the degree sequence, or None if rejected."""
    degrees = degrees if isinstance(degrees, DegreeSequence) else DegreeSequence(tuple(degrees))
    rational = to_rational(poincare_series(n, degrees.sum + degrees.max), degrees)
    if rational is None:
        return None
    return rational.numerator[i] if i < len(rational.numerator) else 0


def spanning_set(n, j, basis, config, stream, cache=None):
    """Monomials in the basis of degree exactly ``j`` that span I_j, verified by rank."""
    dim = invariant_dimension(n, j)
    if dim == 0:
        return []
    monomials = spanning_products(basis, j, include_generators=True)
    points = stream.take(dim + config.margin(dim))
    echelon = EchelonBasis(len(points), config.prime)
    chosen = _stream_into(echelon, monomials, points, dim, cache, config.threads, keep=True)
    if echelon.rank < dim:
        raise InconclusiveError(f"the basis spans only {echelon.rank} of dim I_{j} = {dim}")
    return chosen


def ideal_membership_dim(hsop, basis, i, config, stream=None, cache=None, n=None, spanning=None):
    """dim(I_i ∩ H) for the ideal H generated by ``hsop``, by rank of h_k g at random points.

    ``spanning`` may map degrees to precomputed spanning sets and is filled in.
    """
    n = n or config.n
    hsop = sorted(hsop, key=lambda h: h.degree)
    stream = stream or PointStream(n, PrimeField(config.prime), config.seed)
    if cache is None:
        cache = MemoryCache(stream.origin)
    spanning = {} if spanning is None else spanning
    a_i = numerator_coefficient(n, [h.degree for h in hsop], i)
    dim = invariant_dimension(n, i)
    if dim == 0:
        return MembershipResult(degree=i, dim=0, rank=0, a_i=a_i)
    points = stream.take(dim + config.margin(dim))
    echelon = EchelonBasis(len(points), config.prime)
    for h in hsop:
        j = i - h.degree
        if j < 0 or echelon.rank >= dim:
            continue
        if j == 0:
            rows = [h]
        else:
            if j not in spanning:
                spanning[j] = spanning_set(n, j, basis, config, stream, cache)
            rows = [product(h, g) for g in spanning[j]]
        _stream_into(echelon, rows, points, dim, cache, config.threads)
    LOGGER.info("I_%d: dim %d, rank in H %d, a_%d = %s", i, dim, echelon.rank, i, a_i)
    return MembershipResult(degree=i, dim=dim, rank=echelon.rank, a_i=a_i, points=len(points))


class CandidateInfo(BaseModel):
    label: str
    expr: str
    degree: int


class DegreeCheck(BaseModel):
    passed: bool
    violations: List[dict] = []


class HsopReport(BaseModel):
    n: int
    prime: int
    seed: int
    margin_floor: int
    margin_fraction: float
    candidates: List[CandidateInfo]
    expected_count: int
    degree_check: Optional[DegreeCheck] = None
    jacobian_ranks: List[int] = []
    nullcone: Optional[NullconeSampleReport] = None
    membership: List[MembershipResult] = []
    verdict: Literal["certified-at-sampling-level", "refuted", "inconclusive"] = "inconclusive"
    reasons: List[str] = []


def _count_step(datablock):
    report = datablock["hsop"]["report"]
    if len(report.candidates) != report.expected_count:
        report.reasons.append(f"count: {len(report.candidates)} invariants, an hsop has {report.expected_count}")
        datablock["hsop"]["refuted"] = True
    return datablock


def _degree_step(datablock):
    if datablock["hsop"]["refuted"]:
        return datablock
    report = datablock["hsop"]["report"]
    check = check_sequence(report.n, DegreeSequence(tuple(c.degree for c in report.candidates)))
    report.degree_check = DegreeCheck(passed=bool(check),
                                      violations=[asdict(v) for v in check.violations])
    if not check:
        v = check.first_violation
        report.reasons.append(f"degrees: t = {v.t} needs {v.required} degrees divisible by {v.divisor}, "
                              f"found {v.found}")
        datablock["hsop"]["refuted"] = True
    return datablock


def _jacobian_step(datablock):
    if datablock["hsop"]["refuted"]:
        return datablock
    config, n = datablock["config"], datablock["n"]
    report, exprs = datablock["hsop"]["report"], datablock["hsop"]["exprs"]
    ring = PrimeField(config.prime)
    for k in range(config.jacobian_points):
        point = random_form(n, ring, seeded_rng(config.seed, 5, k))
        report.jacobian_ranks.append(jacobian_rank(exprs, point, config.prime))
    if max(report.jacobian_ranks) < report.expected_count:
        report.reasons.append(f"jacobian: rank at most {max(report.jacobian_ranks)} at "
                              f"{config.jacobian_points} points, independence needs {report.expected_count}")
        datablock["hsop"]["refuted"] = True
    return datablock


def _nullcone_step(datablock):
    if datablock["hsop"]["refuted"]:
        return datablock
    config, n = datablock["config"], datablock["n"]
    report, exprs = datablock["hsop"]["report"], datablock["hsop"]["exprs"]
    sample = vanish_on_nullcone_sample(exprs, n, config.nullcone_trials, config.seed, p=config.prime,
                                       labels=[c.label for c in report.candidates])
    report.nullcone = sample
    if sample.nonzero_on_nullforms:
        report.reasons.append(f"nullcone: nonzero value on {len(sample.nonzero_on_nullforms)} nullforms")
    if sample.generic_all_vanish:
        report.reasons.append(f"nullcone: all candidates vanish on {sample.generic_all_vanish} generic forms")
    return datablock


def _membership_step(datablock, degree):
    if datablock["hsop"]["refuted"]:
        return datablock
    config, n = datablock["config"], datablock["n"]
    report, exprs = datablock["hsop"]["report"], datablock["hsop"]["exprs"]
    if datablock["hsop"].get("basis") is None:
        lowest = min(e.degree for e in exprs)
        _, basis = find_basic_invariants(n, datablock["hsop"]["max_membership"] - lowest, config)
        datablock["hsop"]["basis"] = basis
    result = ideal_membership_dim(exprs, datablock["hsop"]["basis"], degree, config, datablock["points"],
                                  datablock["cache"], n, datablock["hsop"]["spanning"])
    report.membership.append(result)
    if not result.consistent:
        report.reasons.append(f"membership: rank {result.rank} + a_{degree} = {result.a_i} "
                              f"differs from dim I_{degree} = {result.dim}")
    return datablock


def _verdict_step(datablock):
    report = datablock["hsop"]["report"]
    if datablock["hsop"]["refuted"]:
        report.verdict = "refuted"
    elif report.reasons:
        report.verdict = "inconclusive"
    else:
        report.verdict = "certified-at-sampling-level"
    LOGGER.info("hsop verdict: %s", report.verdict)
    return datablock


def certify_hsop(exprs, config, labels=None, basis=None, membership_degrees=(), verbose=False):
    """Check that ``exprs`` is a homogeneous system of parameters, at sampling level.

    Runs the count, degree, jacobian, nullcone and membership checks as
    pipeline steps; any refutation skips the remaining checks.
    """
    exprs = list(exprs)
    n = config.n
    labels = list(labels) if labels is not None else [e.key for e in exprs]
    datablock = build_datablock(config, n)
    if datablock["cache"] is None:
        datablock["cache"] = MemoryCache(datablock["points"].origin)
    report = HsopReport(n=n, prime=config.prime, seed=config.seed, margin_floor=config.margin_floor,
                        margin_fraction=config.margin_fraction,
                        candidates=[CandidateInfo(label=label, expr=e.key, degree=e.degree)
                                    for label, e in zip(labels, exprs)],
                        expected_count=n - 2)
    datablock["hsop"] = {"report": report, "exprs": exprs, "refuted": False, "basis": basis,
                         "spanning": {}, "max_membership": max(membership_degrees, default=0)}

    pipeline = Pipeline(datablock)
    pipeline.add_step(_count_step)
    pipeline.add_step(_degree_step)
    pipeline.add_step(_jacobian_step)
    pipeline.add_step(_nullcone_step)
    for degree in sorted(membership_degrees):
        pipeline.add_step(_membership_step, {"degree": degree})
    pipeline.add_step(_verdict_step)
    datablock = pipeline.run(verbose=verbose)
    return datablock["hsop"]["report"]
