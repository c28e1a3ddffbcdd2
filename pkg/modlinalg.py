"""Dense linear algebra over F_p with numpy int64 arithmetic.

Entries are kept in [0, p) with p < 2^31, so the product of two residues
fits in an int64. Row reductions against many pivot rows are done as one
matrix product whenever the accumulated sum cannot overflow, and in chunks
of pivot rows otherwise.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from algebra import DEFAULT_PRIME, is_prime

LOGGER = logging.getLogger(__name__)

_INT64_MAX = np.iinfo(np.int64).max
_HEADER = np.dtype("<u8")
_ENTRY = np.dtype("<u4")


def _check_prime(p):
    if p == 2 or not is_prime(p) or p >= 2**31:
        raise ValueError(f"modulus must be an odd prime below 2^31, got {p}")


def _chunk_size(p):
    """Pivot rows that can be accumulated before an int64 sum of products overflows."""
    return max(1, _INT64_MAX // ((p - 1) ** 2 + p))


class ModMatrix:
    """Dense matrix over F_p stored row-major as an int64 numpy array."""

    def __init__(self, entries, p=DEFAULT_PRIME):
        _check_prime(p)
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ValueError("ModMatrix needs a two-dimensional array")
        self.p = p
        self.entries = arr % p

    @classmethod
    def zeros(cls, n_rows, n_cols, p=DEFAULT_PRIME):
        return cls(np.zeros((n_rows, n_cols), dtype=np.int64), p)

    @classmethod
    def from_rows(cls, rows, n_cols, p=DEFAULT_PRIME):
        rows = [np.asarray(r, dtype=np.int64) for r in rows]
        for r in rows:
            if r.shape != (n_cols,):
                raise ValueError(f"row of length {r.shape} in a matrix with {n_cols} columns")
        if not rows:
            return cls.zeros(0, n_cols, p)
        return cls(np.stack(rows), p)

    @property
    def n_rows(self):
        return self.entries.shape[0]

    @property
    def n_cols(self):
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def __eq__(self, other):
        return (isinstance(other, ModMatrix) and self.p == other.p
                and self.shape == other.shape and bool(np.all(self.entries == other.entries)))

    def __repr__(self):
        return f"ModMatrix({self.n_rows}x{self.n_cols} over GF({self.p}))"

    def transpose(self):
        return ModMatrix(self.entries.T.copy(), self.p)

    def rank(self, threads=1):
        return len(_eliminate(self.entries.copy(), self.p, reduced=False, threads=threads)[1])

    def rref(self, threads=1):
        """Reduced row echelon form and the pivot columns."""
        arr, pivots = _eliminate(self.entries.copy(), self.p, reduced=True, threads=threads)
        return ModMatrix(arr[:len(pivots)], self.p), pivots

    def nullspace(self):
        """Basis of the left nullspace {v : v M = 0}, in reduced echelon form."""
        m, n = self.shape
        augmented = np.concatenate([self.entries, np.eye(m, dtype=np.int64)], axis=1)
        arr, pivots = _eliminate(augmented, self.p, reduced=False, limit=n)
        relations = arr[len(pivots):, n:]
        if not len(relations):
            return ModMatrix.zeros(0, m, self.p)
        return ModMatrix(relations, self.p).rref()[0]

    def dump(self, path):
        """Write the header p, rows, cols as little-endian u64 and entries as u32."""
        with open(path, "wb") as handle:
            handle.write(np.array([self.p, self.n_rows, self.n_cols], dtype=_HEADER).tobytes())
            handle.write(self.entries.astype(_ENTRY).tobytes())

    @classmethod
    def load(cls, path):
        with open(path, "rb") as handle:
            p, n_rows, n_cols = (int(v) for v in np.frombuffer(handle.read(24), dtype=_HEADER))
            data = np.frombuffer(handle.read(), dtype=_ENTRY)
        if data.size != n_rows * n_cols:
            raise ValueError(f"dump holds {data.size} entries, header says {n_rows}x{n_cols}")
        return cls(data.astype(np.int64).reshape(n_rows, n_cols), p)


def _update_rows(arr, rows, col, pivot_row, p):
    arr[rows] = (arr[rows] - np.outer(arr[rows, col], pivot_row)) % p


def _eliminate(arr, p, reduced=False, threads=1, limit=None):
    """Gaussian elimination in place; pivots are the first nonzero entries by column.

    Only the first ``limit`` columns are used for pivots. Returns the array
    (pivot rows first) and the list of pivot columns.
    """
    n_rows, n_cols = arr.shape
    limit = n_cols if limit is None else limit
    pivots = []
    r = 0
    executor = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        for col in range(limit):
            if r == n_rows:
                break
            nonzero = np.flatnonzero(arr[r:, col])
            if not nonzero.size:
                continue
            k = r + nonzero[0]
            if k != r:
                arr[[r, k]] = arr[[k, r]]
            arr[r] = arr[r] * pow(int(arr[r, col]), -1, p) % p
            targets = np.arange(0 if reduced else r + 1, n_rows)
            targets = targets[(targets != r) & (arr[targets, col] != 0)]
            if targets.size:
                if executor is None:
                    _update_rows(arr, targets, col, arr[r].copy(), p)
                else:
                    pivot_row = arr[r].copy()
                    blocks = np.array_split(targets, threads)
                    list(executor.map(lambda b: _update_rows(arr, b, col, pivot_row, p),
                                      [b for b in blocks if b.size]))
            pivots.append(col)
            r += 1
    finally:
        if executor is not None:
            executor.shutdown()
    return arr, pivots


def rank(m, threads=1):
    return m.rank(threads=threads)


def nullspace(m):
    return m.nullspace()


class EchelonBasis:
    """Rows seen so far, kept in reduced row echelon form.

    ``add`` reduces a new row against the basis and keeps it if it is
    independent, so the rank is exact after every row.
    """

    def __init__(self, n_cols, p=DEFAULT_PRIME):
        _check_prime(p)
        self.n_cols = n_cols
        self.p = p
        self.pivots = []
        self._rows = np.zeros((min(max(n_cols, 1), 64), n_cols), dtype=np.int64)
        self._chunk = _chunk_size(p)

    @property
    def rank(self):
        return len(self.pivots)

    @property
    def rows(self):
        return self._rows[:self.rank]

    def reduce(self, row):
        row = np.asarray(row, dtype=np.int64) % self.p
        if row.shape != (self.n_cols,):
            raise ValueError(f"row of length {row.shape[0] if row.ndim else 0}, expected {self.n_cols}")
        if not self.pivots:
            return row
        basis = self.rows
        pivots = np.array(self.pivots)
        for start in range(0, self.rank, self._chunk):
            stop = start + self._chunk
            factors = row[pivots[start:stop]]
            row = (row - factors @ basis[start:stop] % self.p) % self.p
        return row

    def add(self, row):
        """Reduce ``row``; keep it and return True if it raises the rank."""
        row = self.reduce(row)
        nonzero = np.flatnonzero(row)
        if not nonzero.size:
            return False
        lead = int(nonzero[0])
        row = row * pow(int(row[lead]), -1, self.p) % self.p
        basis = self.rows
        column = basis[:, lead].copy()
        if np.any(column):
            basis[:] = (basis - np.outer(column, row)) % self.p
        if self.rank == len(self._rows):
            grown = np.zeros((min(2 * len(self._rows), max(self.n_cols, 1)), self.n_cols), dtype=np.int64)
            grown[:self.rank] = self._rows[:self.rank]
            self._rows = grown
        self._rows[self.rank] = row
        self.pivots.append(lead)
        return True

    def contains(self, row):
        return not np.any(self.reduce(row))


@dataclass(frozen=True)
class StreamResult:
    achieved_rank: int
    rows_consumed: int


def rank_streaming(rows, n_cols, target_rank=None, max_rows=None, p=DEFAULT_PRIME, basis=None):
    """Consume rows until the rank reaches ``target_rank`` or ``max_rows`` rows are read.

    ``basis`` may be an existing ``EchelonBasis`` to extend.
    """
    basis = EchelonBasis(n_cols, p) if basis is None else basis
    consumed = 0
    if target_rank is not None and basis.rank >= target_rank:
        return StreamResult(basis.rank, 0)
    for row in rows:
        if max_rows is not None and consumed >= max_rows:
            break
        consumed += 1
        basis.add(row)
        if target_rank is not None and basis.rank >= target_rank:
            break
    LOGGER.debug("streamed %d rows, rank %d", consumed, basis.rank)
    return StreamResult(basis.rank, consumed)
