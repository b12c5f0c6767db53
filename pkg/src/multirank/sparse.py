"""Row-compressed sparse matrices and elementwise vector kernels.

Every product in the package (model assembly, the implicit ranking operator,
the Krylov solvers) funnels through the handful of kernels defined here, so
they are kept deliberately small: canonical CSR storage (sorted, deduplicated
column indices; duplicates summed at construction) with sequential,
deterministic accumulation.  Vectors are plain 1-D float64 ``numpy`` arrays.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp

from .errors import DegenerateRowError, DimensionMismatchError, NormalizationError

__all__ = [
    "SparseMatrix",
    "as_vector",
    "hadamard",
    "reciprocal",
    "l1_norm",
    "l1_normalize",
]


def as_vector(x, length=None) -> np.ndarray:
    """Coerce ``x`` to a 1-D float64 array, optionally checking its length."""
    v = np.asarray(x, dtype=np.float64)
    if v.ndim != 1:
        raise DimensionMismatchError(f"expected a 1-D vector, got shape {v.shape}")
    if length is not None and v.shape[0] != length:
        raise DimensionMismatchError(f"expected length {length}, got {v.shape[0]}")
    return v


class SparseMatrix:
    """Immutable CSR matrix with nonnegative float64 entries.

    Wraps a canonicalized ``scipy.sparse.csr_array``: duplicate coordinates
    are summed at construction, explicit zeros removed, and column indices
    sorted within each row, so products accumulate in ascending index order
    and are reproducible run to run.
    """

    __slots__ = ("_m",)

    def __init__(self, matrix):
        m = sp.csr_array(matrix, dtype=np.float64)
        m.sum_duplicates()
        m.eliminate_zeros()
        m.sort_indices()
        if m.nnz and not np.all(np.isfinite(m.data)):
            raise ValueError("sparse matrix entries must be finite")
        if m.nnz and m.data.min() < 0.0:
            raise ValueError("sparse matrix entries must be nonnegative")
        self._m = m

    # -- construction -----------------------------------------------------

    @classmethod
    def from_coo(cls, n_rows, n_cols, rows, cols, values) -> "SparseMatrix":
        """Build from coordinate triplets; duplicate coordinates are summed."""
        coo = sp.coo_array(
            (np.asarray(values, dtype=np.float64), (rows, cols)),
            shape=(n_rows, n_cols),
        )
        return cls(coo.tocsr())

    @classmethod
    def from_dense(cls, array) -> "SparseMatrix":
        return cls(sp.csr_array(np.asarray(array, dtype=np.float64)))

    @classmethod
    def identity(cls, n) -> "SparseMatrix":
        return cls(sp.eye_array(n, format="csr"))

    # -- structure --------------------------------------------------------

    @property
    def n_rows(self) -> int:
        return self._m.shape[0]

    @property
    def n_cols(self) -> int:
        return self._m.shape[1]

    @property
    def nnz(self) -> int:
        return self._m.nnz

    @property
    def row_offsets(self) -> np.ndarray:
        return self._m.indptr

    @property
    def col_indices(self) -> np.ndarray:
        return self._m.indices

    @property
    def values(self) -> np.ndarray:
        return self._m.data

    @property
    def csr(self) -> sp.csr_array:
        """Underlying scipy array (treat as read-only)."""
        return self._m

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self._m.T.tocsr())

    def toarray(self) -> np.ndarray:
        return self._m.toarray()

    # -- kernels ----------------------------------------------------------

    def left_multiply(self, x) -> np.ndarray:
        """Row-vector product ``y = x @ A`` with ``y_j = sum_i x_i A_ij``."""
        x = as_vector(x, self.n_rows)
        return self._m.T @ x

    def right_multiply(self, x) -> np.ndarray:
        """Column-vector product ``y = A @ x`` with ``y_i = sum_j A_ij x_j``."""
        x = as_vector(x, self.n_cols)
        return self._m @ x

    def row_sums(self) -> np.ndarray:
        # Literally A @ e so the identity row_sums(A) == right_multiply(A, e)
        # holds bit for bit.
        return self.right_multiply(np.ones(self.n_cols))

    def __repr__(self):
        return f"SparseMatrix({self.n_rows}x{self.n_cols}, nnz={self.nnz})"


def hadamard(x, y) -> np.ndarray:
    """Component-wise product of two equal-length vectors."""
    x = as_vector(x)
    y = as_vector(y, x.shape[0])
    return x * y


def reciprocal(z) -> np.ndarray:
    """Entrywise ``1/z``; every entry must be strictly positive."""
    z = as_vector(z)
    bad = np.flatnonzero(z <= 0.0)
    if bad.size:
        raise DegenerateRowError(
            f"cannot take reciprocal: entry {bad[0]} is {z[bad[0]]!r} (must be > 0)"
        )
    return 1.0 / z


def l1_norm(x) -> float:
    return float(np.sum(np.abs(as_vector(x))))


def l1_normalize(x) -> np.ndarray:
    """Scale ``x`` so its entries' absolute values sum to one."""
    x = as_vector(x)
    norm = np.sum(np.abs(x))
    if norm == 0.0 or not np.isfinite(norm):
        raise NormalizationError(f"cannot normalize vector with L1 norm {norm!r}")
    return x / norm
