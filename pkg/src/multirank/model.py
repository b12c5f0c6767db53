"""Dataset containers, weighting schemes, and the implicit ranking operator.

A dataset is a square binary citation matrix ``C`` over items plus ``f``
binary feature matrices ``F_k`` (items x attributes).  Four block-matrix
constructions combine them into one big transition structure over
``N = sum(n_k) + n_C`` states:

* ``static``  -- feature/feature blocks are co-incidence products
  ``F_i^T F_j``, diagonal blocks carry co-citations ``F_k^T C F_k``, and a
  single global dummy row/column makes the chain irreducible.
* ``heap``    -- like ``static`` but every feature/feature block routes
  through citations: ``F_i^T C F_j``.
* ``sheap``   -- "simple heap": no feature/feature interaction at all, only
  item<->attribute incidence plus citations.
* ``stiff``   -- every matrix individually carries its own dummy row/column,
  each block is row-normalized on its own, and a row-stochastic coupling
  matrix ``gamma`` mixes the blocks into one stochastic matrix.

For ranking, the stochastic matrix ``P = diag(M_hat e)^{-1} M_hat`` is never
materialized.  Splitting off the last row/column of ``M_hat`` as vectors
``u``/``v`` leaves an N x N core ``M``, and everything the solvers need is
the product ``y = M^T D(u) x`` with ``D(u) = diag(M e + u)^{-1}``, computed
here through chains of sparse products in O(nnz) time and memory.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .errors import DegenerateBlockError, DimensionMismatchError, ModelSpecError
from .sparse import SparseMatrix, as_vector, reciprocal

logger = logging.getLogger(__name__)

KIND_STIFF = "stiff"
KIND_STATIC = "static"
KIND_HEAP = "heap"
KIND_SHEAP = "sheap"

WEIGHTING_UNIFORM = "u"
WEIGHTING_DIMENSION = "d"
WEIGHTING_DOUBLE_DIMENSION = "dd"
WEIGHTING_HEAP = "h"
WEIGHTING_DOUBLE_HEAP = "hh"

#: Which weighting schemes make sense for which base model.
ALLOWED_WEIGHTINGS = {
    KIND_STIFF: ("u", "d"),
    KIND_STATIC: ("u", "d", "dd"),
    KIND_HEAP: ("u", "d", "dd", "h", "hh"),
    KIND_SHEAP: ("u", "d", "dd", "h", "hh"),
}

ITEM_CLASS = "citations"

__all__ = [
    "ALLOWED_WEIGHTINGS",
    "ITEM_CLASS",
    "CitationGraph",
    "FeatureSet",
    "ClassLayout",
    "ModelSpec",
    "RankingOperator",
    "augment_dummy",
    "compute_weights",
    "build_operator",
    "build_one_class_operator",
    "precompute_row_scaling",
    "drop_empty_attributes",
    "all_model_specs",
]


# ---------------------------------------------------------------------------
# dataset containers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CitationGraph:
    """Square binary citation matrix; entry (i, j) = 1 iff item i cites item j."""

    matrix: SparseMatrix

    def __post_init__(self):
        m = self.matrix
        if m.n_rows != m.n_cols:
            raise ValueError(f"citation matrix must be square, got {m.n_rows}x{m.n_cols}")
        if m.nnz and not np.all(m.values == 1.0):
            raise ValueError("citation matrix must be binary (entries 0/1)")
        if m.csr.diagonal().any():
            raise ValueError("citation matrix must not contain self-loops")

    @property
    def n_items(self) -> int:
        return self.matrix.n_rows


@dataclass(frozen=True)
class FeatureSet:
    """Ordered binary incidence matrices, one per feature.

    ``features[k] = (name, F_k)`` with ``F_k`` of shape ``n_items x n_k``;
    entry (i, j) = 1 iff item i has attribute j of feature k.  Attribute
    columns are allowed to be empty (perturbation experiments produce them);
    ingestion paths drop empty columns via :func:`drop_empty_attributes`.
    """

    features: tuple
    n_items: int

    def __post_init__(self):
        seen = set()
        for name, f in self.features:
            if f.n_rows != self.n_items:
                raise DimensionMismatchError(
                    f"feature {name!r} has {f.n_rows} rows, expected {self.n_items}"
                )
            if f.nnz and not np.all(f.values == 1.0):
                raise ValueError(f"feature {name!r} must be binary (entries 0/1)")
            if name in seen:
                raise ValueError(f"duplicate feature name {name!r}")
            seen.add(name)

    @property
    def f(self) -> int:
        return len(self.features)

    @property
    def names(self) -> tuple:
        return tuple(name for name, _ in self.features)

    @property
    def sizes(self) -> tuple:
        return tuple(f.n_cols for _, f in self.features)

    def matrix(self, name) -> SparseMatrix:
        for fname, f in self.features:
            if fname == name:
                return f
        raise KeyError(name)


def drop_empty_attributes(fs: FeatureSet) -> tuple:
    """Remove attribute columns with zero incident items.

    Returns ``(new_feature_set, dropped)`` where ``dropped`` maps feature name
    to the list of dropped column indices.  The remap is logged.
    """
    new_features = []
    dropped = {}
    for name, f in fs.features:
        counts = f.transpose().row_sums()
        keep = np.flatnonzero(counts > 0)
        if keep.size == f.n_cols:
            new_features.append((name, f))
            continue
        dropped[name] = np.flatnonzero(counts == 0).tolist()
        logger.warning(
            "feature %r: dropping %d attribute(s) with zero items (of %d)",
            name, f.n_cols - keep.size, f.n_cols,
        )
        new_features.append((name, SparseMatrix(f.csr[:, keep])))
    return FeatureSet(tuple(new_features), fs.n_items), dropped


@dataclass(frozen=True)
class ClassLayout:
    """Partition of the reported score vector into named classes.

    Feature classes come first, the item class (named ``citations``) last.
    """

    names: tuple
    sizes: tuple

    def __post_init__(self):
        if len(self.names) != len(self.sizes):
            raise ValueError("names and sizes must have equal length")
        if not self.names or self.names[-1] != ITEM_CLASS:
            raise ValueError(f"last class must be {ITEM_CLASS!r}")
        if any(s <= 0 for s in self.sizes):
            raise ValueError("class sizes must be positive")

    @property
    def offsets(self) -> np.ndarray:
        return np.concatenate(([0], np.cumsum(self.sizes)))

    @property
    def total(self) -> int:
        return int(sum(self.sizes))

    def slice_of(self, name) -> slice:
        i = self.names.index(name)
        off = self.offsets
        return slice(int(off[i]), int(off[i + 1]))

    @classmethod
    def for_dataset(cls, graph: CitationGraph, features: FeatureSet) -> "ClassLayout":
        return cls(features.names + (ITEM_CLASS,), features.sizes + (graph.n_items,))


@dataclass(frozen=True)
class ModelSpec:
    """One of the fifteen (base model, weighting scheme) combinations.

    ``gamma`` applies to the stiff model only: the row-stochastic block
    coupling matrix of shape (f+1, f+1).  When omitted it is derived by
    row-normalizing the weighting scheme's weight matrix (uniform weighting
    gives the uniform coupling 1/(f+1)).
    """

    kind: str
    weighting: str
    gamma: np.ndarray | None = None

    def __post_init__(self):
        if self.kind not in ALLOWED_WEIGHTINGS:
            raise ModelSpecError(
                f"unknown model kind {self.kind!r}; expected one of {sorted(ALLOWED_WEIGHTINGS)}"
            )
        if self.weighting not in ALLOWED_WEIGHTINGS[self.kind]:
            raise ModelSpecError(
                f"weighting {self.weighting!r} is not defined for the {self.kind!r} model; "
                f"allowed: {ALLOWED_WEIGHTINGS[self.kind]}"
            )
        if self.gamma is not None:
            if self.kind != KIND_STIFF:
                raise ModelSpecError("gamma applies to the stiff model only")
            g = np.asarray(self.gamma, dtype=np.float64)
            if g.ndim != 2 or g.shape[0] != g.shape[1]:
                raise ModelSpecError("gamma must be a square matrix")
            if np.any(g < 0) or not np.all(np.isfinite(g)):
                raise ModelSpecError("gamma entries must be finite and nonnegative")
            if np.max(np.abs(g.sum(axis=1) - 1.0)) > 1e-12:
                raise ModelSpecError("gamma rows must sum to 1 (within 1e-12)")
            object.__setattr__(self, "gamma", g)

    @property
    def name(self) -> str:
        return f"{self.kind}-{self.weighting}"


def all_model_specs() -> list:
    """The fifteen valid (kind, weighting) combinations."""
    return [
        ModelSpec(kind, w)
        for kind in (KIND_STIFF, KIND_STATIC, KIND_HEAP, KIND_SHEAP)
        for w in ALLOWED_WEIGHTINGS[kind]
    ]


# ---------------------------------------------------------------------------
# construction helpers
# ---------------------------------------------------------------------------


def augment_dummy(c: SparseMatrix) -> SparseMatrix:
    """Border a square matrix with a dummy state citing and cited by all others.

    Returns ``[[C, e], [e^T, 0]]`` of size n+1.  The dummy guarantees every
    row sum is positive and the result is irreducible.
    """
    if c.n_rows != c.n_cols:
        raise DimensionMismatchError("can only dummy-augment a square matrix")
    n = c.n_rows
    ones_col = sp.csr_array(np.ones((n, 1)))
    ones_row = sp.csr_array(np.ones((1, n)))
    zero = sp.csr_array((1, 1))
    return SparseMatrix(sp.block_array([[c.csr, ones_col], [ones_row, zero]], format="csr"))


def _border_feature(f: SparseMatrix) -> SparseMatrix:
    """Rectangular analogue of :func:`augment_dummy`: ``[[F, e], [e^T, 0]]``."""
    n, m = f.n_rows, f.n_cols
    ones_col = sp.csr_array(np.ones((n, 1)))
    ones_row = sp.csr_array(np.ones((1, m)))
    zero = sp.csr_array((1, 1))
    return SparseMatrix(sp.block_array([[f.csr, ones_col], [ones_row, zero]], format="csr"))


def compute_weights(weighting: str, layout: ClassLayout) -> np.ndarray:
    """Block weight matrix alpha of shape (f+1, f+1) for a weighting scheme.

    Classes are ordered as in ``layout``: features first, items last.

    * ``u``  -- all ones.
    * ``d``  -- column weights n_j/n_C for feature columns, 1 for the item
      column (identical rows).
    * ``dd`` -- symmetric product alpha_i*alpha_j with alpha_i = n_i/n_C for
      features and 1 for items.
    * ``h``  -- (sum_k n_k)/n_C on all feature columns, 1 on the item column.
    * ``hh`` -- with a = (sum_k n_k)/n_C: a^2 between features, a on the item
      row and column borders, 1 in the item/item corner.
    """
    sizes = np.asarray(layout.sizes, dtype=np.float64)
    f = len(sizes) - 1
    if f < 1:
        raise ModelSpecError("weight matrices need at least one feature class")
    n_c = sizes[-1]
    if weighting == WEIGHTING_UNIFORM:
        return np.ones((f + 1, f + 1))
    if weighting == WEIGHTING_DIMENSION:
        col = np.append(sizes[:-1] / n_c, 1.0)
        return np.tile(col, (f + 1, 1))
    if weighting == WEIGHTING_DOUBLE_DIMENSION:
        a = np.append(sizes[:-1] / n_c, 1.0)
        return np.outer(a, a)
    if weighting == WEIGHTING_HEAP:
        a = sizes[:-1].sum() / n_c
        alpha = np.full((f + 1, f + 1), a)
        alpha[:, f] = 1.0
        return alpha
    if weighting == WEIGHTING_DOUBLE_HEAP:
        a = sizes[:-1].sum() / n_c
        alpha = np.full((f + 1, f + 1), a * a)
        alpha[:, f] = a
        alpha[f, :] = a
        alpha[f, f] = 1.0
        return alpha
    raise ModelSpecError(f"unknown weighting scheme {weighting!r}")


def _default_gamma(alpha: np.ndarray) -> np.ndarray:
    """Row-normalize a weight matrix into a stochastic block coupling."""
    return alpha / alpha.sum(axis=1, keepdims=True)


# ---------------------------------------------------------------------------
# the implicit operator
# ---------------------------------------------------------------------------


@dataclass
class RankingOperator:
    """Implicit representation of ``y = M^T D(u) x`` for one model.

    ``M`` is the N x N core of the model's block matrix (last row/column
    split off as ``v``/``u``); ``D(u) = diag(M e + u)^{-1}`` is the row
    normalization of the induced stochastic matrix.  For the stiff model
    each block is normalized on its own (so ``D = I`` globally) and
    ``scaling`` is None while ``block_scaling`` holds one reciprocal
    row-sum vector per block.

    The state vector is partitioned into ``state_sizes`` segments: one per
    feature class, items last.  For the stiff model each feature segment
    carries its per-block dummy as its final entry; the item segment does
    not (the citation-class dummy is the split-off (N+1)-th component).
    """

    kind: str
    weighting: str
    alpha: np.ndarray
    layout: ClassLayout
    state_sizes: tuple
    u: np.ndarray
    v: np.ndarray
    scaling: np.ndarray | None
    block_scaling: dict | None
    gamma: np.ndarray | None
    _c: SparseMatrix
    _c_t: SparseMatrix
    _fs: tuple
    _fs_t: tuple
    _z: np.ndarray | None = None
    _dummy_states: np.ndarray = field(default=None, repr=False)

    @property
    def n_states(self) -> int:
        return int(sum(self.state_sizes))

    @property
    def state_offsets(self) -> np.ndarray:
        return np.concatenate(([0], np.cumsum(self.state_sizes)))

    def state_slice(self, i) -> slice:
        off = self.state_offsets
        return slice(int(off[i]), int(off[i + 1]))

    @property
    def dummy_states(self) -> np.ndarray:
        """Indices of internal dummy states (nonempty for the stiff model only)."""
        return self._dummy_states

    # -- products ---------------------------------------------------------

    def apply(self, x) -> np.ndarray:
        """Return ``M^T D(u) x`` using sparse products only."""
        x = as_vector(x, self.n_states)
        if self.kind == KIND_STIFF:
            return self._apply_stiff(x)
        return self._apply_scaled(x)

    def dummy_component(self, x) -> float:
        """The split-off component ``x^T D(u) u`` completing the Perron vector."""
        x = as_vector(x, self.n_states)
        if self.kind == KIND_STIFF:
            return float(x @ self.u)
        return float((x * self.scaling) @ self.u)

    def _apply_scaled(self, x) -> np.ndarray:
        n_classes = len(self.state_sizes)
        f = n_classes - 1
        alpha = self.alpha
        g = x * self.scaling
        parts = [g[self.state_slice(i)] for i in range(n_classes)]
        g_items = parts[f]
        fg = [self._fs[k].right_multiply(parts[k]) for k in range(f)]

        y = np.zeros(self.n_states)
        # item destination column: attribute inflow + co-citation inflow
        y_items = self.alpha[f, f] * self._c_t.right_multiply(g_items)
        for k in range(f):
            y_items += alpha[k, f] * fg[k]
        y[self.state_slice(f)] = y_items

        if self.kind == KIND_SHEAP:
            for j in range(f):
                y[self.state_slice(j)] = alpha[f, j] * self._fs_t[j].right_multiply(g_items)
            return y

        for j in range(f):
            if self.kind == KIND_STATIC:
                t = alpha[f, j] * g_items
                t += alpha[j, j] * self._c_t.right_multiply(fg[j])
                for i in range(f):
                    if i != j:
                        t += alpha[i, j] * fg[i]
            else:  # heap: every feature/feature block routes through C
                s = np.zeros(self._c.n_rows)
                for i in range(f):
                    s += alpha[i, j] * fg[i]
                t = self._c_t.right_multiply(s) + alpha[f, j] * g_items
            y[self.state_slice(j)] = self._fs_t[j].right_multiply(t)
        return y

    # -- stiff-specific machinery ------------------------------------------
    #
    # The hatted matrices (every F_k and C bordered with its own dummy) are
    # stored in _fs/_c; state segments include each feature's dummy.  apply()
    # pads x with a zero in the citation-dummy slot, applies the full block
    # matrix transposed, and drops that slot again.

    def _stiff_slices(self):
        f = len(self.state_sizes) - 1
        sizes_hat = list(self.state_sizes[:-1]) + [self.state_sizes[-1] + 1]
        off = np.concatenate(([0], np.cumsum(sizes_hat)))
        return [slice(int(off[i]), int(off[i + 1])) for i in range(f + 1)], int(off[-1])

    def _block_t_apply(self, i, j, g) -> np.ndarray:
        """``A_hat[i,j]^T @ g`` for the stiff block structure."""
        f = len(self.state_sizes) - 1
        if i == f and j == f:
            return self._c_t.right_multiply(g)
        if i == f:  # block is F_hat_j
            return self._fs_t[j].right_multiply(g)
        if j == f:  # block is F_hat_i^T
            return self._fs[i].right_multiply(g)
        if i == j:  # block is F_hat_i^T C_hat F_hat_i
            return self._fs_t[i].right_multiply(
                self._c_t.right_multiply(self._fs[i].right_multiply(g))
            )
        return self._fs_t[j].right_multiply(self._fs[i].right_multiply(g))

    def _apply_stiff(self, x) -> np.ndarray:
        f = len(self.state_sizes) - 1
        slices, n_hat = self._stiff_slices()
        x_hat = np.zeros(n_hat)
        x_hat[: self.n_states] = x  # citation-dummy slot stays zero
        y_hat = np.zeros(n_hat)
        for i in range(f + 1):
            xi = x_hat[slices[i]]
            for j in range(f + 1):
                coef = self.gamma[i, j]
                if coef == 0.0:
                    continue
                g = coef * (xi * self.block_scaling[(i, j)])
                y_hat[slices[j]] += self._block_t_apply(i, j, g)
        return y_hat[: self.n_states]


def _z_vector(kind, c: SparseMatrix, fs, alpha) -> np.ndarray:
    """Row sums ``z = M e + u`` of a non-stiff model, blockwise in O(nnz)."""
    f = len(fs)
    n_c = c.n_rows
    fe = [fk.row_sums() for fk in fs]  # F_k e: per-item attribute counts
    ones_c = np.ones(n_c)

    z_parts = []
    for j in range(f):
        if kind == KIND_SHEAP:
            t = None
        elif kind == KIND_STATIC:
            t = alpha[j, f] * ones_c + alpha[j, j] * c.right_multiply(fe[j])
            for h in range(f):
                if h != j:
                    t += alpha[j, h] * fe[h]
        else:  # heap
            s = np.zeros(n_c)
            for h in range(f):
                s += alpha[j, h] * fe[h]
            t = c.right_multiply(s) + alpha[j, f] * ones_c
        if t is None:
            zj = alpha[j, f] * fs[j].left_multiply(ones_c)
        else:
            zj = fs[j].left_multiply(t)
        z_parts.append(zj + 1.0)

    z_items = alpha[f, f] * c.row_sums() + ones_c
    for h in range(f):
        z_items += alpha[f, h] * fe[h]
    z_parts.append(z_items)
    return np.concatenate(z_parts)


def _stiff_block_row_sums(i, j, f, c_hat: SparseMatrix, fs_hat) -> np.ndarray:
    """Row sums of stiff block (i, j), by chained sparse products."""
    if i == f and j == f:
        return c_hat.row_sums()
    if i == f:
        return fs_hat[j].row_sums()
    if j == f:
        return fs_hat[i].transpose().row_sums()
    if i == j:
        e = np.ones(fs_hat[i].n_cols)
        return fs_hat[i].left_multiply(c_hat.right_multiply(fs_hat[i].right_multiply(e)))
    e = np.ones(fs_hat[j].n_cols)
    return fs_hat[i].left_multiply(fs_hat[j].right_multiply(e))


def build_operator(
    spec: ModelSpec,
    graph: CitationGraph,
    features: FeatureSet,
    alpha_override: np.ndarray | None = None,
) -> RankingOperator:
    """Assemble the implicit operator for one of the fifteen models.

    ``alpha_override`` replaces the weighting scheme's weight matrix entry
    for entry (same (f+1, f+1) shape); the scheme still gates which model
    kinds accept it.  Used for limit studies and custom tunings.
    """
    if features.n_items != graph.n_items:
        raise DimensionMismatchError("feature set and citation graph disagree on item count")
    f = features.f
    if f < 1:
        raise ModelSpecError("multi-class models need at least one feature; "
                             "use the one-class ranking for bare citation graphs")
    layout = ClassLayout.for_dataset(graph, features)
    alpha = compute_weights(spec.weighting, layout)
    if alpha_override is not None:
        alpha = np.asarray(alpha_override, dtype=np.float64)
        if alpha.shape != (f + 1, f + 1):
            raise ModelSpecError(f"alpha override must have shape {(f + 1, f + 1)}")
        if np.any(alpha < 0) or not np.all(np.isfinite(alpha)):
            raise ModelSpecError("alpha entries must be finite and nonnegative")

    c = graph.matrix
    fs = tuple(fk for _, fk in features.features)

    if spec.kind == KIND_STIFF:
        gamma = spec.gamma if spec.gamma is not None else _default_gamma(alpha)
        if gamma.shape != (f + 1, f + 1):
            raise ModelSpecError(f"gamma must have shape {(f + 1, f + 1)}")
        c_hat = augment_dummy(c)
        fs_hat = tuple(_border_feature(fk) for fk in fs)
        block_scaling = {}
        for i in range(f + 1):
            for j in range(f + 1):
                rs = _stiff_block_row_sums(i, j, f, c_hat, fs_hat)
                zero = np.flatnonzero(rs <= 0.0)
                if zero.size:
                    raise DegenerateBlockError(
                        f"stiff block ({i}, {j}) has a zero row (row {zero[0]}) "
                        "and cannot be row-normalized"
                    )
                block_scaling[(i, j)] = 1.0 / rs
        state_sizes = tuple(n + 1 for n in features.sizes) + (graph.n_items,)
        op = RankingOperator(
            kind=spec.kind,
            weighting=spec.weighting,
            alpha=alpha,
            layout=layout,
            state_sizes=state_sizes,
            u=np.empty(0),
            v=np.empty(0),
            scaling=None,
            block_scaling=block_scaling,
            gamma=gamma,
            _c=c_hat,
            _c_t=c_hat.transpose(),
            _fs=fs_hat,
            _fs_t=tuple(fk.transpose() for fk in fs_hat),
        )
        op.u, op.v = _stiff_border_vectors(op)
        offsets = op.state_offsets
        op._dummy_states = np.array(
            [int(offsets[k + 1]) - 1 for k in range(f)], dtype=np.int64
        )
        return op

    z = _z_vector(spec.kind, c, fs, alpha)
    state_sizes = features.sizes + (graph.n_items,)
    n = int(sum(state_sizes))
    op = RankingOperator(
        kind=spec.kind,
        weighting=spec.weighting,
        alpha=alpha,
        layout=layout,
        state_sizes=state_sizes,
        u=np.ones(n),
        v=np.ones(n),
        scaling=reciprocal(z),
        block_scaling=None,
        gamma=None,
        _c=c,
        _c_t=c.transpose(),
        _fs=fs,
        _fs_t=tuple(fk.transpose() for fk in fs),
        _z=z,
    )
    op._dummy_states = np.empty(0, dtype=np.int64)
    return op


def _stiff_border_vectors(op: RankingOperator) -> tuple:
    """Last column (u) and last row (v) of the assembled stiff matrix P.

    Both exclude the corner entry (which is structurally zero: the citation
    dummy does not cite itself).  Computed through the same block products as
    ``apply``, against a unit vector in the citation-dummy slot.
    """
    f = len(op.state_sizes) - 1
    slices, n_hat = op._stiff_slices()
    n_c_hat = op._c.n_rows
    e_last = np.zeros(n_c_hat)
    e_last[-1] = 1.0

    u_hat = np.zeros(n_hat)
    for i in range(f + 1):
        w = op.block_scaling[(i, f)]
        if i == f:
            col = op._c.right_multiply(e_last)
        else:
            col = op._fs_t[i].right_multiply(e_last)  # A_hat[i,f] = F_hat_i^T
        u_hat[slices[i]] = op.gamma[i, f] * w * col

    v_hat = np.zeros(n_hat)
    for j in range(f + 1):
        w_last = op.block_scaling[(f, j)][-1]
        if j == f:
            row = op._c_t.right_multiply(e_last)
        else:
            row = op._fs_t[j].right_multiply(e_last)  # A_hat[f,j] = F_hat_j
        v_hat[slices[j]] = op.gamma[f, j] * w_last * row

    return u_hat[: op.n_states], v_hat[: op.n_states]


def build_one_class_operator(graph: CitationGraph) -> RankingOperator:
    """Operator of the bare citation ranking (no features, global dummy only)."""
    c = graph.matrix
    n = graph.n_items
    layout = ClassLayout((ITEM_CLASS,), (n,))
    z = c.row_sums() + 1.0
    op = RankingOperator(
        kind="one-class",
        weighting=WEIGHTING_UNIFORM,
        alpha=np.ones((1, 1)),
        layout=layout,
        state_sizes=(n,),
        u=np.ones(n),
        v=np.ones(n),
        scaling=reciprocal(z),
        block_scaling=None,
        gamma=None,
        _c=c,
        _c_t=c.transpose(),
        _fs=(),
        _fs_t=(),
        _z=z,
    )
    op._dummy_states = np.empty(0, dtype=np.int64)
    return op


def precompute_row_scaling(op: RankingOperator):
    """Recompute the row scaling of an operator from its raw matrices.

    Returns the reciprocal row-sum vector ``w = 1/z`` for non-stiff models
    (``z = M e + u``), or the per-block reciprocal dictionary for the stiff
    model.  Cost is O(sum nnz(F_k) + nnz(C)); no N x N product is formed.
    """
    if op.kind == KIND_STIFF:
        f = len(op.state_sizes) - 1
        return {
            (i, j): 1.0 / _stiff_block_row_sums(i, j, f, op._c, op._fs)
            for i in range(f + 1)
            for j in range(f + 1)
        }
    if op.kind == "one-class":
        return reciprocal(op._c.row_sums() + 1.0)
    return reciprocal(_z_vector(op.kind, op._c, op._fs, op.alpha))
