"""Dense matrix algebra over exact scalars, plus Cauchy-matrix closed forms.

Matrices are numpy arrays: dtype=object for Gaussian rationals (all
arithmetic stays exact) and complex128 for the float benchmark path.
Determinants and inverses dispatch on the dtype: object arrays go through
fraction-aware Gaussian elimination with first-nonzero pivoting, float
arrays through numpy.linalg.
"""

from __future__ import annotations

import numpy as np

from .field import GaussianRational, ONE, one_like, zero_like
from .kernels import GenericityError, g, kernel_product, kernel_pair_product, vandermonde

__all__ = [
    "SingularMatrixError",
    "matrix",
    "zeros",
    "identity",
    "matmul",
    "kron",
    "kron_power",
    "trace",
    "add",
    "scale",
    "det",
    "inverse",
    "mat_equal",
    "cauchy_matrix",
    "cauchy_det",
    "cauchy_inverse",
]


class SingularMatrixError(ZeroDivisionError):
    """Matrix has no inverse over the field."""


def matrix(rows) -> np.ndarray:
    """Build a 2-D array from rows, choosing object dtype for exact scalars."""
    rows = [list(r) for r in rows]
    if rows and rows[0] and isinstance(rows[0][0], GaussianRational):
        arr = np.empty((len(rows), len(rows[0])), dtype=object)
        for i, r in enumerate(rows):
            arr[i, :] = r
        return arr
    return np.array(rows, dtype=complex)


def zeros(shape, sample) -> np.ndarray:
    if isinstance(sample, GaussianRational):
        arr = np.empty(shape, dtype=object)
        arr[...] = zero_like(sample)
        return arr
    return np.zeros(shape, dtype=complex)


def identity(dim: int, sample) -> np.ndarray:
    arr = zeros((dim, dim), sample)
    one = one_like(sample)
    for i in range(dim):
        arr[i, i] = one
    return arr


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[-1] != b.shape[0]:
        raise ValueError(f"dimension mismatch for product: {a.shape} x {b.shape}")
    return a @ b


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with the first factor as the slow (most significant) index."""
    return np.kron(a, b)


def kron_power(a: np.ndarray, count: int, sample=None) -> np.ndarray:
    """count-fold Kronecker power; the empty power is the 1x1 (or length-1) identity."""
    if count == 0:
        sample = sample if sample is not None else a.flat[0]
        if a.ndim == 1:
            out = zeros((1,), sample)
            out[0] = one_like(sample)
            return out
        return identity(1, sample)
    result = a
    for _ in range(count - 1):
        result = np.kron(result, a)
    return result


def trace(a: np.ndarray):
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"trace requires a square matrix, got shape {a.shape}")
    return a.trace()


def add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch for sum: {a.shape} + {b.shape}")
    return a + b


def scale(alpha, a: np.ndarray) -> np.ndarray:
    return alpha * a


def mat_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and bool(np.equal(a, b).all())


def det(a: np.ndarray, one=None):
    """Exact determinant; the 0x0 determinant is 1 by convention."""
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"determinant requires a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n == 0:
        return one if one is not None else ONE
    if a.dtype != object:
        return np.linalg.det(a)
    m = [list(row) for row in a]
    sign = 1
    result = one_like(m[0][0])
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if m[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            return zero_like(m[0][0])
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            sign = -sign
        pivot = m[col][col]
        result = result * pivot
        for r in range(col + 1, n):
            factor = m[r][col] / pivot
            if factor:
                row_r, row_c = m[r], m[col]
                for k in range(col + 1, n):
                    row_r[k] = row_r[k] - factor * row_c[k]
    return -result if sign < 0 else result


def inverse(a: np.ndarray) -> np.ndarray:
    """Exact inverse via Gauss-Jordan elimination; raises SingularMatrixError."""
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"inverse requires a square matrix, got shape {a.shape}")
    if a.dtype != object:
        try:
            return np.linalg.inv(a)
        except np.linalg.LinAlgError as exc:
            raise SingularMatrixError(str(exc)) from None
    n = a.shape[0]
    m = [list(row) for row in a]
    inv = [list(row) for row in identity(n, a[0, 0] if n else ONE)]
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if m[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            raise SingularMatrixError(f"matrix is singular (no pivot in column {col})")
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
        pivot = m[col][col]
        m[col] = [x / pivot for x in m[col]]
        inv[col] = [x / pivot for x in inv[col]]
        for r in range(n):
            if r == col:
                continue
            factor = m[r][col]
            if factor:
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
                inv[r] = [x - factor * y for x, y in zip(inv[r], inv[col])]
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        out[i, :] = inv[i]
    return out


# -- Cauchy matrix -----------------------------------------------------------


def _require_square_generic(params):
    if params.m != params.n:
        raise GenericityError(
            f"Cauchy matrix needs equally many u's and v's, got {params.m} and {params.n}"
        )
    if not params.generic:
        raise GenericityError("Cauchy closed forms require a generic ParamSet")


def cauchy_matrix(params) -> np.ndarray:
    """The n x n matrix with entries g(u_i, v_j)."""
    _require_square_generic(params)
    c = params.c
    return matrix([[g(u, v, c) for v in params.v_list] for u in params.u_list])


def cauchy_det(params):
    """Closed-form determinant: g(u,v) over all pairs times both Vandermonde factors."""
    _require_square_generic(params)
    c = params.c
    return (
        kernel_pair_product("g", params.u_list, params.v_list, c)
        * vandermonde(params.u_list, c)
        * vandermonde(params.v_list, c, primed=True)
    )


def cauchy_inverse(params) -> np.ndarray:
    """Closed-form inverse of the Cauchy matrix, entry (k, l) built from kernel products."""
    _require_square_generic(params)
    c = params.c
    us, vs = params.u_list, params.v_list
    n = params.n
    rows = []
    for k in range(n):
        vk = vs[k]
        v_rest = vs[:k] + vs[k + 1:]
        row = []
        for l in range(n):
            ul = us[l]
            u_rest = us[:l] + us[l + 1:]
            value = (
                g(ul, vk, c)
                * kernel_product("g", vk, v_rest, c, side="right")
                * kernel_product("g", ul, u_rest, c, side="left")
                / kernel_product("g", vk, us, c, side="right")
                / kernel_product("g", ul, vs, c, side="left")
            )
            row.append(value)
        rows.append(row)
    return matrix(rows)
