"""Rational six-vertex R-matrix, monodromy matrices and brute-force partition sums.

Tensor conventions, fixed once for the whole package:

* Kronecker products put the first factor on the slow (most significant)
  index; slot 0 of an N-slot state is the most significant bit.
* The row monodromy acts on V_a (x) site_1 (x) ... (x) site_n with the
  auxiliary space as slot 0 and site 1 the slowest quantum site.
* The column monodromy acts on site_1 (x) ... (x) site_m (x) V_b with the
  auxiliary space as the last (fastest) slot.

The equality of the twisted-trace and expectation-value partition functions
is the canary test for these orderings.

Operators are materialized as full dense 2^n x 2^n matrices; exact mode
refuses more than EXACT_SITE_CEILING sites.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import GaussianRational, one_like, zero_like
from .kernels import ParamSet
from .linalg import det, identity, kron_power, matrix, zeros

__all__ = [
    "EXACT_SITE_CEILING",
    "LatticeSpec",
    "r_matrix",
    "apply_r_gate",
    "monodromy_row",
    "monodromy_col",
    "t_block",
    "t_block_col",
    "sandwich_row",
    "sandwich_col",
    "transfer_row",
    "transfer_col",
    "twisted_operator",
    "zmatrix",
    "partition_trace",
    "partition_expectation",
    "state_power",
    "b_leading_coefficient",
]

EXACT_SITE_CEILING = 12


def _check_ceiling(nsites: int, sample) -> None:
    if isinstance(sample, GaussianRational) and nsites > EXACT_SITE_CEILING:
        raise ValueError(
            f"{nsites} sites exceed the exact-mode ceiling of {EXACT_SITE_CEILING}; "
            "use float mode for larger lattices"
        )


def _weights(u, v, c):
    """Diagonal weights of the R-matrix: a = (u-v+c)/c on aligned states, b = (u-v)/c."""
    diff = u - v
    return (diff + c) / c, diff / c


def r_matrix(u, v, c) -> np.ndarray:
    """The 4x4 six-vertex R-matrix ((u-v)/c)*I + P on a pair of 2-state edges."""
    if not c:
        raise ZeroDivisionError("crossing parameter c must be nonzero")
    aw, bw = _weights(u, v, c)
    one = one_like(c)
    zero = zero_like(c)
    return matrix(
        [
            [aw, zero, zero, zero],
            [zero, bw, one, zero],
            [zero, one, bw, zero],
            [zero, zero, zero, aw],
        ]
    )


def apply_r_gate(states: np.ndarray, aw, bw, slot1: int, slot2: int, nslots: int) -> np.ndarray:
    """Left-multiply by the six-vertex gate acting on (slot1, slot2), in place.

    ``states`` is a vector or matrix whose row index runs over the
    2**nslots basis states.  The gate has diagonal (aw, bw, bw, aw) and
    swap amplitude 1 between the mixed states.
    """
    mask1 = 1 << (nslots - 1 - slot1)
    mask2 = 1 << (nslots - 1 - slot2)
    ks = np.arange(1 << nslots)
    base = ks[(ks & (mask1 | mask2)) == 0]
    i01 = base | mask2
    i10 = base | mask1
    i11 = i01 | mask1
    x01 = states[i01]
    x10 = states[i10]
    states[base] = aw * states[base]
    states[i11] = aw * states[i11]
    states[i01] = bw * x01 + x10
    states[i10] = x01 + bw * x10
    return states


def monodromy_row(u, params: ParamSet) -> np.ndarray:
    """Ordered product of R-matrices along one row: acts on V_a (x) (C^2)^n."""
    n = params.n
    _check_ceiling(n, params.c)
    m = identity(1 << (n + 1), params.c)
    for j in range(n, 0, -1):
        aw, bw = _weights(u, params.v_list[j - 1], params.c)
        apply_r_gate(m, aw, bw, 0, j, n + 1)
    return m


def monodromy_col(v, params: ParamSet) -> np.ndarray:
    """Ordered product of R-matrices along one column: acts on (C^2)^m (x) V_b."""
    m_rows = params.m
    _check_ceiling(m_rows, params.c)
    m = identity(1 << (m_rows + 1), params.c)
    for i in range(m_rows, 0, -1):
        aw, bw = _weights(params.u_list[i - 1], v, params.c)
        apply_r_gate(m, aw, bw, i - 1, m_rows, m_rows + 1)
    return m


def t_block(mono: np.ndarray, i: int, j: int) -> np.ndarray:
    """Auxiliary-space block (i, j) of a row monodromy, 0-indexed.

    t_block(T, 0, 1) is the operator usually written t_{12}(u).
    """
    d = mono.shape[0] // 2
    return mono[i * d:(i + 1) * d, j * d:(j + 1) * d]


def t_block_col(mono: np.ndarray, i: int, j: int) -> np.ndarray:
    """Auxiliary-space block (i, j) of a column monodromy (aux slot is fastest)."""
    return mono[i::2, j::2]


def sandwich_row(row_vec, col_vec, u, params: ParamSet) -> np.ndarray:
    """<row|T_a(u)|col> over the auxiliary space: a 2^n x 2^n operator.

    Equals sum_ij row_i col_j t_ij(u); computed by streaming the R-gates
    through the boundary vectors rather than slicing a materialized T.
    """
    n = params.n
    _check_ceiling(n, params.c)
    d = 1 << n
    m = zeros((2 * d, d), params.c)
    for q in range(d):
        m[q, q] = col_vec[0]
        m[d + q, q] = col_vec[1]
    for j in range(n, 0, -1):
        aw, bw = _weights(u, params.v_list[j - 1], params.c)
        apply_r_gate(m, aw, bw, 0, j, n + 1)
    return row_vec[0] * m[0:d] + row_vec[1] * m[d:2 * d]


def sandwich_col(row_vec, col_vec, v, params: ParamSet) -> np.ndarray:
    """<row|That_b(v)|col> over the auxiliary space: a 2^m x 2^m operator."""
    m_rows = params.m
    _check_ceiling(m_rows, params.c)
    d = 1 << m_rows
    m = zeros((2 * d, d), params.c)
    for q in range(d):
        m[2 * q, q] = col_vec[0]
        m[2 * q + 1, q] = col_vec[1]
    for i in range(m_rows, 0, -1):
        aw, bw = _weights(params.u_list[i - 1], v, params.c)
        apply_r_gate(m, aw, bw, i - 1, m_rows, m_rows + 1)
    return row_vec[0] * m[0::2] + row_vec[1] * m[1::2]


def transfer_row(twist: np.ndarray, u, params: ParamSet) -> np.ndarray:
    """tr_a(X_a T_a(u)) for an arbitrary 2x2 twist X."""
    first = sandwich_row(twist[0, :], (one_like(params.c), zero_like(params.c)), u, params)
    second = sandwich_row(twist[1, :], (zero_like(params.c), one_like(params.c)), u, params)
    return first + second


def transfer_col(twist: np.ndarray, v, params: ParamSet) -> np.ndarray:
    """tr_b(X_b That_b(v)) for an arbitrary 2x2 twist X."""
    first = sandwich_col(twist[0, :], (one_like(params.c), zero_like(params.c)), v, params)
    second = sandwich_col(twist[1, :], (zero_like(params.c), one_like(params.c)), v, params)
    return first + second


def twisted_operator(kind: str, spectral, params: ParamSet, boundary) -> np.ndarray:
    """One of the rank-1 twisted operators B, Bhat, A, D as a dense matrix.

    B(u)    = <w|T(u)|e>      on the 2^n column space,
    Bhat(v) = <s|That(v)|n>   on the 2^m row space,
    A(u)    = <w|T(u)|a>,
    D(u)    = <d_tilde|T(u)|e>.
    """
    if kind == "B":
        return sandwich_row(boundary.w, boundary.e, spectral, params)
    if kind == "Bhat":
        return sandwich_col(boundary.s, boundary.n, spectral, params)
    if kind == "A":
        return sandwich_row(boundary.w, boundary.a, spectral, params)
    if kind == "D":
        return sandwich_row(boundary.d_tilde, boundary.e, spectral, params)
    raise ValueError(f"unknown operator kind {kind!r}")


@dataclass(frozen=True)
class LatticeSpec:
    """Lattice data: spectral parameters plus the two 2x2 twist matrices."""

    params: ParamSet
    twist_row: np.ndarray
    twist_col: np.ndarray
    rank1: bool = False

    def __post_init__(self):
        for name, twist in (("twist_row", self.twist_row), ("twist_col", self.twist_col)):
            if twist.shape != (2, 2):
                raise ValueError(f"{name} must be 2x2, got {twist.shape}")
            if self.rank1 and det(twist, one=one_like(self.params.c)):
                raise ValueError(f"rank-1 claimed but det({name}) != 0")

    @classmethod
    def from_boundary(cls, params: ParamSet, boundary) -> "LatticeSpec":
        return cls(params, boundary.twist_row(), boundary.twist_col(), rank1=True)


def partition_trace(spec: LatticeSpec):
    """Twisted-trace partition function: tr over columns of (twist_col)^(x)n times B(u_1)...B(u_m)."""
    params = spec.params
    n = params.n
    _check_ceiling(n, params.c)
    product = identity(1 << n, params.c)
    for u in params.u_list:
        product = transfer_row(spec.twist_row, u, params) @ product
    twist_power = kron_power(spec.twist_col, n, sample=params.c)
    return (twist_power * product.T).sum()


def state_power(vec2, count: int, sample) -> np.ndarray:
    """count-fold tensor power of a 2-vector; the empty power is the length-1 unit."""
    base = zeros((2,), sample)
    base[0], base[1] = vec2[0], vec2[1]
    return kron_power(base, count, sample=sample)


def partition_expectation(params: ParamSet, boundary, direction: str = "row"):
    """Partition function as a compass-state expectation value.

    direction='row':  <S| B(u_1)...B(u_m) |N> on the 2^n column space.
    direction='col':  <W| Bhat(v_1)...Bhat(v_n) |E> on the 2^m row space.
    Both twists are rank 1 by construction; the result equals
    partition_trace exactly.
    """
    c = params.c
    if direction == "row":
        _check_ceiling(params.n, c)
        state = state_power(boundary.n, params.n, c)
        for u in params.u_list:
            state = twisted_operator("B", u, params, boundary) @ state
        return state_power(boundary.s, params.n, c) @ state
    if direction == "col":
        _check_ceiling(params.m, c)
        state = state_power(boundary.e, params.m, c)
        for v in params.v_list:
            state = twisted_operator("Bhat", v, params, boundary) @ state
        return state_power(boundary.w, params.m, c) @ state
    raise ValueError(f"unknown direction {direction!r}")


def zmatrix(params: ParamSet, row_slots=None, col_slots=None) -> np.ndarray:
    """The full vertex-product operator on all m + n edges (rows first, then columns).

    ``row_slots`` / ``col_slots`` optionally permute which tensor slot carries
    which row/column, which is what the exchange-relation checks need.
    """
    m_rows, n_cols = params.m, params.n
    _check_ceiling(m_rows + n_cols, params.c)
    row_slots = list(range(m_rows)) if row_slots is None else list(row_slots)
    col_slots = list(range(n_cols)) if col_slots is None else list(col_slots)
    nslots = m_rows + n_cols
    op = identity(1 << nslots, params.c)
    pairs = [(i, j) for i in range(m_rows) for j in range(n_cols)]
    for i, j in reversed(pairs):
        aw, bw = _weights(params.u_list[i], params.v_list[j], params.c)
        apply_r_gate(op, aw, bw, row_slots[i], m_rows + col_slots[j], nslots)
    return op


def b_leading_coefficient(params: ParamSet, boundary, kind: str = "B") -> np.ndarray:
    """Exact leading u-coefficient of the degree-n operator polynomial B(u).

    Evaluates the operator at n+1 distinct rational points and reads the top
    coefficient off the Lagrange form; no symbolic engine involved.
    """
    n = params.n
    one = one_like(params.c)
    points = [one * k for k in range(n + 1)]
    top = None
    for k, x in enumerate(points):
        weight = one
        for l, y in enumerate(points):
            if l != k:
                weight = weight * (x - y)
        term = twisted_operator(kind, x, params, boundary) / weight
        top = term if top is None else top + term
    return top
