"""Elementary rational functions and spectral-parameter bookkeeping.

The four two-variable kernels

    g(u, v) = c/(u-v)            f(u, v) = (u-v+c)/(u-v)
    h(u, v) = (u-v+c)/c          htilde(u, v) = (u-v-c)/c

satisfy f = g + 1 = g*h, and f(u, v) = g(v, u)*htilde(v, u).  Products over
sets follow the convention that an empty product is 1.  All functions are
generic over the scalar field (exact Gaussian rationals or complex floats).
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import GaussianRational, one_like

__all__ = [
    "SingularPairError",
    "GenericityError",
    "g",
    "f",
    "h",
    "htilde",
    "kernel",
    "kernel_product",
    "kernel_pair_product",
    "lambda1",
    "lambda2",
    "pairing",
    "sigma_y_pairing",
    "vandermonde",
    "ParamSet",
]


class SingularPairError(ZeroDivisionError):
    """A kernel was evaluated at a pole; carries the offending pair."""

    def __init__(self, kind, u, v):
        self.kind = kind
        self.pair = (u, v)
        super().__init__(f"{kind}({u}, {v}) is singular: arguments coincide")


class GenericityError(ValueError):
    """Input violates a pairwise-distinctness or non-coincidence requirement."""


def _check_c(c):
    if not c:
        raise ZeroDivisionError("crossing parameter c must be nonzero")


def g(u, v, c):
    _check_c(c)
    diff = u - v
    if not diff:
        raise SingularPairError("g", u, v)
    return c / diff


def f(u, v, c):
    _check_c(c)
    diff = u - v
    if not diff:
        raise SingularPairError("f", u, v)
    return (diff + c) / diff


def h(u, v, c):
    _check_c(c)
    return (u - v + c) / c


def htilde(u, v, c):
    _check_c(c)
    return (u - v - c) / c


_KERNELS = {"g": g, "f": f, "h": h, "htilde": htilde}


def kernel(kind: str, u, v, c):
    """Evaluate one of the four kernels by name."""
    try:
        fn = _KERNELS[kind]
    except KeyError:
        raise ValueError(f"unknown kernel kind {kind!r}") from None
    return fn(u, v, c)


def kernel_product(kind: str, z, values, c, side: str = "left"):
    """Product of kernel(z, x) (side='left') or kernel(x, z) (side='right') over x in values."""
    fn = _KERNELS[kind]
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    result = one_like(c)
    for x in values:
        result = result * (fn(z, x, c) if side == "left" else fn(x, z, c))
    return result


def kernel_pair_product(kind: str, xs, ys, c):
    """Double product of kernel(x, y) over x in xs, y in ys."""
    fn = _KERNELS[kind]
    result = one_like(c)
    for x in xs:
        for y in ys:
            result = result * fn(x, y, c)
    return result


def lambda1(u, params: "ParamSet"):
    """Weight h(u, v) multiplied over all column inhomogeneities."""
    return kernel_product("h", u, params.v_list, params.c)


def lambda2(u, params: "ParamSet"):
    """Weight: product of (u - v_j)/c over all column inhomogeneities."""
    result = one_like(params.c)
    for v in params.v_list:
        diff = u - v
        if not diff:
            raise SingularPairError("lambda2", u, v)
        result = result * (diff / params.c)
    return result


def pairing(x, y):
    """Bilinear pairing <x|y> = x1*y1 + x2*y2 of two 2-vectors (no conjugation)."""
    return x[0] * y[0] + x[1] * y[1]


def sigma_y_pairing(x, y):
    """Bilinear bracket <x|sigma_y|y> = i*(x2*y1 - x1*y2)."""
    value = x[1] * y[0] - x[0] * y[1]
    if isinstance(value, GaussianRational):
        return GaussianRational(-value.im, value.re)
    return 1j * value


def vandermonde(values, c, primed: bool = False):
    """Vandermonde-type product of (u_i - u_j)/c over i<j (primed: i>j)."""
    values = list(values)
    result = one_like(c)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            diff = values[i] - values[j] if not primed else values[j] - values[i]
            if not diff:
                raise GenericityError(
                    f"vandermonde requires distinct entries; positions {i} and {j} coincide"
                )
            result = result * (diff / c)
    return result


@dataclass(frozen=True)
class ParamSet:
    """Spectral data: row inhomogeneities u, column inhomogeneities v, crossing c.

    In generic mode (the default) the u's are pairwise distinct, the v's are
    pairwise distinct, and no u coincides with a v, so that lambda2 and all
    Cauchy-type kernels stay finite.  Pass generic=False for deliberately
    degenerate experiments; the contraction-based partition functions remain
    well defined there.
    """

    u_list: tuple
    v_list: tuple
    c: object
    generic: bool = True

    def __post_init__(self):
        object.__setattr__(self, "u_list", tuple(self.u_list))
        object.__setattr__(self, "v_list", tuple(self.v_list))
        if not self.c:
            raise ZeroDivisionError("crossing parameter c must be nonzero")
        if self.generic:
            self._check_generic()

    def _check_generic(self):
        for name, values in (("u", self.u_list), ("v", self.v_list)):
            for i in range(len(values)):
                for j in range(i + 1, len(values)):
                    if values[i] == values[j]:
                        raise GenericityError(
                            f"{name}[{i}] equals {name}[{j}] = {values[i]}"
                        )
        for i, u in enumerate(self.u_list):
            for j, v in enumerate(self.v_list):
                if u == v:
                    raise GenericityError(
                        f"u[{i}] equals v[{j}] = {u}: lambda2 and the Cauchy "
                        "kernel g(u,v) are singular there"
                    )

    @property
    def m(self) -> int:
        return len(self.u_list)

    @property
    def n(self) -> int:
        return len(self.v_list)

    @property
    def is_exact(self) -> bool:
        return isinstance(self.c, GaussianRational)

    def as_float(self) -> "ParamSet":
        return ParamSet(
            [complex(u) for u in self.u_list],
            [complex(v) for v in self.v_list],
            complex(self.c),
            generic=self.generic,
        )

    def drop_u(self, index: int) -> "ParamSet":
        rest = self.u_list[:index] + self.u_list[index + 1:]
        return ParamSet(rest, self.v_list, self.c, generic=self.generic)

    def drop_v(self, index: int) -> "ParamSet":
        rest = self.v_list[:index] + self.v_list[index + 1:]
        return ParamSet(self.u_list, rest, self.c, generic=self.generic)

    def with_u(self, u_list) -> "ParamSet":
        return ParamSet(u_list, self.v_list, self.c, generic=self.generic)
