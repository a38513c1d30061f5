"""Truncated complex power-series arithmetic.

A :class:`PowerSeries` stores Taylor coefficients a0..aN of an analytic
function.  Binary operations truncate to the smaller operand order, and
coefficient k of every result depends only on coefficients 0..k of the
inputs, so recomputing with a larger truncation order never changes the
low-order coefficients of a result.
"""

from __future__ import annotations

import numpy as np

from .errors import NotNormalized, ZeroConstantTerm

#: reciprocal() refuses constant terms smaller than this; anything below
#: would feed garbage coefficients into the membership checks downstream
RECIPROCAL_EPS = 1e-9

#: default truncation order.  Functionals only read indices <= 5; the
#: margin keeps truncation interaction out of repeated products.
DEFAULT_ORDER = 16

_NORMALIZED_TOL = 1e-12


class PowerSeries:
    """Immutable truncated series sum_k coeffs[k] z^k."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs, order: int | None = None):
        arr = np.atleast_1d(np.asarray(coeffs, dtype=np.complex128)).copy()
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coeffs must be a non-empty 1-d sequence")
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            out = np.zeros(order + 1, dtype=np.complex128)
            take = min(arr.size, order + 1)
            out[:take] = arr[:take]
            arr = out
        arr.setflags(write=False)
        self._coeffs = arr

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def order(self) -> int:
        return self._coeffs.size - 1

    def __getitem__(self, k: int) -> complex:
        return complex(self._coeffs[k])

    def __call__(self, z: complex) -> complex:
        return evaluate(self, z)

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(-self._coeffs)

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            return PowerSeries(self._coeffs[: n + 1] + other._coeffs[: n + 1])
        out = self._coeffs.copy()
        out[0] += other
        return PowerSeries(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, PowerSeries) else -complex(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return multiply(self, other)
        return PowerSeries(self._coeffs * complex(other))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        head = np.array2string(self._coeffs[: min(4, self._coeffs.size)], precision=6)
        return f"PowerSeries(order={self.order}, coeffs={head}...)"


def multiply(p: PowerSeries, q: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to min(p.order, q.order)."""
    n = min(p.order, q.order)
    full = np.convolve(p.coeffs, q.coeffs)
    return PowerSeries(full[: n + 1])


def reciprocal(p: PowerSeries, eps: float = RECIPROCAL_EPS) -> PowerSeries:
    """Series r with multiply(p, r) = 1 + O(z^{N+1}).

    Solves the triangular recursion r0 = 1/p0,
    r_k = -(sum_{j=1..k} p_j r_{k-j}) / p0.
    """
    c = p.coeffs
    if abs(c[0]) < eps:
        raise ZeroConstantTerm(f"|constant term| = {abs(c[0]):.3e} is below {eps:.1e}")
    n = p.order
    r = np.zeros(n + 1, dtype=np.complex128)
    r[0] = 1.0 / c[0]
    for k in range(1, n + 1):
        r[k] = -np.dot(c[1 : k + 1], r[k - 1 :: -1]) / c[0]
    return PowerSeries(r)


def derivative(p: PowerSeries) -> PowerSeries:
    """Termwise derivative; order drops by one (constants map to 0)."""
    if p.order == 0:
        return PowerSeries([0.0])
    c = p.coeffs
    return PowerSeries(c[1:] * np.arange(1, c.size))


def evaluate(p: PowerSeries, z: complex) -> complex:
    """Horner evaluation of the truncated polynomial at a point."""
    acc = 0j
    for c in p.coeffs[::-1]:
        acc = acc * z + c
    return complex(acc)


def u_transform(f: PowerSeries) -> PowerSeries:
    """Series of U_f = (z/f)^2 f' for normalized f = z + a2 z^2 + ...

    The result has order f.order - 1.  Its constant term is 1 and its
    z-coefficient vanishes identically for every normalized input (the
    leading contributions of (z/f)^2 and f' cancel).
    """
    c = f.coeffs
    if f.order < 1 or abs(c[0]) > _NORMALIZED_TOL or abs(c[1] - 1.0) > _NORMALIZED_TOL:
        raise NotNormalized("u_transform needs f(0) = 0 and f'(0) = 1")
    f_over_z = PowerSeries(c[1:])
    z_over_f = reciprocal(f_over_z)
    return multiply(multiply(z_over_f, z_over_f), derivative(f))
