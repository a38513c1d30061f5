"""Hot numeric kernels: circle maxima and region-grid scans.

Two interchangeable implementations exist for each kernel: a tight scalar
loop compiled with numba, and a vectorized pure-numpy fallback.  The
environment variable ULAMBDA_BACKEND selects one:

    auto    use numba when importable, else numpy (default)
    numba   require numba; import fails when it is missing
    numpy   force the fallback

Both paths evaluate in the same operation order, so they agree to
floating-point noise.  ``bench/bench_backends.py`` times one against the
other.
"""

from __future__ import annotations

import os
import warnings

import numpy as np

BACKEND_ENV = "ULAMBDA_BACKEND"


def _pick_backend() -> str:
    choice = os.environ.get(BACKEND_ENV, "auto").strip().lower()
    if choice not in {"auto", "numba", "numpy"}:
        warnings.warn(f"unknown {BACKEND_ENV}={choice!r}; falling back to auto")
        choice = "auto"
    if choice == "numpy":
        return "numpy"
    try:
        import numba  # noqa: F401
    except ImportError:
        if choice == "numba":
            raise ImportError(f"{BACKEND_ENV}=numba but numba is not importable")
        return "numpy"
    return "numba"


BACKEND = _pick_backend()

_circle_cache: dict[tuple[float, int], np.ndarray] = {}


def circle_points(r: float, m: int) -> np.ndarray:
    """m equispaced points r*exp(2*pi*i*j/m), cached per (r, m)."""
    key = (float(r), int(m))
    zs = _circle_cache.get(key)
    if zs is None:
        theta = 2.0 * np.pi * np.arange(int(m)) / int(m)
        zs = float(r) * np.exp(1j * theta)
        zs.setflags(write=False)
        _circle_cache[key] = zs
    return zs


def _max_abs_on_circle_np(coeffs: np.ndarray, zs: np.ndarray, offset: complex) -> float:
    acc = np.full(zs.shape, coeffs[-1])
    for k in range(coeffs.shape[0] - 2, -1, -1):
        acc = acc * zs + coeffs[k]
    return float(np.max(np.abs(acc - offset)))


def _region_scan_np(which: int, lam: float, n: int) -> tuple[float, float, float]:
    q = 1.0 + lam + lam * lam
    steps = np.arange(n) / (n - 1)
    best_v, best_x, best_y = -np.inf, 0.0, 0.0
    for i in range(n):
        x = i / (n - 1)
        ymax = 0.5 * (1.0 - x * x)
        ys = ymax * steps
        common = (1.0 - x * x - 4.0 * ys * ys / (1.0 + x)) / 3.0
        if which == 1:
            v = common + 2.0 * (1.0 + lam) * ys + lam * x * x + q * x
        elif which == 2:
            v = common + (1.0 + lam) * ys + q * x
        else:
            v = common + 2.0 * (1.0 + lam) * ys + 2.0 * lam * x * x + 3.0 * q * x
        j = int(n - 1 - np.argmax(v[::-1]))  # ties -> largest y, as in the loop path
        if (float(v[j]), x, float(ys[j])) > (best_v, best_x, best_y):
            best_v, best_x, best_y = float(v[j]), x, float(ys[j])
    return best_v, best_x, best_y


if BACKEND == "numba":
    from numba import njit

    @njit(cache=True)
    def _max_abs_on_circle_nb(coeffs, zs, offset):  # pragma: no cover - jitted
        best = 0.0
        for idx in range(zs.shape[0]):
            z = zs[idx]
            acc = coeffs[-1]
            for k in range(coeffs.shape[0] - 2, -1, -1):
                acc = acc * z + coeffs[k]
            d = abs(acc - offset)
            if d > best:
                best = d
        return best

    @njit(cache=True)
    def _region_scan_nb(which, lam, n):  # pragma: no cover - jitted
        q = 1.0 + lam + lam * lam
        best_v = -1.0e300
        best_x = 0.0
        best_y = 0.0
        for i in range(n):
            x = i / (n - 1)
            ymax = 0.5 * (1.0 - x * x)
            for j in range(n):
                y = ymax * (j / (n - 1))
                common = (1.0 - x * x - 4.0 * y * y / (1.0 + x)) / 3.0
                if which == 1:
                    v = common + 2.0 * (1.0 + lam) * y + lam * x * x + q * x
                elif which == 2:
                    v = common + (1.0 + lam) * y + q * x
                else:
                    v = common + 2.0 * (1.0 + lam) * y + 2.0 * lam * x * x + 3.0 * q * x
                if v > best_v or (
                    v == best_v and (x > best_x or (x == best_x and y > best_y))
                ):
                    best_v = v
                    best_x = x
                    best_y = y
        return best_v, best_x, best_y


def max_abs_on_circle(coeffs, r: float, m: int, offset: complex = 0.0) -> float:
    """Max of |p(z) - offset| over m equispaced points of the circle |z| = r."""
    c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    zs = circle_points(float(r), int(m))
    off = complex(offset)
    if BACKEND == "numba":
        return float(_max_abs_on_circle_nb(c, zs, off))
    return _max_abs_on_circle_np(c, zs, off)


def region_grid_max(which: int, lam: float, n: int) -> tuple[float, float, float]:
    """Scan the n x n feasible grid of E for the largest g_which value.

    Per x the n y-samples span [0, (1-x^2)/2].  Ties break lexicographically
    toward the larger (value, x, y) tuple, identically on both backends.
    """
    if which not in (1, 2, 3):
        raise ValueError("which must be 1, 2 or 3")
    if n < 2:
        raise ValueError("grid must have at least 2 points per axis")
    if BACKEND == "numba":
        v, x, y = _region_scan_nb(which, float(lam), int(n))
        return float(v), float(x), float(y)
    return _region_scan_np(which, float(lam), int(n))
