"""Schwarz-type disk maps and their admissible leading coefficients.

The maps handled here vanish at the origin and have derivative bounded by
one in modulus on the unit disk; integrating the derivative along radii
gives |w(z)| <= |z|.  Each map is represented by the polynomial psi = w',
the map itself being the termwise antiderivative (c_k = psi_{k-1} / k).

Certification samples |psi| on a dense grid of the unit circle.  By the
maximum modulus principle the boundary maximum dominates the disk, and for
the low-degree polynomials used here 4096 samples keep the gap between
sampled and true maximum orders of magnitude below the tolerances used
downstream.

The admissible region for the leading map coefficients (c1, c2, c3) is

    |c1| <= 1,
    |c2| <= (1 - |c1|^2) / 2,
    |c3| <= (1 - |c1|^2 - 4|c2|^2/(1 + |c1|)) / 3,

which is exactly the classical coefficient body of a disk function bounded
by one, applied to psi (whose coefficients are c1, 2c2, 3c3, ...).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import max_abs_on_circle
from .errors import NormExceeded

#: boundary samples used by certification
CERT_POINTS = 4096

#: slack on the certified sup so exact extremal maps (sup = 1) pass
CERT_TOL = 1e-12

#: default maximal degree of psi drawn by the sampler
DEFAULT_PSI_DEGREE = 4


@dataclass(frozen=True)
class CoefTriple:
    """Leading map coefficients (c1, c2, c3)."""

    c1: complex
    c2: complex
    c3: complex


@dataclass(frozen=True, eq=False)
class SchwarzFn:
    """A certified map, stored through psi = w' and its antiderivative."""

    psi: np.ndarray
    omega1: np.ndarray
    sup_psi: float

    @property
    def degree(self) -> int:
        return self.psi.size - 1

    def psi_at(self, z: complex) -> complex:
        acc = 0j
        for c in self.psi[::-1]:
            acc = acc * z + c
        return complex(acc)

    def omega1_at(self, z: complex) -> complex:
        acc = 0j
        for c in self.omega1[::-1]:
            acc = acc * z + c
        return complex(acc)

    def triple(self) -> CoefTriple:
        c = np.zeros(4, dtype=np.complex128)
        take = min(4, self.omega1.size)
        c[:take] = self.omega1[:take]
        return CoefTriple(complex(c[1]), complex(c[2]), complex(c[3]))


def sup_norm_on_circle(coeffs, r: float = 1.0, m: int = CERT_POINTS) -> float:
    """Max of |p(r e^{i t})| over m equispaced angles (m >= 256).

    For polynomials the circle maximum is nondecreasing in r, so r = 1
    bounds the whole disk.
    """
    if m < 256:
        raise ValueError("m must be >= 256")
    if not 0.0 < r <= 1.0:
        raise ValueError("r must lie in (0, 1]")
    return max_abs_on_circle(np.atleast_1d(np.asarray(coeffs, dtype=np.complex128)), r, m)


def make_schwarz(psi_coeffs, m: int = CERT_POINTS) -> SchwarzFn:
    """Certify psi and assemble the map it generates.

    Raises NormExceeded when the sampled boundary sup of |psi| exceeds
    1 + 1e-12.
    """
    psi = np.atleast_1d(np.asarray(psi_coeffs, dtype=np.complex128)).copy()
    sup = sup_norm_on_circle(psi, 1.0, m)
    if sup > 1.0 + CERT_TOL:
        raise NormExceeded(f"sup |psi| = {sup:.12f} on the boundary circle")
    omega1 = np.concatenate(([0.0 + 0.0j], psi / np.arange(1, psi.size + 1)))
    psi.setflags(write=False)
    omega1.setflags(write=False)
    return SchwarzFn(psi=psi, omega1=omega1, sup_psi=sup)


def is_admissible_triple(t: CoefTriple, tol: float = 0.0) -> bool:
    """Whether (c1, c2, c3) lies in the admissible coefficient body."""
    x = abs(t.c1)
    if x > 1.0 + tol:
        return False
    if abs(t.c2) > 0.5 * (1.0 - x * x) + tol:
        return False
    bracket = (1.0 - x * x - 4.0 * abs(t.c2) ** 2 / (1.0 + x)) / 3.0
    if bracket < 0.0:  # negative only through rounding once c2 passed
        bracket = 0.0
    return abs(t.c3) <= bracket + tol


def sample_triple(rng: np.random.Generator) -> CoefTriple:
    """Draw an admissible triple: moduli uniform in their allowed intervals
    conditionally on the earlier coordinates, phases uniform.

    The draw order (|c1|, arg c1, |c2|, arg c2, |c3|, arg c3) is fixed so a
    seeded generator reproduces the triple exactly.
    """
    x = rng.random()
    c1 = x * np.exp(2j * np.pi * rng.random())
    y = 0.5 * (1.0 - x * x) * rng.random()
    c2 = y * np.exp(2j * np.pi * rng.random())
    bracket = max(0.0, (1.0 - x * x - 4.0 * y * y / (1.0 + x)) / 3.0)
    c3 = bracket * rng.random() * np.exp(2j * np.pi * rng.random())
    return CoefTriple(complex(c1), complex(c2), complex(c3))


def sample_schwarz(
    rng: np.random.Generator, max_degree: int = DEFAULT_PSI_DEGREE
) -> SchwarzFn:
    """Draw a certified map: random polynomial psi rescaled so its sampled
    boundary sup lands strictly inside (0, 1)."""
    deg = int(rng.integers(0, max_degree + 1))
    raw = rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)
    sup = sup_norm_on_circle(raw)
    target = 0.05 + 0.949 * rng.random()
    return make_schwarz(raw * (target / sup))
