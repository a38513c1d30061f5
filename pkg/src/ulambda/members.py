"""Members of the class U(lambda): construction, membership, catalog.

A candidate is assembled from (lambda, a2, w), w a certified Schwarz-type
map, by prescribing the reciprocal of f as the polynomial

    z/f(z) = 1 - a2 z - lambda z w(z),

so f = z / d(z) is rational.  Differentiating the rational form collapses
U_f = (z/f)^2 f' to the polynomial d - z d', i.e.

    U_f(z) - 1 = lambda z^2 w'(z),

so the defining deviation stays below lambda wherever f is analytic.
Analyticity is the real gate: the sampled deviation cannot detect a
denominator zero inside the disk, which is why build_member insists on the
companion-matrix root check before anything else.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

import numpy as np

from ._kernels import max_abs_on_circle
from .errors import DenominatorVanishes, IndexOutOfRange, MembershipFailed
from .schwarz import CoefTriple, SchwarzFn, make_schwarz
from .series import DEFAULT_ORDER, PowerSeries, reciprocal, u_transform

DEFAULT_RADII = (0.5, 0.9, 0.99, 0.999)
DEFAULT_ANGLES = 2048

#: members with sampled margin below this are numerically ambiguous
MARGIN_TOL = 1e-9

#: generated members need every denominator root at modulus >= 1 + this
ROOT_MARGIN = 1e-9

#: catalog members have roots exactly on |z| = 1 (double root at lambda=1,
#: which eigenvalue solvers resolve only to ~1e-8), so their guard is loose
CATALOG_MIN_ROOT = 1.0 - 1e-6

#: reports treat roots this close to |z| = 1 as boundary roots (double-root
#: conditioning caps the achievable resolution near sqrt(eps))
DISK_CLEARANCE_TOL = 1e-6

#: above this radius, polynomial-denominator members are evaluated through
#: the exact rational form d - z d' instead of the truncated series
EXACT_RADIUS = 0.9


@dataclass(frozen=True)
class MembershipReport:
    """Sampled verdict on |U_f - 1| < lambda."""

    max_dev: float
    margin: float
    denom_ok: bool
    radii: tuple
    angles: int
    clearance: float

    @property
    def accepted(self) -> bool:
        return self.denom_ok and self.margin > MARGIN_TOL


@dataclass(frozen=True, eq=False)
class MemberSpec:
    """A verified member with its derived series and coefficients a2..a5."""

    lam: float
    a2: complex
    schwarz: SchwarzFn
    f: PowerSeries
    a3: complex
    a4: complex
    a5: complex
    provenance: str
    report: MembershipReport

    def coefficient(self, n: int) -> complex:
        """Taylor coefficient a_n, 1 <= n <= 5 (a1 = 1)."""
        if n == 1:
            return 1.0 + 0.0j
        if n == 2:
            return self.a2
        if n == 3:
            return self.a3
        if n == 4:
            return self.a4
        if n == 5:
            return self.a5
        raise IndexOutOfRange(f"coefficient a_{n} is outside the computed range a1..a5")


def denominator_coeffs(lam: float, a2: complex, w: SchwarzFn) -> np.ndarray:
    """Polynomial 1 - a2 z - lambda z w(z), lowest order first."""
    om = w.omega1
    d = np.zeros(om.size + 1, dtype=np.complex128)
    d[0] = 1.0
    d[1] = -a2
    d[2:] = -lam * om[1:]
    return d


def root_clearance(poly) -> float:
    """Smallest root modulus of a polynomial (lowest order first).

    Roots come from the companion-matrix eigenvalues; a constant polynomial
    has clearance +inf.
    """
    c = np.atleast_1d(np.asarray(poly, dtype=np.complex128))
    nz = np.nonzero(c)[0]
    if nz.size == 0 or nz[-1] == 0:
        return float("inf")
    roots = np.roots(c[nz[-1] :: -1])
    return float(np.min(np.abs(roots)))


def check_membership(
    f: PowerSeries,
    lam: float,
    radii=None,
    angles: int = DEFAULT_ANGLES,
    denom=None,
    clearance: float | None = None,
) -> MembershipReport:
    """Sample |U_f - 1| on circles and report the deviation and margin.

    When the denominator polynomial of f is supplied, radii above
    EXACT_RADIUS are evaluated through the exact form U_f = d - z d';
    smaller radii use the truncated series.  denom_ok records whether the
    denominator stays root-free in the open disk.
    """
    radii = tuple(DEFAULT_RADII if radii is None else radii)
    u = u_transform(f)
    if denom is not None:
        d = np.atleast_1d(np.asarray(denom, dtype=np.complex128))
        u_exact = (1.0 - np.arange(d.size)) * d  # coefficients of d - z d'
        if clearance is None:
            clearance = root_clearance(d)
        denom_ok = clearance >= 1.0 - DISK_CLEARANCE_TOL
    else:
        u_exact = None
        clearance = float("inf")
        denom_ok = True
    max_dev = 0.0
    for r in radii:
        if u_exact is not None and r > EXACT_RADIUS:
            dev = max_abs_on_circle(u_exact, r, angles, offset=1.0)
        else:
            dev = max_abs_on_circle(u.coeffs, r, angles, offset=1.0)
        if dev > max_dev:
            max_dev = dev
    return MembershipReport(
        max_dev=max_dev,
        margin=lam - max_dev,
        denom_ok=denom_ok,
        radii=radii,
        angles=angles,
        clearance=float(clearance),
    )


def coefficients_from_schwarz(
    lam: float, a2: complex, t: CoefTriple
) -> tuple[complex, complex, complex]:
    """Taylor coefficients a3, a4, a5 induced by (lambda, a2, c1, c2, c3).

    These are the closed forms obtained by equating coefficients in
    z = (1 - a2 z - lambda z w(z)) f(z); build_member cross-checks them
    against the series inversion on every construction.
    """
    c1, c2, c3 = t.c1, t.c2, t.c3
    a3 = lam * c1 + a2**2
    a4 = lam * c2 + 2 * lam * a2 * c1 + a2**3
    a5 = lam * c3 + 2 * lam * a2 * c2 + lam**2 * c1**2 + 3 * lam * a2**2 * c1 + a2**4
    return complex(a3), complex(a4), complex(a5)


def build_member(
    lam: float,
    a2: complex,
    w: SchwarzFn,
    *,
    order: int = DEFAULT_ORDER,
    radii=None,
    angles: int = DEFAULT_ANGLES,
    min_root_modulus: float = 1.0 + ROOT_MARGIN,
    provenance: str = "generated",
) -> MemberSpec:
    """Assemble and verify a member from (lambda, a2, w).

    Raises DenominatorVanishes when a root of 1 - a2 z - lambda z w(z)
    falls below min_root_modulus, and MembershipFailed when the sampled
    deviation leaves less than MARGIN_TOL of margin below lambda.
    """
    if not 0.0 < lam <= 1.0:
        raise ValueError("lambda must lie in (0, 1]")
    if order < 8:
        raise ValueError("order must be >= 8 so a5 carries guard terms")
    a2 = complex(a2)
    d = denominator_coeffs(lam, a2, w)
    clearance = root_clearance(d)
    if clearance < min_root_modulus:
        raise DenominatorVanishes(
            f"denominator root at modulus {clearance:.9f} < {min_root_modulus:.9f}"
        )
    rec = reciprocal(PowerSeries(d, order=order - 1))
    f = PowerSeries(np.concatenate(([0.0 + 0.0j], rec.coeffs)))
    report = check_membership(f, lam, radii, angles, denom=d, clearance=clearance)
    if not report.accepted:
        raise MembershipFailed(
            f"sampled margin {report.margin:.3e} at lambda={lam} (max_dev={report.max_dev:.6f})"
        )
    if abs(a2) > 1.0 + lam + 1e-10:
        # unreachable: such a denominator always has a root in the disk
        raise MembershipFailed(f"|a2| = {abs(a2):.6f} exceeds 1 + lambda")
    a3, a4, a5 = f[3], f[4], f[5]
    if abs(f[2] - a2) > 1e-12:
        raise AssertionError("series inversion lost the prescribed a2")
    a3f, a4f, a5f = coefficients_from_schwarz(lam, a2, w.triple())
    drift = max(abs(a3 - a3f), abs(a4 - a4f), abs(a5 - a5f))
    if drift > 1e-12:
        raise AssertionError(f"coefficient formulas disagree with inversion by {drift:.3e}")
    return MemberSpec(
        lam=float(lam),
        a2=a2,
        schwarz=w,
        f=f,
        a3=a3,
        a4=a4,
        a5=a5,
        provenance=provenance,
        report=report,
    )


def a3_condition_holds(m: MemberSpec) -> bool:
    """Whether |a3| <= 1 + lambda + lambda^2 (gates the conditional bounds)."""
    return abs(m.a3) <= 1.0 + m.lam + m.lam**2 + 1e-10


# ---------------------------------------------------------------------------
# extremal catalog
# ---------------------------------------------------------------------------


def f_lambda_coefficient(lam: float, n: int) -> float:
    """Closed-form a_n of z/((1-z)(1-lam z)): (1 - lam^n)/(1 - lam), or n at
    lam = 1 (removable singularity, branch at |1 - lam| < 1e-12)."""
    if abs(1.0 - lam) < 1e-12:
        return float(n)
    return float((1.0 - lam**n) / (1.0 - lam))


def extremal_f_lambda(lam: float) -> MemberSpec:
    """z/((1-z)(1-lam z)); attains |a2| = 1 + lam and the sharp bounds.

    Its map has w(z) = -z (so psi = -1): expanding (1-z)(1-lam z) gives
    a2 = 1 + lam and lambda z w(z) = -lam z^2.
    """
    return build_member(
        lam,
        1.0 + lam,
        make_schwarz([-1.0]),
        min_root_modulus=CATALOG_MIN_ROOT,
        provenance="catalog-f_lambda",
    )


def extremal_rotation(lam: float, phi: float) -> MemberSpec:
    """e^{-i phi} f_lambda(e^{i phi} z) = z/(1 - (1+lam)e^{i phi} z + lam e^{2i phi} z^2)."""
    rot = np.exp(1j * phi)
    return build_member(
        lam,
        (1.0 + lam) * rot,
        make_schwarz([-rot * rot]),
        min_root_modulus=CATALOG_MIN_ROOT,
        provenance="catalog-rotation",
    )


def extremal_hankel3(lam: float) -> MemberSpec:
    """z/(1 - (lam/2) z^3): a2 = a3 = a5 = 0 and a4 = lam/2.

    Generated by w(z) = z^2/2 (psi = z); the third-order Hankel bound is
    attained on this member.
    """
    return build_member(
        lam,
        0.0,
        make_schwarz([0.0, 1.0]),
        min_root_modulus=CATALOG_MIN_ROOT,
        provenance="catalog-hankel3",
    )


def rotate_member(m: MemberSpec, phi: float) -> MemberSpec:
    """Member of e^{-i phi} f(e^{i phi} z); a_n picks up the phase e^{i(n-1)phi}.

    Parameters transform as a2 -> a2 e^{i phi} and psi_k -> psi_k e^{i(k+2)phi},
    which leaves |psi| on the boundary unchanged.
    """
    rot = np.exp(1j * phi)
    psi = m.schwarz.psi * rot ** (np.arange(m.schwarz.psi.size) + 2)
    guard = CATALOG_MIN_ROOT if m.provenance.startswith("catalog") else 1.0 + ROOT_MARGIN
    return build_member(
        m.lam,
        m.a2 * rot,
        make_schwarz(psi),
        order=m.f.order,
        radii=m.report.radii,
        angles=m.report.angles,
        min_root_modulus=guard,
        provenance=m.provenance,
    )


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def member_to_json(m: MemberSpec) -> dict:
    """Canonical serialized form {lambda, a2, psi_coeffs, provenance}."""
    return {
        "lambda": m.lam,
        "a2": [m.a2.real, m.a2.imag],
        "psi_coeffs": [[c.real, c.imag] for c in m.schwarz.psi],
        "provenance": m.provenance,
    }


def member_hash(m: MemberSpec) -> str:
    """Content hash of the serialized form; reports cite members by it."""
    blob = json.dumps(member_to_json(m), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def member_from_json(
    obj: dict,
    order: int = DEFAULT_ORDER,
    radii=None,
    angles: int = DEFAULT_ANGLES,
) -> MemberSpec:
    """Rebuild (and re-verify) a member from its serialized form."""
    provenance = obj["provenance"]
    w = make_schwarz([complex(re, im) for re, im in obj["psi_coeffs"]])
    guard = CATALOG_MIN_ROOT if provenance.startswith("catalog") else 1.0 + ROOT_MARGIN
    return build_member(
        obj["lambda"],
        complex(obj["a2"][0], obj["a2"][1]),
        w,
        order=order,
        radii=radii,
        angles=angles,
        min_root_modulus=guard,
        provenance=provenance,
    )
