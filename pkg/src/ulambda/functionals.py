"""Coefficient functionals and their catalogued bounds.

Functional families over the first five Taylor coefficients (a1 = 1):

    zalcman(n)         |a_n^2 - a_{2n-1}|
    gen_zalcman(m, n)  |a_m a_n - a_{m+n-1}|
    krushkal(n, p)     |a_n^p - a_2^{p(n-1)}|
    hankel(q, n)       |det [a_{n+i+j}]_{i,j=0..q-1}|

Each catalogued bound carries its validity regime: most hold for every
member, two require the third-coefficient condition
|a3| <= 1 + lambda + lambda^2, and two switch behaviour at a lambda
threshold.  zalcman(3) in particular changes value at LAMBDA_STAR, the
positive root of lambda^2 + lambda - 5/3: above it the maximizing boundary
cubic is increasing and the bound is the corner value lambda (1+lambda)^2;
below it the cubic peaks inside (0, 1) and the bound is the interior-peak
value computed by :func:`zalcman3_interior_bound`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import UnsupportedKind
from .members import MemberSpec, a3_condition_holds, extremal_f_lambda, extremal_hankel3

#: positive root of lambda^2 + lambda - 5/3: where the boundary cubic for
#: zalcman(3) stops being monotone on [0, 1]
LAMBDA_STAR = 0.5 * (math.sqrt(23.0 / 3.0) - 1.0)

#: gen_zalcman(2, 4) has a catalogued bound only from here up
GEN_ZALCMAN24_MIN = math.sqrt(2.0 / 3.0)

BOUND_CHECK_TOL = 1e-9


@dataclass(frozen=True)
class FunctionalKind:
    """One functional instance, e.g. FunctionalKind('zalcman', (3,))."""

    family: str
    indices: tuple[int, ...]

    @property
    def label(self) -> str:
        return f"{self.family}({','.join(str(i) for i in self.indices)})"

    def __str__(self) -> str:
        return self.label


ZALCMAN_2 = FunctionalKind("zalcman", (2,))
ZALCMAN_3 = FunctionalKind("zalcman", (3,))
GEN_ZALCMAN_2_3 = FunctionalKind("gen_zalcman", (2, 3))
GEN_ZALCMAN_2_4 = FunctionalKind("gen_zalcman", (2, 4))
KRUSHKAL_4_1 = FunctionalKind("krushkal", (4, 1))
KRUSHKAL_5_1 = FunctionalKind("krushkal", (5, 1))
HANKEL_2_2 = FunctionalKind("hankel", (2, 2))
HANKEL_3_1 = FunctionalKind("hankel", (3, 1))

#: the kinds with catalogued bounds, in report order
PAPER_KINDS = (
    ZALCMAN_2,
    ZALCMAN_3,
    GEN_ZALCMAN_2_3,
    GEN_ZALCMAN_2_4,
    KRUSHKAL_4_1,
    KRUSHKAL_5_1,
    HANKEL_2_2,
    HANKEL_3_1,
)

_KINDS_BY_LABEL = {k.label: k for k in PAPER_KINDS}


def parse_kind(label: str) -> FunctionalKind:
    try:
        return _KINDS_BY_LABEL[label]
    except KeyError:
        raise UnsupportedKind(label) from None


@dataclass(frozen=True)
class BoundRecord:
    """A catalogued bound with its validity regime and sharpness data."""

    kind: FunctionalKind
    lam: float
    value: float
    valid_iff: str
    sharp: bool
    witness: str | None
    applicable: bool
    regime: str
    requires_a3: bool

    def to_json(self) -> dict:
        return {
            "kind": self.kind.label,
            "lambda": self.lam,
            "value": self.value,
            "valid_iff": self.valid_iff,
            "sharp": self.sharp,
            "witness": self.witness,
            "applicable": self.applicable,
            "regime": self.regime,
            "requires_a3": self.requires_a3,
        }


@dataclass(frozen=True)
class VerificationRow:
    """Outcome of checking one member against one catalogued bound."""

    kind: FunctionalKind
    value: float
    bound: float
    ok: bool | None
    conditional_skipped: bool
    applicable: bool


def eval_functional(kind: FunctionalKind, member: MemberSpec) -> float:
    """Modulus of the functional on a member's coefficients."""
    a = member.coefficient
    if kind.family == "zalcman":
        (n,) = kind.indices
        return abs(a(n) ** 2 - a(2 * n - 1))
    if kind.family == "gen_zalcman":
        mm, nn = kind.indices
        return abs(a(mm) * a(nn) - a(mm + nn - 1))
    if kind.family == "krushkal":
        n, p = kind.indices
        return abs(a(n) ** p - a(2) ** (p * (n - 1)))
    if kind.family == "hankel":
        q, n = kind.indices
        if q == 2:
            return abs(a(n) * a(n + 2) - a(n + 1) ** 2)
        if q == 3:
            return abs(
                a(n) * (a(n + 2) * a(n + 4) - a(n + 3) ** 2)
                - a(n + 1) * (a(n + 1) * a(n + 4) - a(n + 2) * a(n + 3))
                + a(n + 2) * (a(n + 1) * a(n + 3) - a(n + 2) ** 2)
            )
        raise UnsupportedKind(f"hankel order q={q} is not implemented")
    raise UnsupportedKind(kind.label)


def zalcman3_interior_bound(lam: float) -> float:
    """lam ((2/3)(lam^2 + lam + 7/3)^{3/2} - 1 - lam^2).

    Interior-peak value of the zalcman(3) bound below LAMBDA_STAR; the peak
    sits at x0 = sqrt(lam^2 + lam + 7/3) - 1, which reaches x = 1 exactly at
    LAMBDA_STAR, where this expression meets lam (1+lam)^2.
    """
    s = lam * lam + lam + 7.0 / 3.0
    return lam * ((2.0 / 3.0) * s**1.5 - 1.0 - lam * lam)


def bound_for(kind: FunctionalKind, lam: float) -> BoundRecord:
    """The catalogued bound for a functional at the given lambda."""
    if not 0.0 < lam <= 1.0:
        raise ValueError("lambda must lie in (0, 1]")
    q = 1.0 + lam + lam * lam
    if kind == ZALCMAN_2:
        return BoundRecord(kind, lam, lam, "unconditional", True, "catalog-f_lambda", True, "always", False)
    if kind == ZALCMAN_3:
        if lam >= LAMBDA_STAR:
            return BoundRecord(
                kind, lam, lam * (1.0 + lam) ** 2, "a3-condition", True,
                "catalog-f_lambda", True, "corner", True,
            )
        return BoundRecord(
            kind, lam, zalcman3_interior_bound(lam), "a3-condition", False,
            None, True, "interior", True,
        )
    if kind == GEN_ZALCMAN_2_3:
        return BoundRecord(
            kind, lam, lam * (1.0 + lam), "unconditional", True,
            "catalog-f_lambda", True, "always", False,
        )
    if kind == GEN_ZALCMAN_2_4:
        valid = f"a3-condition and lambda >= {GEN_ZALCMAN24_MIN:.6f}"
        if lam >= GEN_ZALCMAN24_MIN:
            return BoundRecord(
                kind, lam, lam * q, valid, True, "catalog-f_lambda", True, "corner", True
            )
        # nothing is asserted below the threshold; value records the
        # above-threshold formula for reference only
        return BoundRecord(kind, lam, lam * q, valid, False, None, False, "silent", True)
    if kind == KRUSHKAL_4_1:
        return BoundRecord(
            kind, lam, 2.0 * lam * (1.0 + lam), "unconditional", True,
            "catalog-f_lambda", True, "always", False,
        )
    if kind == KRUSHKAL_5_1:
        return BoundRecord(
            kind, lam, lam * (3.0 + 5.0 * lam + 3.0 * lam * lam), "a3-condition", True,
            "catalog-f_lambda", True, "always", True,
        )
    if kind == HANKEL_2_2:
        return BoundRecord(
            kind, lam, 0.5 * lam * (1.0 + lam), "unconditional", False,
            None, True, "always", False,
        )
    if kind == HANKEL_3_1:
        return BoundRecord(
            kind, lam, 0.25 * lam * lam, "unconditional", True,
            "catalog-hankel3", True, "always", False,
        )
    raise UnsupportedKind(kind.label)


def witness_member(witness: str, lam: float) -> MemberSpec:
    """Build the catalog member named by a bound record's witness tag."""
    if witness == "catalog-f_lambda":
        return extremal_f_lambda(lam)
    if witness == "catalog-hankel3":
        return extremal_hankel3(lam)
    raise UnsupportedKind(f"no catalog member for witness {witness!r}")


def verify_member_against_bounds(
    member: MemberSpec, tol: float = BOUND_CHECK_TOL
) -> list[VerificationRow]:
    """Check one member against every catalogued bound.

    Bounds requiring the third-coefficient condition are skipped (ok=None)
    when the member fails it; the silent-regime gen_zalcman(2,4) rows carry
    applicable=False and assert nothing.
    """
    passes_a3 = a3_condition_holds(member)
    rows = []
    for kind in PAPER_KINDS:
        rec = bound_for(kind, member.lam)
        value = eval_functional(kind, member)
        skipped = rec.requires_a3 and not passes_a3
        if skipped or not rec.applicable:
            ok = None
        else:
            ok = value <= rec.value + tol
        rows.append(
            VerificationRow(
                kind=kind,
                value=value,
                bound=rec.value,
                ok=ok,
                conditional_skipped=skipped,
                applicable=rec.applicable,
            )
        )
    return rows
