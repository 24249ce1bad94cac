"""
solver: the conjugacy decision and search problem.

`solve_conjugacy(x, y)` decides whether x and y are conjugate and, when they
are, produces a verified certificate z with x = z^-1 y z.  The strategy:

  1. Cheap invariants first: the weight homomorphism (lambda), then
     periodicity type, then the (inf, sup, k1, k2) data of the sliding
     circuit representatives — all conjugacy invariants, so any mismatch is a
     sound NotConjugate.
  2. General path: enumerate SC(x) breadth-first, stopping as soon as y's
     circuit representative appears.  SC is a complete invariant: if the full
     set is enumerated without meeting it, the braids are not conjugate.
     When the class has a rigid conjugate this search tests membership by
     rigidity alone and is fast.
  3. Optional pseudo-Anosov powering path (`assume_pa=True`): find the
     smallest i <= 26 making x^i (resp. y^j) conjugate to a rigid braid,
     raise both to s = lcm(i, j), and search the small rigid set
     SC(y-power) instead.  A certificate for the powers plus root uniqueness
     gives a certificate for x and y; the result is verified and, if
     verification fails (the input was not pseudo-Anosov after all), the
     solver silently falls back to the general path, so a wrong answer is
     never returned.

Every Conjugate decision carries a certificate that has been re-verified by
direct conjugation.  A search that outgrows the cap yields Inconclusive
('cap-exceeded') rather than a guess.

Periodicity in this group: x is periodic iff x^3 or x^4 is a delta power
(canonical length 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from bkl4.circuits import CapExceededError, compute_sc
from bkl4.engine import (
    IDENTITY,
    GarsideBraid,
    conjugate,
    invariants,
    invert,
    multiply,
    power,
)
from bkl4.sliding import is_rigid, slide_to_circuit

__all__ = [
    "CONJUGATE",
    "NOT_CONJUGATE",
    "INCONCLUSIVE",
    "MAX_RIGID_POWER",
    "ConjugacyCertificate",
    "SolverDecision",
    "verify_certificate",
    "is_periodic",
    "power_to_rigid",
    "solve_conjugacy",
]

CONJUGATE = "conjugate"
NOT_CONJUGATE = "not-conjugate"
INCONCLUSIVE = "inconclusive"

# Pseudo-Anosov braids here always have a rigid conjugate of some power x^m
# with m below this bound.
MAX_RIGID_POWER = 26


@dataclass(frozen=True, slots=True)
class ConjugacyCertificate:
    """A witness z for conjugacy: x = z^-1 y z."""

    x: GarsideBraid
    y: GarsideBraid
    z: GarsideBraid


def verify_certificate(cert: ConjugacyCertificate) -> bool:
    """Check x = z^-1 y z by direct conjugation."""
    return conjugate(cert.y, cert.z) == cert.x


@dataclass(frozen=True, slots=True)
class SolverDecision:
    """Outcome of solve_conjugacy.

    outcome is 'conjugate' (with a verified certificate), 'not-conjugate'
    (with reason 'lambda-mismatch', 'type-mismatch' or 'disjoint-SC'), or
    'inconclusive' (reason 'cap-exceeded').
    """

    outcome: str
    certificate: ConjugacyCertificate | None = None
    reason: str | None = None


def _conjugate_decision(
    x: GarsideBraid, y: GarsideBraid, z: GarsideBraid
) -> SolverDecision:
    cert = ConjugacyCertificate(x, y, z)
    if not verify_certificate(cert):  # pragma: no cover - internal soundness
        raise AssertionError(f"certificate failed verification: {cert!r}")
    return SolverDecision(CONJUGATE, certificate=cert)


def is_periodic(x: GarsideBraid) -> bool:
    """Whether x is periodic: x^3 or x^4 is a power of delta."""
    return (
        power(x, 3).canonical_length == 0 or power(x, 4).canonical_length == 0
    )


def power_to_rigid(
    x: GarsideBraid, *, max_power: int = MAX_RIGID_POWER
) -> tuple[int, GarsideBraid, GarsideBraid] | None:
    """Smallest i <= max_power with x^i conjugate to a rigid braid.

    Returns (i, z, r) with (x^i)^z = r rigid, or None if no power works
    (x is then not pseudo-Anosov).
    """
    for i in range(1, max_power + 1):
        trajectory = slide_to_circuit(power(x, i))
        if is_rigid(trajectory.representative):
            return i, trajectory.accumulated_conjugator, trajectory.representative
    return None


def _search(
    x: GarsideBraid,
    y: GarsideBraid,
    y_rep: GarsideBraid,
    zy: GarsideBraid,
    cap: int | None,
) -> SolverDecision:
    """General path: hunt y's circuit representative inside SC(x)."""
    try:
        sc = compute_sc(x, cap=cap, stop_at=y_rep)
    except CapExceededError:
        return SolverDecision(INCONCLUSIVE, reason="cap-exceeded")
    g = sc.conjugators.get(y_rep)
    if g is None:
        return SolverDecision(NOT_CONJUGATE, reason="disjoint-SC")
    # x^g = y_rep = y^zy, so x = y^(zy g^-1).
    return _conjugate_decision(x, y, multiply(zy, invert(g)))


def solve_conjugacy(
    x: GarsideBraid,
    y: GarsideBraid,
    *,
    assume_pa: bool = False,
    cap: int | None = None,
) -> SolverDecision:
    """Decide conjugacy of x and y; produce a verified certificate if so."""
    if x == y:
        return _conjugate_decision(x, y, IDENTITY)
    ix, iy = invariants(x), invariants(y)
    if ix.weight != iy.weight:
        return SolverDecision(NOT_CONJUGATE, reason="lambda-mismatch")
    if is_periodic(x) != is_periodic(y):
        return SolverDecision(NOT_CONJUGATE, reason="type-mismatch")
    tx, ty = slide_to_circuit(x), slide_to_circuit(y)
    rx, ry = tx.representative, ty.representative
    irx, iry = invariants(rx), invariants(ry)
    if (irx.inf, irx.sup, irx.k1, irx.k2) != (iry.inf, iry.sup, iry.k1, iry.k2):
        return SolverDecision(NOT_CONJUGATE, reason="type-mismatch")
    if assume_pa and not (is_rigid(rx) and is_rigid(ry)):
        decision = _solve_by_powering(x, y, cap)
        if decision is not None:
            return decision
    return _search(x, y, ry, ty.accumulated_conjugator, cap)


def _solve_by_powering(
    x: GarsideBraid, y: GarsideBraid, cap: int | None
) -> SolverDecision | None:
    """Pseudo-Anosov fast path; None means 'fall back to the general path'."""
    px = power_to_rigid(x)
    py = power_to_rigid(y)
    if px is None or py is None:
        return None
    i, z1, _ = px
    j, z2, _ = py
    s = math.lcm(i, j)
    xs = conjugate(power(x, s), z1)  # rigid: a power of the rigid conjugate
    ys = conjugate(power(y, s), z2)
    try:
        sc = compute_sc(ys, cap=cap, stop_at=xs)
    except CapExceededError:
        return SolverDecision(INCONCLUSIVE, reason="cap-exceeded")
    c = sc.conjugators.get(xs)
    if c is None:
        # x^s and y^s are not conjugate, hence neither are x and y.
        return SolverDecision(NOT_CONJUGATE, reason="disjoint-SC")
    z = multiply(multiply(z2, c), invert(z1))
    assert conjugate(power(y, s), z) == power(x, s)
    cert = ConjugacyCertificate(x, y, z)
    if verify_certificate(cert):
        return SolverDecision(CONJUGATE, certificate=cert)
    # Root uniqueness did not apply (input not pseudo-Anosov): fall back.
    return None
