"""Tests for the conjugacy decision and search solver."""

from __future__ import annotations

import random

from bkl4.engine import (
    IDENTITY,
    GarsideBraid,
    braid_from_factors,
    braid_from_letters,
    conjugate,
    invariants,
    power,
    random_braid,
)
from bkl4.simples import Simple
from bkl4.sliding import slide_to_circuit
from bkl4.solver import (
    CONJUGATE,
    INCONCLUSIVE,
    NOT_CONJUGATE,
    ConjugacyCertificate,
    is_periodic,
    power_to_rigid,
    solve_conjugacy,
    verify_certificate,
)
from bkl4.words import beta_braid

S, W, N, E, M, A = (
    Simple.A12,
    Simple.A23,
    Simple.A34,
    Simple.A14,
    Simple.A13,
    Simple.A24,
)


def test_certificate_verification():
    x = GarsideBraid(0, (W,))
    y = GarsideBraid(0, (M,))
    good = ConjugacyCertificate(x, y, GarsideBraid(0, (S,)))  # a13^a12 = a23
    assert verify_certificate(good)
    bad = ConjugacyCertificate(x, y, GarsideBraid(0, (N,)))
    assert not verify_certificate(bad)


def test_equal_braids_are_conjugate():
    b = beta_braid(1)
    decision = solve_conjugacy(b, b)
    assert decision.outcome == CONJUGATE
    assert decision.certificate.z == IDENTITY


def test_lambda_mismatch_frozen():
    decision = solve_conjugacy(GarsideBraid(0, (S,)), GarsideBraid(0, (S, S)))
    assert decision.outcome == NOT_CONJUGATE
    assert decision.reason == "lambda-mismatch"
    assert decision.certificate is None


def test_type_mismatch_periodic_vs_not():
    gamma = braid_from_letters([(Simple.DELTA, 1), (S, 1)])  # periodic, weight 4
    x = GarsideBraid(0, (S, S, S, S))  # weight 4, not periodic
    assert is_periodic(gamma) and not is_periodic(x)
    decision = solve_conjugacy(x, gamma)
    assert decision.outcome == NOT_CONJUGATE
    assert decision.reason == "type-mismatch"


def test_type_mismatch_inf_sup():
    # a12^2 and p12-34 share the weight but not the circuit (inf, sup).
    decision = solve_conjugacy(
        GarsideBraid(0, (S, S)), GarsideBraid(0, (Simple.P12_34,))
    )
    assert decision.outcome == NOT_CONJUGATE
    assert decision.reason == "type-mismatch"


def test_disjoint_sc_frozen():
    # c123 and p12-34: same weight, same circuit data (inf 0, sup 1, one
    # weight-2 factor), but SC(c123) is the four triangles and SC(p12-34) is
    # the two chord pairs.
    decision = solve_conjugacy(
        GarsideBraid(0, (Simple.C123,)), GarsideBraid(0, (Simple.P12_34,))
    )
    assert decision.outcome == NOT_CONJUGATE
    assert decision.reason == "disjoint-SC"


def test_conjugate_pairs_random():
    rng = random.Random(101)
    for _ in range(150):
        x = random_braid(rng, rng.randrange(1, 12), rng.randrange(-2, 3))
        w = random_braid(rng, rng.randrange(0, 8), rng.randrange(-2, 3))
        y = conjugate(x, w)
        decision = solve_conjugacy(x, y)
        assert decision.outcome == CONJUGATE
        cert = decision.certificate
        assert cert.x == x and cert.y == y
        assert verify_certificate(cert)


def test_atom_conjugacy():
    # All six band generators are conjugate to each other.
    for a in (W, N, E, M, A):
        decision = solve_conjugacy(GarsideBraid(0, (S,)), GarsideBraid(0, (a,)))
        assert decision.outcome == CONJUGATE
        assert verify_certificate(decision.certificate)


def test_delta_conjugates():
    rng = random.Random(7)
    delta = GarsideBraid(1, ())
    for _ in range(20):
        w = random_braid(rng, rng.randrange(0, 5), rng.randrange(-2, 3))
        decision = solve_conjugacy(conjugate(delta, w), delta)
        assert decision.outcome == CONJUGATE
        assert verify_certificate(decision.certificate)
    # Distinct delta powers are never conjugate (weight differs).
    decision = solve_conjugacy(delta, GarsideBraid(2, ()))
    assert decision.outcome == NOT_CONJUGATE


def test_is_periodic_examples():
    assert is_periodic(IDENTITY)
    assert is_periodic(GarsideBraid(1, ()))
    assert is_periodic(GarsideBraid(-3, ()))
    assert is_periodic(braid_from_factors(0, (S, W, N)))  # spells delta
    gamma = braid_from_letters([(Simple.DELTA, 1), (S, 1)])
    assert is_periodic(gamma)
    assert is_periodic(power(gamma, 5))
    assert not is_periodic(GarsideBraid(0, (S,)))
    assert not is_periodic(beta_braid(1))
    assert not is_periodic(GarsideBraid(0, (Simple.C123, S)))


def test_power_to_rigid():
    i, z, r = power_to_rigid(beta_braid(1))
    assert i == 1 and z == IDENTITY and r == beta_braid(1)
    # sigma1 sigma2 sigma1 is not rigid (nor its circuit), but its square is
    # the triangle cube c123^3.
    x = GarsideBraid(0, (Simple.C123, S))
    i, z, r = power_to_rigid(x)
    assert i == 2
    assert r == GarsideBraid(0, (Simple.C123,) * 3)
    assert conjugate(power(x, 2), z) == r
    assert power_to_rigid(x, max_power=1) is None


def test_assume_pa_agrees_with_general_path():
    rng = random.Random(55)
    for _ in range(60):
        x = random_braid(rng, rng.randrange(1, 9), rng.randrange(-2, 3))
        if rng.random() < 0.5:
            y = conjugate(x, random_braid(rng, rng.randrange(0, 6), 0))
        else:
            y = random_braid(rng, rng.randrange(1, 9), rng.randrange(-2, 3))
        d1 = solve_conjugacy(x, y)
        d2 = solve_conjugacy(x, y, assume_pa=True)
        assert d1.outcome == d2.outcome, (x, y)
        if d2.outcome == CONJUGATE:
            assert verify_certificate(d2.certificate)


def test_cap_exceeded_is_inconclusive():
    x = beta_braid(1)
    w = GarsideBraid(0, (M,))
    y = conjugate(x, w)
    assert slide_to_circuit(y).representative != slide_to_circuit(x).representative
    decision = solve_conjugacy(x, y, cap=1)
    assert decision.outcome == INCONCLUSIVE
    assert decision.reason == "cap-exceeded"
    # With the default cap the same pair resolves.
    assert solve_conjugacy(x, y).outcome == CONJUGATE


def test_solver_respects_weight_invariant():
    rng = random.Random(13)
    for _ in range(100):
        x = random_braid(rng, rng.randrange(0, 7), rng.randrange(-2, 3))
        y = random_braid(rng, rng.randrange(0, 7), rng.randrange(-2, 3))
        decision = solve_conjugacy(x, y)
        if invariants(x).weight != invariants(y).weight:
            assert decision.outcome == NOT_CONJUGATE
        if decision.outcome == CONJUGATE:
            assert verify_certificate(decision.certificate)
