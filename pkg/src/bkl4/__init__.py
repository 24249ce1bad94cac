"""
bkl4: the dual (Birman-Ko-Lee) Garside structure on the 4-strand braid group.

Normal forms and arithmetic, cyclic sliding, sliding circuits, and a solver
for the conjugacy decision and search problem, plus an independent classical
(permutation-braid) cross-check and a command line interface.
"""

from __future__ import annotations

from bkl4.circuits import (
    CapExceededError,
    NotInCircuitError,
    Orbit,
    QuotientGraph,
    SCSet,
    compute_sc,
    minimal_arrows,
    orbit_partition,
    quotient_graph,
)
from bkl4.engine import (
    IDENTITY,
    GarsideBraid,
    Invariants,
    braid_from_factors,
    braid_from_letters,
    conjugate,
    invariants,
    invert,
    multiply,
    normalize_factors,
    power,
    random_braid,
    tau_braid,
)
from bkl4.simples import (
    ATOMS,
    PROPER_SIMPLES,
    SIMPLE_NAMES,
    Simple,
    complement,
    compose_simple,
    divisors,
    left_weighted,
    meet,
    name_of,
    self_check,
    simple_from_name,
    tau,
    tau_inv,
    tau_power,
    weight,
)
from bkl4.sliding import (
    DeltaPowerError,
    NotSimpleError,
    SlidingStep,
    SlidingTrajectory,
    cyclic_sliding,
    cycling,
    decycling,
    final_factor,
    initial_factor,
    is_rigid,
    preferred_prefix,
    slide_to_circuit,
    slide_to_sss,
    transport,
)
from bkl4.solver import (
    CONJUGATE,
    INCONCLUSIVE,
    NOT_CONJUGATE,
    ConjugacyCertificate,
    SolverDecision,
    is_periodic,
    power_to_rigid,
    solve_conjugacy,
    verify_certificate,
)
from bkl4.words import (
    ParseError,
    beta_braid,
    beta_word,
    format_braid,
    format_braid_compact,
    parse_braid,
    parse_word,
    to_artin_letters,
)

__all__ = [
    # simples
    "ATOMS",
    "PROPER_SIMPLES",
    "SIMPLE_NAMES",
    "Simple",
    "complement",
    "compose_simple",
    "divisors",
    "left_weighted",
    "meet",
    "name_of",
    "self_check",
    "simple_from_name",
    "tau",
    "tau_inv",
    "tau_power",
    "weight",
    # engine
    "IDENTITY",
    "GarsideBraid",
    "Invariants",
    "braid_from_factors",
    "braid_from_letters",
    "conjugate",
    "invariants",
    "invert",
    "multiply",
    "normalize_factors",
    "power",
    "random_braid",
    "tau_braid",
    # words
    "ParseError",
    "beta_braid",
    "beta_word",
    "format_braid",
    "format_braid_compact",
    "parse_braid",
    "parse_word",
    "to_artin_letters",
    # sliding
    "DeltaPowerError",
    "NotSimpleError",
    "SlidingStep",
    "SlidingTrajectory",
    "cyclic_sliding",
    "cycling",
    "decycling",
    "final_factor",
    "initial_factor",
    "is_rigid",
    "preferred_prefix",
    "slide_to_circuit",
    "slide_to_sss",
    "transport",
    # circuits
    "CapExceededError",
    "NotInCircuitError",
    "Orbit",
    "QuotientGraph",
    "SCSet",
    "compute_sc",
    "minimal_arrows",
    "orbit_partition",
    "quotient_graph",
    # solver
    "CONJUGATE",
    "INCONCLUSIVE",
    "NOT_CONJUGATE",
    "ConjugacyCertificate",
    "SolverDecision",
    "is_periodic",
    "power_to_rigid",
    "solve_conjugacy",
    "verify_certificate",
]
