"""
simples: the lattice of the 14 simple elements of the dual (Birman-Ko-Lee)
Garside structure on the 4-strand braid group B4.

The dual positive monoid is generated by the six band generators a_{p,q}
(1 <= p < q <= 4), one for each chord between punctures p and q of the disk.
With the punctures at the four corners of a square, each atom is drawn as its
chord, which gives the six pictorial letters used throughout:

    a12 = S (south side)    a23 = W (west side)     a34 = N (north side)
    a14 = E (east side)     a13 = M (main diagonal) a24 = A (anti diagonal)

The atoms satisfy six relation cells, each identifying the two-letter words
that spell the same weight-2 element:

    c123 = SW = WM = MS         c234 = WN = NA = AW
    c134 = NE = EM = MN         c124 = ES = SA = AE
    p12-34 = NS = SN            p14-23 = EW = WE

The Garside element is delta = a12.a23.a34 (= sigma1 sigma2 sigma3), and the
divisors of delta -- the simple elements -- are exactly

    1, the 6 atoms, the 4 triangles c.., the 2 chord pairs p.., delta.

All relations are length-preserving, so the letter count of a positive word is
an invariant, the weight: lambda(atom) = 1, lambda(delta) = 3.

Everything this module exports is a precomputed table over those 14 values.
The tables are bootstrapped at import time by closing positive words of length
<= 3 under the relation cells (exhaustive and exact at this size), and a
startup self-check asserts the structural invariants: complement(complement) =
tau, tau**4 = id, weight(s) + weight(complement(s)) = 3, s * complement(s) =
delta, the lattice laws for meet, and the weight-2 normality criterion
(a of weight 2: a.b is left-weighted exactly when complement(a) does not
divide b).

Conventions fixed here and used by every other module:
  * words compose left to right;
  * conjugation is x^z = z^-1 x z;
  * tau(x) = delta^-1 x delta (a quarter turn of the square; order 4);
  * the right complement is complement(s) = s^-1 delta.
"""

from __future__ import annotations

import itertools
from enum import IntEnum

__all__ = [
    "Simple",
    "SIMPLE_NAMES",
    "ATOMS",
    "PROPER_SIMPLES",
    "simple_from_name",
    "name_of",
    "weight",
    "atom_spelling",
    "complement",
    "tau",
    "tau_inv",
    "tau_power",
    "divisors",
    "meet",
    "compose_simple",
    "lquot",
    "left_weighted",
    "renorm_pair",
    "is_pair_normal",
    "follows",
    "self_check",
]


class Simple(IntEnum):
    """One of the 14 simple elements, in the canonical order used everywhere."""

    ONE = 0
    A12 = 1
    A23 = 2
    A34 = 3
    A14 = 4
    A13 = 5
    A24 = 6
    C123 = 7
    C124 = 8
    C134 = 9
    C234 = 10
    P12_34 = 11
    P14_23 = 12
    DELTA = 13


SIMPLE_NAMES: tuple[str, ...] = (
    "1",
    "a12",
    "a23",
    "a34",
    "a14",
    "a13",
    "a24",
    "c123",
    "c124",
    "c134",
    "c234",
    "p12-34",
    "p14-23",
    "delta",
)

_NAME_TO_SIMPLE = {name: Simple(i) for i, name in enumerate(SIMPLE_NAMES)}

ATOMS: tuple[Simple, ...] = (
    Simple.A12,
    Simple.A23,
    Simple.A34,
    Simple.A14,
    Simple.A13,
    Simple.A24,
)

PROPER_SIMPLES: tuple[Simple, ...] = tuple(
    s for s in Simple if s not in (Simple.ONE, Simple.DELTA)
)

_WEIGHT2: tuple[Simple, ...] = (
    Simple.C123,
    Simple.C124,
    Simple.C134,
    Simple.C234,
    Simple.P12_34,
    Simple.P14_23,
)

# The six relation cells: for each weight-2 simple, every two-letter atom word
# spelling it. S=a12, W=a23, N=a34, E=a14, M=a13, A=a24.
_S, _W, _N, _E, _M, _A = (
    Simple.A12,
    Simple.A23,
    Simple.A34,
    Simple.A14,
    Simple.A13,
    Simple.A24,
)

_RELATION_CELLS: dict[Simple, tuple[tuple[Simple, Simple], ...]] = {
    Simple.C123: ((_S, _W), (_W, _M), (_M, _S)),
    Simple.C234: ((_W, _N), (_N, _A), (_A, _W)),
    Simple.C134: ((_N, _E), (_E, _M), (_M, _N)),
    Simple.C124: ((_E, _S), (_S, _A), (_A, _E)),
    Simple.P12_34: ((_N, _S), (_S, _N)),
    Simple.P14_23: ((_E, _W), (_W, _E)),
}

_DELTA_WORD: tuple[Simple, ...] = (_S, _W, _N)  # delta = a12.a23.a34


def simple_from_name(name: str) -> Simple:
    """Return the simple with the given canonical name ('1', 'a12', ..., 'delta')."""
    try:
        return _NAME_TO_SIMPLE[name]
    except KeyError:
        raise ValueError(f"unknown simple element name {name!r}") from None


def name_of(s: Simple) -> str:
    """Return the canonical name of a simple."""
    return SIMPLE_NAMES[s]


# ---------------------------------------------------------------------------
# Bootstrap: close atom words of length <= 3 under the relation cells, then
# read every table off the resulting word classes.
# ---------------------------------------------------------------------------


def _close_word_class(word: tuple[Simple, ...]) -> frozenset[tuple[Simple, ...]]:
    """All positive atom words equal to `word` under the relation cells."""
    rewrites: dict[tuple[Simple, Simple], tuple[tuple[Simple, Simple], ...]] = {}
    for cell in _RELATION_CELLS.values():
        for pair in cell:
            rewrites[pair] = tuple(other for other in cell if other != pair)

    seen = {word}
    frontier = [word]
    while frontier:
        current = frontier.pop()
        for i in range(len(current) - 1):
            for replacement in rewrites.get(current[i : i + 2], ()):
                candidate = current[:i] + replacement + current[i + 2 :]
                if candidate not in seen:
                    seen.add(candidate)
                    frontier.append(candidate)
    return frozenset(seen)


def _bootstrap() -> dict[str, tuple]:
    # One defining word per simple; its closure is the simple's word class.
    defining_word: dict[Simple, tuple[Simple, ...]] = {Simple.ONE: ()}
    for atom in ATOMS:
        defining_word[atom] = (atom,)
    for two, cell in _RELATION_CELLS.items():
        defining_word[two] = cell[0]
    defining_word[Simple.DELTA] = _DELTA_WORD

    word_class = {s: _close_word_class(defining_word[s]) for s in Simple}

    # Distinct simples must have disjoint word classes (they are distinct
    # elements of the monoid); delta has exactly 16 spellings.
    for a, b in itertools.combinations(Simple, 2):
        assert word_class[a].isdisjoint(word_class[b]), (a, b)
    assert len(word_class[Simple.DELTA]) == 16

    weight_table = tuple(len(defining_word[s]) for s in Simple)

    def class_of(word: tuple[Simple, ...]) -> Simple | None:
        """The simple spelled by `word`, or None if it is not a divisor of delta."""
        if len(word) > 3:
            return None
        closure = _close_word_class(word)
        for s in Simple:
            if weight_table[s] == len(word) and defining_word[s] in closure:
                return s
        return None

    compose: list[list[Simple | None]] = [[None] * 14 for _ in range(14)]
    for a, b in itertools.product(Simple, Simple):
        compose[a][b] = class_of(defining_word[a] + defining_word[b])

    divisors_table: list[frozenset[Simple]] = []
    for s in Simple:
        divs = {
            t
            for t in Simple
            if weight_table[t] <= weight_table[s]
            and any(
                w[: weight_table[t]] in word_class[t] for w in word_class[s]
            )
        }
        divisors_table.append(frozenset(divs))
    assert divisors_table[Simple.DELTA] == frozenset(Simple)

    meet_table: list[list[Simple]] = [[Simple.ONE] * 14 for _ in range(14)]
    for a, b in itertools.product(Simple, Simple):
        common = divisors_table[a] & divisors_table[b]
        top_weight = max(weight_table[t] for t in common)
        tops = [t for t in common if weight_table[t] == top_weight]
        assert len(tops) == 1, f"meet({a}, {b}) is not unique: {tops}"
        meet_table[a][b] = tops[0]

    complement_table: list[Simple] = []
    for s in Simple:
        comps = [t for t in Simple if compose[s][t] == Simple.DELTA]
        assert len(comps) == 1, f"complement({s}) is not unique: {comps}"
        complement_table.append(comps[0])

    tau_table = tuple(complement_table[complement_table[s]] for s in Simple)
    tau_inv_table = [Simple.ONE] * 14
    for s in Simple:
        tau_inv_table[tau_table[s]] = s

    lquot_table: list[list[Simple | None]] = [[None] * 14 for _ in range(14)]
    for t, v in itertools.product(Simple, Simple):
        if t not in divisors_table[v]:
            continue
        quotients = [u for u in Simple if compose[t][u] == v]
        assert len(quotients) == 1, f"lquot({t}, {v}) is not unique: {quotients}"
        lquot_table[t][v] = quotients[0]

    left_weighted_table = tuple(
        tuple(meet_table[complement_table[a]][b] == Simple.ONE for b in Simple)
        for a in Simple
    )

    # Pairwise renormalization: (u, v) -> (u*t, t^-1 v) with
    # t = meet(complement(u), v). Moves everything movable one step left; its
    # fixed points are the locally normal pairs. By construction this also
    # bubbles delta factors to the front ((u, delta) -> (delta, tau(u))) and
    # trivial factors to the back ((1, v) -> (v, 1)).
    renorm_table: list[list[tuple[Simple, Simple]]] = []
    for u in Simple:
        row = []
        for v in Simple:
            t = meet_table[complement_table[u]][v]
            grown = compose[u][t]
            rest = lquot_table[t][v]
            assert grown is not None and rest is not None
            row.append((grown, rest))
        renorm_table.append(row)

    is_normal_table = tuple(
        tuple(renorm_table[u][v] == (u, v) for v in Simple) for u in Simple
    )

    follows_table: list[tuple[Simple, ...]] = []
    for u in Simple:
        if u == Simple.DELTA:
            follows_table.append(PROPER_SIMPLES)
        else:
            follows_table.append(
                tuple(v for v in PROPER_SIMPLES if is_normal_table[u][v])
            )

    tau_power_table = [list(Simple)]
    for _ in range(3):
        tau_power_table.append([tau_table[s] for s in tau_power_table[-1]])

    return {
        "SPELLING": tuple(defining_word[s] for s in Simple),
        "WEIGHT": tuple(weight_table),
        "COMPLEMENT": tuple(complement_table),
        "TAU": tuple(tau_table),
        "TAU_INV": tuple(tau_inv_table),
        "TAU_POWER": tuple(tuple(row) for row in tau_power_table),
        "DIVISORS": tuple(divisors_table),
        "MEET": tuple(tuple(row) for row in meet_table),
        "COMPOSE": tuple(tuple(row) for row in compose),
        "LQUOT": tuple(tuple(row) for row in lquot_table),
        "LEFT_WEIGHTED": left_weighted_table,
        "RENORM": tuple(tuple(row) for row in renorm_table),
        "IS_NORMAL": is_normal_table,
        "FOLLOWS": tuple(follows_table),
    }


_TABLES = _bootstrap()

SPELLING: tuple[tuple[Simple, ...], ...] = _TABLES["SPELLING"]
WEIGHT: tuple[int, ...] = _TABLES["WEIGHT"]
COMPLEMENT: tuple[Simple, ...] = _TABLES["COMPLEMENT"]
TAU: tuple[Simple, ...] = _TABLES["TAU"]
TAU_INV: tuple[Simple, ...] = _TABLES["TAU_INV"]
TAU_POWER: tuple[tuple[Simple, ...], ...] = _TABLES["TAU_POWER"]
DIVISORS: tuple[frozenset[Simple], ...] = _TABLES["DIVISORS"]
MEET: tuple[tuple[Simple, ...], ...] = _TABLES["MEET"]
COMPOSE: tuple[tuple[Simple | None, ...], ...] = _TABLES["COMPOSE"]
LQUOT: tuple[tuple[Simple | None, ...], ...] = _TABLES["LQUOT"]
LEFT_WEIGHTED: tuple[tuple[bool, ...], ...] = _TABLES["LEFT_WEIGHTED"]
RENORM: tuple[tuple[tuple[Simple, Simple], ...], ...] = _TABLES["RENORM"]
IS_NORMAL: tuple[tuple[bool, ...], ...] = _TABLES["IS_NORMAL"]
FOLLOWS: tuple[tuple[Simple, ...], ...] = _TABLES["FOLLOWS"]

del _TABLES


# ---------------------------------------------------------------------------
# Table accessors.
# ---------------------------------------------------------------------------


def weight(s: Simple) -> int:
    """The weight lambda(s): 0 for 1, 1 for atoms, 2 for pairs/triangles, 3 for delta."""
    return WEIGHT[s]


def atom_spelling(s: Simple) -> tuple[Simple, ...]:
    """The canonical positive atom word spelling s (length = weight(s))."""
    return SPELLING[s]


def complement(s: Simple) -> Simple:
    """The right complement s^-1 delta; satisfies s * complement(s) = delta."""
    return COMPLEMENT[s]


def tau(s: Simple) -> Simple:
    """tau(s) = delta^-1 s delta. Equals complement(complement(s)); order 4."""
    return TAU[s]


def tau_inv(s: Simple) -> Simple:
    """The inverse of tau: tau_inv(s) = delta s delta^-1."""
    return TAU_INV[s]


def tau_power(s: Simple, k: int) -> Simple:
    """tau applied k times (any integer k; tau has order 4)."""
    return TAU_POWER[k % 4][s]


def divisors(s: Simple) -> frozenset[Simple]:
    """All simples t with t a prefix (left divisor) of s."""
    return DIVISORS[s]


def meet(a: Simple, b: Simple) -> Simple:
    """The greatest common divisor a ^ b within the simple lattice."""
    return MEET[a][b]


def compose_simple(a: Simple, b: Simple) -> Simple | None:
    """The simple a*b if the product is simple (b divides complement(a)), else None."""
    return COMPOSE[a][b]


def lquot(t: Simple, v: Simple) -> Simple | None:
    """The left quotient t^-1 v if t divides v, else None."""
    return LQUOT[t][v]


def left_weighted(a: Simple, b: Simple) -> bool:
    """Whether the pair a.b is left-weighted: meet(complement(a), b) = 1."""
    return LEFT_WEIGHTED[a][b]


def renorm_pair(u: Simple, v: Simple) -> tuple[Simple, Simple]:
    """One local sliding step on the pair (u, v); fixed points are normal pairs."""
    return RENORM[u][v]


def is_pair_normal(u: Simple, v: Simple) -> bool:
    """Whether (u, v) is a fixed point of renorm_pair."""
    return IS_NORMAL[u][v]


def follows(u: Simple) -> tuple[Simple, ...]:
    """Proper simples v such that u.v is normal (u = delta allows all 12)."""
    return FOLLOWS[u]


# ---------------------------------------------------------------------------
# Startup self-check.
# ---------------------------------------------------------------------------


def self_check() -> None:
    """Assert the structural invariants of the tables; raises AssertionError."""
    for s in Simple:
        assert complement(complement(s)) == tau(s)
        assert tau_power(s, 4) == s
        assert tau_inv(tau(s)) == s
        assert weight(s) + weight(complement(s)) == 3
        assert compose_simple(s, complement(s)) == Simple.DELTA
        assert weight(tau(s)) == weight(s)
        assert meet(s, Simple.DELTA) == s
        assert meet(s, s) == s

    # Expected tau cycles: (a12 a14 a34 a23), (a13 a24), (c123 c124 c134 c234),
    # (p12-34 p14-23); 1 and delta are fixed.
    assert tau(Simple.A12) == Simple.A14
    assert tau(Simple.A14) == Simple.A34
    assert tau(Simple.A34) == Simple.A23
    assert tau(Simple.A23) == Simple.A12
    assert tau(Simple.A13) == Simple.A24
    assert tau(Simple.A24) == Simple.A13
    assert tau(Simple.C123) == Simple.C124
    assert tau(Simple.C124) == Simple.C134
    assert tau(Simple.C134) == Simple.C234
    assert tau(Simple.C234) == Simple.C123
    assert tau(Simple.P12_34) == Simple.P14_23
    assert tau(Simple.ONE) == Simple.ONE
    assert tau(Simple.DELTA) == Simple.DELTA

    for a, b in itertools.product(Simple, Simple):
        # meet is a gcd: it divides both, and every common divisor divides it.
        m = meet(a, b)
        assert m in divisors(a) and m in divisors(b)
        for t in divisors(a) & divisors(b):
            assert t in divisors(m)
        assert meet(a, b) == meet(b, a)
        # tau is a lattice automorphism.
        assert tau(meet(a, b)) == meet(tau(a), tau(b))
        assert (tau(b) in divisors(tau(a))) == (b in divisors(a))
        # a*b is simple exactly when b divides complement(a).
        assert (compose_simple(a, b) is not None) == (b in divisors(complement(a)))
        for c in Simple:
            assert meet(meet(a, b), c) == meet(a, meet(b, c))

    # Weight-2 normality: for a of weight 2 and proper b, a.b is left-weighted
    # exactly when delta does not divide a*b, i.e. complement(a) does not
    # divide b.
    for a in _WEIGHT2:
        for b in PROPER_SIMPLES:
            assert left_weighted(a, b) == (complement(a) not in divisors(b))


self_check()
