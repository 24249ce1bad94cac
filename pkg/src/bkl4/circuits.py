"""
circuits: the set of sliding circuits SC(x), its orbit structure, and the
quotient graph.

SC(x) is the set of conjugates of x that lie on a circuit of cyclic sliding
(the periodic points of s inside the conjugacy class); it is a finite,
complete conjugacy-class invariant.  This module computes it by breadth-first
search from one circuit element:

  * An *arrow* at y in SC(x) is a nontrivial simple s with y^s in SC(x); it is
    *minimal* when the only prefixes t of s with y^t in SC(x) are 1 and s.
    Minimal arrows are always prefixes of iota(y) or complement(phi(y)), so
    the candidate set is tiny; candidates are tested in weight-then-index
    order.  If some element of SC(x) is rigid, SC(x) is exactly the set of
    rigid conjugates, so membership testing degenerates to a rigidity check;
    otherwise a candidate is tested by running its sliding trajectory.
  * The search also follows tau (conjugation by delta), cycling and
    decycling, which all preserve SC(x).

Every visited element keeps an accumulated conjugator from the base braid, so
the search doubles as a conjugacy-certificate finder (`stop_at`).

The *orbit* of y is O(y) = {tau^k(c^l(y))}; orbits partition SC(x), and an
arrow s at y is *useful* when y^s lies outside O(y).  The quotient graph has
one vertex per orbit and, for each useful arrow of the orbit's canonical
representative, an unordered edge to the target orbit.  (Which representative
is chosen does not matter: transports carry the arrows of one member to the
arrows of any other.)

The search size is capped (default 10**6, overridable by the B4_SC_CAP
environment variable or a `cap` argument); hitting the cap raises
CapExceededError rather than silently truncating.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from bkl4.engine import (
    GarsideBraid,
    braid_from_factors,
    conjugate,
    invert,
    multiply,
    tau_braid,
)
from bkl4.simples import (
    COMPLEMENT,
    DIVISORS,
    PROPER_SIMPLES,
    TAU_POWER,
    WEIGHT,
    Simple,
)
from bkl4.sliding import (
    cycling,
    decycling,
    final_factor,
    initial_factor,
    is_rigid,
    slide_to_circuit,
)

__all__ = [
    "DEFAULT_CAP",
    "CapExceededError",
    "NotInCircuitError",
    "SCSet",
    "Orbit",
    "QuotientGraph",
    "minimal_arrows",
    "compute_sc",
    "orbit_partition",
    "quotient_graph",
]

DEFAULT_CAP = 10**6


class CapExceededError(RuntimeError):
    """The sliding-circuit search outgrew the configured cap."""

    def __init__(self, cap: int):
        super().__init__(f"sliding circuit set exceeds cap of {cap} elements")
        self.cap = cap


class NotInCircuitError(ValueError):
    """The queried braid is not a periodic point of cyclic sliding."""


def _resolve_cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    return int(os.environ.get("B4_SC_CAP", DEFAULT_CAP))


def _sort_key(s: Simple) -> tuple[int, int]:
    return (WEIGHT[s], int(s))


def _in_circuit(y: GarsideBraid, rigid_class: bool) -> bool:
    if rigid_class:
        return is_rigid(y)
    return slide_to_circuit(y).cycle_start == 0


def minimal_arrows(
    y: GarsideBraid, *, known_rigid: bool | None = None
) -> tuple[Simple, ...]:
    """The minimal arrows at y, sorted by (weight, canonical index).

    Raises NotInCircuitError if y is not in its own sliding circuit set.
    `known_rigid` skips the membership re-check when the caller already knows
    whether the class is rigid (as the SC search does).
    """
    if not y.factors:
        # Delta powers: y^s = y iff tau^p(s) = s, and SC(y) = {y}.
        fixed = [
            s
            for s in (*PROPER_SIMPLES, Simple.DELTA)
            if TAU_POWER[y.power % 4][s] == s
        ]
        fixed_set = set(fixed)
        return tuple(
            sorted(
                (
                    s
                    for s in fixed
                    if not any(
                        t in fixed_set for t in DIVISORS[s] if t not in (Simple.ONE, s)
                    )
                ),
                key=_sort_key,
            )
        )
    if known_rigid is None:
        rigid_class = is_rigid(y)
        if not _in_circuit(y, rigid_class):
            raise NotInCircuitError(f"not in its sliding circuit set: {y!r}")
    else:
        rigid_class = known_rigid
    candidates = sorted(
        (DIVISORS[initial_factor(y)] | DIVISORS[COMPLEMENT[final_factor(y)]])
        - {Simple.ONE},
        key=_sort_key,
    )
    arrows = [
        s
        for s in candidates
        if _in_circuit(conjugate(y, braid_from_factors(0, (s,))), rigid_class)
    ]
    arrow_set = set(arrows)
    return tuple(
        s
        for s in arrows
        if not any(t in arrow_set for t in DIVISORS[s] if t not in (Simple.ONE, s))
    )


@dataclass(frozen=True, eq=False, slots=True)
class SCSet:
    """The sliding circuit set of `base`, with conjugators from `base`.

    conjugators[e] is a braid z with base^z = e, for every element e; the
    iteration order of `conjugators` is the search order (representative
    first).  `complete` is False when the search stopped early at `stop_at`.
    """

    base: GarsideBraid
    representative: GarsideBraid
    conjugators: dict[GarsideBraid, GarsideBraid]
    rigid: bool
    complete: bool = True

    @property
    def elements(self) -> tuple[GarsideBraid, ...]:
        return tuple(self.conjugators)

    @property
    def size(self) -> int:
        return len(self.conjugators)

    def __contains__(self, y: GarsideBraid) -> bool:
        return y in self.conjugators

    def __iter__(self) -> Iterator[GarsideBraid]:
        return iter(self.conjugators)


def compute_sc(
    x: GarsideBraid,
    *,
    cap: int | None = None,
    stop_at: GarsideBraid | None = None,
) -> SCSet:
    """Compute SC(x) by breadth-first search from its circuit representative.

    If `stop_at` is given, the search returns as soon as that element is
    found (with `complete=False` unless the search also exhausted the set).
    Raises CapExceededError when the set would exceed the cap.
    """
    cap = _resolve_cap(cap)
    entry = slide_to_circuit(x)
    rep = entry.representative
    rigid_class = is_rigid(rep)
    conjugators: dict[GarsideBraid, GarsideBraid] = {
        rep: entry.accumulated_conjugator
    }
    if stop_at is not None and rep == stop_at:
        return SCSet(x, rep, conjugators, rigid_class, complete=False)
    queue: list[GarsideBraid] = [rep]
    head = 0
    delta = GarsideBraid(1, ())
    while head < len(queue):
        y = queue[head]
        head += 1
        zy = conjugators[y]
        neighbors: list[tuple[GarsideBraid, GarsideBraid]] = []
        for s in minimal_arrows(y, known_rigid=rigid_class):
            ext = braid_from_factors(0, (s,))
            neighbors.append((conjugate(y, ext), ext))
        neighbors.append((tau_braid(y), delta))
        if y.factors:
            neighbors.append(
                (cycling(y), braid_from_factors(0, (initial_factor(y),)))
            )
            neighbors.append(
                (decycling(y), invert(braid_from_factors(0, (final_factor(y),))))
            )
        for target, ext in neighbors:
            if target in conjugators:
                continue
            if len(conjugators) >= cap:
                raise CapExceededError(cap)
            conjugators[target] = multiply(zy, ext)
            if stop_at is not None and target == stop_at:
                return SCSet(x, rep, conjugators, rigid_class, complete=False)
            queue.append(target)
    return SCSet(x, rep, conjugators, rigid_class, complete=True)


@dataclass(frozen=True, slots=True)
class Orbit:
    """One tau/cycling orbit inside an SC set, canonically ordered."""

    members: tuple[GarsideBraid, ...]

    @property
    def representative(self) -> GarsideBraid:
        return self.members[0]

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, y: GarsideBraid) -> bool:
        return y in self.members


def _braid_key(b: GarsideBraid) -> tuple[int, tuple[int, ...]]:
    return (b.power, tuple(int(f) for f in b.factors))


def orbit_partition(elements: Iterable[GarsideBraid]) -> tuple[Orbit, ...]:
    """Partition elements into orbits under tau and cycling.

    Both maps are bijections of the finite SC set, so forward closure finds
    each full orbit.  Members are sorted canonically; the orbit list is sorted
    by its representative.
    """
    todo = set(elements)
    orbits: list[Orbit] = []
    while todo:
        seed = todo.pop()
        component = {seed}
        frontier = [seed]
        while frontier:
            y = frontier.pop()
            for neighbor in (tau_braid(y), cycling(y)):
                if neighbor in todo:
                    todo.remove(neighbor)
                    component.add(neighbor)
                    frontier.append(neighbor)
        orbits.append(Orbit(tuple(sorted(component, key=_braid_key))))
    orbits.sort(key=lambda o: _braid_key(o.representative))
    return tuple(orbits)


@dataclass(frozen=True, slots=True)
class QuotientGraph:
    """The orbit quotient of the sliding circuit graph.

    Vertices are orbits; for every useful arrow s of an orbit representative
    (one whose target lies in a different orbit) there is an unordered edge,
    labeled by the arrow names that induce it.
    """

    orbits: tuple[Orbit, ...]
    edges: tuple[tuple[int, int], ...]
    edge_labels: dict[tuple[int, int], tuple[Simple, ...]] = field(repr=False)

    @property
    def vertex_count(self) -> int:
        return len(self.orbits)

    def is_path(self) -> bool:
        """Whether the graph is a simple path through all vertices."""
        n = len(self.orbits)
        if n == 1:
            return not self.edges
        if len(self.edges) != n - 1:
            return False
        degree = [0] * n
        for i, j in self.edges:
            degree[i] += 1
            degree[j] += 1
        if sorted(degree)[:2] != [1, 1] or any(d > 2 for d in degree):
            return False
        # n-1 edges, max degree 2, exactly two endpoints: connected iff a path.
        seen = {0}
        frontier = [0]
        adjacency: dict[int, list[int]] = {i: [] for i in range(n)}
        for i, j in self.edges:
            adjacency[i].append(j)
            adjacency[j].append(i)
        while frontier:
            v = frontier.pop()
            for w in adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == n


def quotient_graph(sc: SCSet) -> QuotientGraph:
    """Build the orbit quotient of a fully computed SC set."""
    orbits = orbit_partition(sc.conjugators)
    index_of: dict[GarsideBraid, int] = {}
    for i, orbit in enumerate(orbits):
        for member in orbit.members:
            index_of[member] = i
    labels: dict[tuple[int, int], set[Simple]] = {}
    for i, orbit in enumerate(orbits):
        rep = orbit.representative
        for s in minimal_arrows(rep, known_rigid=sc.rigid):
            target = conjugate(rep, braid_from_factors(0, (s,)))
            j = index_of[target]
            if j == i:
                continue  # not a useful arrow
            key = (min(i, j), max(i, j))
            labels.setdefault(key, set()).add(s)
    edges = tuple(sorted(labels))
    return QuotientGraph(
        orbits=orbits,
        edges=edges,
        edge_labels={k: tuple(sorted(v, key=_sort_key)) for k, v in labels.items()},
    )
