"""Facet ideals, quasi-linear quotients, shellings, and the
Cohen-Macaulay verdict.

The colon ideal of a squarefree monomial prefix is never materialized:
for squarefree monomials its minimal generator degrees are the sizes of
the support differences, so the quasi-linear-quotients test only needs
min_j |supp(m_j) \\ supp(m_i)| at every position.

The block ordering lists the facet-ideal generators of J(2,m) by the
length of the leading run of deleted spokes (longest run first,
lexicographic inside each block). The test suite, not this module, is
the arbiter that this ordering passes the quotient test; the searcher
below is the fallback for arbitrary ideals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .complexes import SimplicialComplex, is_pure, spanning_complex
from .errors import CapacityError, InvalidParameterError, PurityError
from .graphs import Graph, jahangir_order, spoke_index
from .spanning import enumerate_spanning_trees_jahangir

SEARCH_GENERATOR_LIMIT = 2000
SEARCH_STATE_BUDGET = 500_000


@dataclass(frozen=True)
class SquarefreeMonomial:
    """A squarefree monomial, carried as its variable-index support."""

    support: frozenset[int]

    @property
    def degree(self) -> int:
        return len(self.support)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by a minimal ordered generating system."""

    generators: tuple[SquarefreeMonomial, ...]

    def __post_init__(self) -> None:
        degrees = {g.degree for g in self.generators}
        supports = [g.support for g in self.generators]
        if len(set(supports)) != len(supports):
            raise InvalidParameterError("generating system is not minimal: duplicate")
        if len(degrees) > 1:
            # mixed degrees force the quadratic divisibility check
            for i, a in enumerate(supports):
                for b in supports[i + 1:]:
                    if a <= b or b <= a:
                        raise InvalidParameterError(
                            "generating system is not minimal: one generator "
                            "divides another")

    def __len__(self) -> int:
        return len(self.generators)


def facet_ideal(c: SimplicialComplex) -> MonomialIdeal:
    """One generator per facet, support equal to the facet. Facets are
    incomparable, so minimality is automatic; purity is required by the
    downstream quotient theory."""
    if not c.facets:
        raise InvalidParameterError("facet ideal of an empty complex")
    if not is_pure(c):
        raise PurityError("facet ideal requires a pure complex")
    return MonomialIdeal(tuple(SquarefreeMonomial(f) for f in c.facets))


def colon_mindeg(previous: Sequence[SquarefreeMonomial],
                 current: SquarefreeMonomial) -> int:
    """Minimal generator degree of (m_1,...,m_{i-1}) : (m_i) for
    squarefree monomials: min over j of |supp(m_j) - supp(m_i)|."""
    if not previous:
        raise InvalidParameterError("colon quotient needs a nonempty prefix")
    return min(len(p.support - current.support) for p in previous)


def has_quasi_linear_quotients(
        ideal: MonomialIdeal,
        ordering: Sequence[int]) -> tuple[bool, int | None]:
    """True when every colon step along the ordering has minimal degree
    exactly 1; on failure also returns the first failing position."""
    r = len(ideal.generators)
    if sorted(ordering) != list(range(r)):
        raise InvalidParameterError("ordering is not a permutation of the generators")
    supports = [ideal.generators[k].support for k in ordering]
    for i in range(1, r):
        cur = supports[i]
        best = None
        for j in range(i):
            d = len(supports[j] - cur)
            if d == 1:
                best = 1
                break  # minimality rules out 0, so 1 is optimal
            if best is None or d < best:
                best = d
        if best != 1:
            return False, i
    return True, None


# ---------------------------------------------------------------------------
# The block ordering for J(2,m)


def _leading_spoke_run(removed: frozenset[int], m: int) -> int:
    k = 0
    for j in range(1, m + 1):
        if spoke_index(j, m) in removed:
            k += 1
        else:
            break
    return k


def prefix_block_ordering(m: int) -> tuple[int, ...]:
    """Permutation of the canonical facet-ideal generators of J(2,m):
    blocks by the length of the leading run of deleted spokes, longest
    first, lexicographic on the deleted edge tuple within a block."""
    if m < 3:
        raise InvalidParameterError(f"m must be >= 3, got {m}")
    records = enumerate_spanning_trees_jahangir(m)
    canonical = sorted((rec.kept for rec in records), key=lambda s: tuple(sorted(s)))
    position = {kept: i for i, kept in enumerate(canonical)}
    every_edge = frozenset(range(3 * m))
    buckets: dict[int, list[frozenset[int]]] = {}
    for rec in records:
        buckets.setdefault(_leading_spoke_run(rec.removed, m), []).append(rec.removed)
    perm: list[int] = []
    for k in range(m - 1, -1, -1):
        block = buckets.get(k, [])
        block.sort(key=lambda s: tuple(sorted(s)))
        perm.extend(position[every_edge - removed] for removed in block)
    return tuple(perm)


# ---------------------------------------------------------------------------
# Ordering search


def find_qlq_ordering(ideal: MonomialIdeal,
                      seed: int = 0,
                      state_budget: int = SEARCH_STATE_BUDGET) -> tuple[int, ...] | None:
    """Search for any generator ordering passing the quotient test.

    Depth-first insertion with backtracking; a generator may extend the
    prefix when some chosen generator's support differs from its own in
    exactly one element. Dead prefixes are memoized by their generator
    set, which is sound because viability depends only on the set.
    Returns None only after the search space is exhausted; blowing the
    state budget raises CapacityError instead.
    """
    r = len(ideal.generators)
    if r > SEARCH_GENERATOR_LIMIT:
        raise CapacityError(
            f"{r} generators exceed the search limit {SEARCH_GENERATOR_LIMIT}")
    if r <= 1:
        return tuple(range(r))
    supports = [g.support for g in ideal.generators]
    rng = random.Random(seed)

    # enables[j] lists the k whose colon step against j alone is linear;
    # the relation is directional once degrees are mixed
    enables: list[list[int]] = [[] for _ in range(r)]
    for a in range(r):
        for b in range(r):
            if a != b and len(supports[a] - supports[b]) == 1:
                enables[a].append(b)

    chosen: list[int] = []
    in_prefix = [False] * r
    enabled = [0] * r  # how many chosen neighbors each generator has
    dead: set[frozenset[int]] = set()
    states = 0

    def extend() -> bool:
        nonlocal states
        if len(chosen) == r:
            return True
        key = frozenset(chosen)
        if key in dead:
            return False
        states += 1
        if states > state_budget:
            raise CapacityError(
                f"ordering search exceeded {state_budget} states; verdict unknown")
        candidates = [k for k in range(r) if not in_prefix[k] and enabled[k] > 0]
        rng.shuffle(candidates)
        for k in candidates:
            chosen.append(k)
            in_prefix[k] = True
            for h in enables[k]:
                enabled[h] += 1
            if extend():
                return True
            for h in enables[k]:
                enabled[h] -= 1
            in_prefix[k] = False
            chosen.pop()
        dead.add(key)
        return False

    starts = list(range(r))
    rng.shuffle(starts)
    for first in starts:
        chosen.append(first)
        in_prefix[first] = True
        for h in enables[first]:
            enabled[h] += 1
        if extend():
            return tuple(chosen)
        for h in enables[first]:
            enabled[h] -= 1
        in_prefix[first] = False
        chosen.pop()
    return None


# ---------------------------------------------------------------------------
# Shellings


def is_shelling(facets: Sequence[frozenset[int]]) -> bool:
    """Classical shelling test for an ordered pure facet list: for all
    i and j < i some k < i has |F_i - F_k| = 1 and F_i cap F_j inside
    F_i cap F_k."""
    if not facets:
        return True
    if len({len(f) for f in facets}) != 1:
        raise PurityError("shelling test requires equal-sized facets")
    universe = 0
    masks = []
    for f in facets:
        mk = 0
        for x in f:
            mk |= 1 << x
        masks.append(mk)
        universe |= mk
    bits = universe.bit_length()
    seen: set[int] = set()
    for i, mi in enumerate(masks):
        if i == 0:
            seen.add(mi)
            continue
        # x is usable when swapping it for some y lands on an earlier facet
        usable = 0
        for x in range(bits):
            if not mi >> x & 1:
                continue
            base = mi & ~(1 << x)
            for y in range(bits):
                if y == x or base >> y & 1:
                    continue
                if base | (1 << y) in seen:
                    usable |= 1 << x
                    break
        for mj in masks[:i]:
            if not (mi & ~mj) & usable:
                return False
        seen.add(mi)
    return True


# ---------------------------------------------------------------------------
# Verdict


@dataclass(frozen=True)
class CMVerdict:
    """Cohen-Macaulay verdict for a spanning complex. cohen_macaulay is
    None when the search aborted on capacity, never on failure."""

    cohen_macaulay: bool | None
    certificate: tuple[int, ...] | None
    ordering_source: str | None        # "block" or "search"
    block_first_failure: int | None    # position where the block order failed
    shelling_agrees: bool | None


def cohen_macaulay_verdict(g: Graph, ordering: str = "auto",
                           seed: int = 0) -> CMVerdict:
    """Build the spanning complex and facet ideal of g, then certify
    Cohen-Macaulayness by exhibiting an ordering with quasi-linear
    quotients (block ordering first on Jahangir graphs, search
    otherwise). False requires exhaustive search failure.
    """
    if ordering not in ("auto", "block", "search"):
        raise InvalidParameterError(f"unknown ordering strategy {ordering!r}")
    complex_ = spanning_complex(g)
    ideal = facet_ideal(complex_)
    m = jahangir_order(g)
    if ordering == "block" and m is None:
        raise InvalidParameterError("block ordering is only defined for J(2,m)")

    block_failure: int | None = None
    if m is not None and ordering in ("auto", "block"):
        perm = prefix_block_ordering(m)
        ok, failure = has_quasi_linear_quotients(ideal, perm)
        if ok:
            facets_in_order = [ideal.generators[k].support for k in perm]
            return CMVerdict(True, perm, "block", None,
                             shelling_agrees=is_shelling(facets_in_order))
        block_failure = failure
        if ordering == "block":
            return CMVerdict(False, None, "block", block_failure, None)

    try:
        found = find_qlq_ordering(ideal, seed=seed)
    except CapacityError:
        return CMVerdict(None, None, "search", block_failure, None)
    if found is None:
        return CMVerdict(False, None, "search", block_failure, None)
    facets_in_order = [ideal.generators[k].support for k in found]
    return CMVerdict(True, found, "search", block_failure,
                     shelling_agrees=is_shelling(facets_in_order))
