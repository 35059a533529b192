"""Word-indexed cycle catalog of J(2,m) and closed-form predictions for
pairwise intersection sizes.

A word is a tuple of cyclically consecutive cycle indices, e.g. (2,3,4)
or, wrapping, (5,1) for m=5. The catalog entry for a word is the union
of its base cycles with the interior spokes deleted. For word length
k < m this is a simple cycle on 2(k+1) edges; the length-m entries are
kept in the catalog but flagged, since deleting only the interior
spokes of a full wrap leaves a non-simple subgraph (2m+1 edges, one
surviving spoke). The outer rim cycle has no word at all. Both facts
are surfaced by the verification report rather than corrected here.

The intersection predictions depend only on the words (their endpoint
cycles and cyclic adjacency), never on the edge sets; the survey at the
bottom compares every prediction against the actual edge-set
intersection and collects disagreements.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidParameterError
from .graphs import (
    Graph,
    base_cycle_indices,
    build_jahangir,
    enumerate_simple_cycles,
    jahangir_order,
    spoke_index,
)


@dataclass(frozen=True)
class CycleCatalogEntry:
    """One catalog cycle: its word (None for cycles with no word), its
    edge-index set, its recorded order beta = |edges|, and whether the
    edge set really is a simple cycle."""

    word: tuple[int, ...] | None
    edges: frozenset[int]
    beta: int
    is_simple_cycle: bool


@dataclass(frozen=True)
class CycleCatalog:
    m: int | None
    entries: tuple[CycleCatalogEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)


def word_of(start: int, length: int, m: int) -> tuple[int, ...]:
    """The word of `length` consecutive cycle indices beginning at
    `start`, wrapping after m."""
    return tuple((start - 1 + t) % m + 1 for t in range(length))


def all_words(m: int) -> list[tuple[int, ...]]:
    """All m*m words, shortest first, then by start index."""
    return [word_of(start, k, m) for k in range(1, m + 1) for start in range(1, m + 1)]


def validate_word(word: tuple[int, ...], m: int) -> None:
    if not word or len(word) > m:
        raise InvalidParameterError(f"word length must be 1..{m}, got {word!r}")
    if any(not 1 <= j <= m for j in word):
        raise InvalidParameterError(f"word indices must be in 1..{m}, got {word!r}")
    for a, b in zip(word, word[1:]):
        if b != a % m + 1:
            raise InvalidParameterError(f"word indices must be consecutive, got {word!r}")


def word_edge_set(word: tuple[int, ...], m: int) -> frozenset[int]:
    """Union of the word's base cycles minus the interior spokes."""
    edges: set[int] = set()
    for j in word:
        edges |= base_cycle_indices(j, m)
    for j in word[1:]:
        edges.discard(spoke_index(j, m))
    return frozenset(edges)


def claimed_order(k: int) -> int:
    """The catalog's stated size for a length-k entry. Holds for k < m;
    the length-m entries actually have 2m+1 edges."""
    return 2 * (k + 1)


def _is_simple_cycle_edges(edges: frozenset[int], g: Graph) -> bool:
    deg: dict[int, int] = {}
    for i in edges:
        u, v = g.edges[i]
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if not deg or any(d != 2 for d in deg.values()):
        return False
    adj: dict[int, list[int]] = {x: [] for x in deg}
    for i in edges:
        u, v = g.edges[i]
        adj[u].append(v)
        adj[v].append(u)
    start = next(iter(deg))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(deg)


def word_cycle_catalog(m: int) -> CycleCatalog:
    """The full word catalog: m*m entries, one per (length, start)."""
    if m < 3:
        raise InvalidParameterError(f"m must be >= 3, got {m}")
    g = build_jahangir(m)
    entries = []
    for word in all_words(m):
        edges = word_edge_set(word, m)
        entries.append(CycleCatalogEntry(
            word=word,
            edges=edges,
            beta=len(edges),
            is_simple_cycle=_is_simple_cycle_edges(edges, g)))
    return CycleCatalog(m=m, entries=tuple(entries))


def oracle_cycle_catalog(g: Graph) -> CycleCatalog:
    """Ground-truth catalog: one entry per actual simple cycle of g.

    When g is structurally a Jahangir graph, cycles matching a word
    keep that word; everything else (notably the outer rim cycle) gets
    word None.
    """
    if not g.edges and g.vertex_count == 0:
        raise InvalidParameterError("graph must have at least one vertex")
    m = jahangir_order(g)
    by_edges: dict[frozenset[int], tuple[int, ...]] = {}
    if m is not None:
        # g's edge order may differ from the canonical one; translate.
        canon = build_jahangir(m)
        pos = {}
        for idx, (u, v) in enumerate(g.edges):
            pos[(u, v) if u <= v else (v, u)] = idx
        trans = []
        for u, v in canon.edges:
            trans.append(pos[(u, v) if u <= v else (v, u)])
        for word in all_words(m):
            canonical = word_edge_set(word, m)
            translated = frozenset(trans[i] for i in canonical)
            if translated not in by_edges:
                by_edges[translated] = word
    entries = []
    for cyc in enumerate_simple_cycles(g):
        entries.append(CycleCatalogEntry(
            word=by_edges.get(cyc),
            edges=cyc,
            beta=len(cyc),
            is_simple_cycle=True))
    return CycleCatalog(m=m, entries=tuple(entries))


# ---------------------------------------------------------------------------
# Intersection predictions


def follows(a: int, b: int, m: int) -> bool:
    """True when cycle b comes right after cycle a, cyclically."""
    return b == a % m + 1


def cyclic_runs(indices: set[int], m: int) -> list[list[int]]:
    """Decompose a set of cycle indices into maximal cyclic runs of
    consecutive indices, each run listed in cyclic order."""
    if len(indices) == m:
        return [sorted(indices)]
    runs = []
    for j in sorted(indices):
        prev = j - 1 if j > 1 else m
        if prev in indices:
            continue  # not the head of a run
        run = [j]
        nxt = j % m + 1
        while nxt in indices:
            run.append(nxt)
            nxt = nxt % m + 1
        runs.append(run)
    return runs


def predict_intersection_nested(u: tuple[int, ...], v: tuple[int, ...], m: int) -> int:
    """Predicted |edges(u) & edges(v)| when u's index set lies inside
    v's: the order of u, minus one for each endpoint cycle of u that is
    not also an endpoint of v (shared or crossed)."""
    validate_word(u, m)
    validate_word(v, m)
    if not set(u) <= set(v):
        raise InvalidParameterError(f"{u!r} is not nested in {v!r}")
    beta = claimed_order(len(u))
    u1, up = u[0], u[-1]
    v1, vq = v[0], v[-1]
    if (u1 == v1 and up == vq) or (u1 == vq and up == v1):
        return beta
    if u1 == v1 or up == vq:
        return beta - 1
    return beta - 2


def predict_intersection_disjoint(u: tuple[int, ...], v: tuple[int, ...], m: int) -> int:
    """Predicted intersection for words with disjoint index sets: one
    shared spoke per cyclic adjacency between the end of one word and
    the start of the other."""
    validate_word(u, m)
    validate_word(v, m)
    if set(u) & set(v):
        raise InvalidParameterError(f"{u!r} and {v!r} are not disjoint")
    total = 0
    if follows(u[-1], v[0], m):
        total += 1
    if follows(v[-1], u[0], m):
        total += 1
    return total


def _partial_one_way(u: tuple[int, ...], v: tuple[int, ...], m: int) -> int | None:
    # Sum the overlap rule over maximal runs of the shared indices.
    # Each run must sit at an end of v; a run at v's start earns a
    # bonus spoke when v wraps straight into u, a run at v's end when
    # u wraps straight into v. Returns None if a run is anchored at
    # neither end (the caller then retries with the roles swapped).
    common = set(u) & set(v)
    total = 0
    for run in cyclic_runs(common, m):
        if run[0] == v[0]:
            bonus = 1 if follows(v[-1], u[0], m) else 0
        elif run[-1] == v[-1]:
            bonus = 1 if follows(u[-1], v[0], m) else 0
        else:
            return None
        total += claimed_order(len(run)) - 2 + bonus
    return total


def predict_intersection_partial(u: tuple[int, ...], v: tuple[int, ...], m: int) -> int:
    """Predicted intersection for overlapping, non-nested words."""
    validate_word(u, m)
    validate_word(v, m)
    su, sv = set(u), set(v)
    if not (su & sv) or su <= sv or sv <= su:
        raise InvalidParameterError(f"{u!r} and {v!r} do not partially overlap")
    result = _partial_one_way(u, v, m)
    if result is None:
        result = _partial_one_way(v, u, m)
    if result is None:
        raise InvalidParameterError(
            f"overlap of {u!r} and {v!r} is not anchored at a word boundary")
    return result


def predict_intersection(u: tuple[int, ...], v: tuple[int, ...], m: int) -> int:
    """Route a word pair to the applicable prediction. Total over valid
    words: every pair is nested, disjoint, or partially overlapping."""
    validate_word(u, m)
    validate_word(v, m)
    su, sv = set(u), set(v)
    if su <= sv:
        return predict_intersection_nested(u, v, m)
    if sv <= su:
        return predict_intersection_nested(v, u, m)
    if not (su & sv):
        return predict_intersection_disjoint(u, v, m)
    return predict_intersection_partial(u, v, m)


def direct_intersection(a: frozenset[int], b: frozenset[int]) -> int:
    return len(a & b)


@dataclass(frozen=True)
class IntersectionMismatch:
    word_a: tuple[int, ...]
    word_b: tuple[int, ...]
    relation: str
    predicted: int
    actual: int


@dataclass(frozen=True)
class IntersectionSurvey:
    m: int
    pairs_checked: int
    mismatches: tuple[IntersectionMismatch, ...]


def _relation(u: tuple[int, ...], v: tuple[int, ...]) -> str:
    su, sv = set(u), set(v)
    if su <= sv or sv <= su:
        return "nested"
    if not (su & sv):
        return "disjoint"
    return "partial"


def intersection_survey(m: int) -> IntersectionSurvey:
    """Predict every unordered pair of distinct catalog words and
    compare against the actual edge sets. Disagreements are collected,
    never asserted away."""
    if m < 3:
        raise InvalidParameterError(f"m must be >= 3, got {m}")
    words = all_words(m)
    edge_sets = {w: word_edge_set(w, m) for w in words}
    checked = 0
    bad = []
    for u, v in combinations(words, 2):
        predicted = predict_intersection(u, v, m)
        actual = direct_intersection(edge_sets[u], edge_sets[v])
        checked += 1
        if predicted != actual:
            bad.append(IntersectionMismatch(u, v, _relation(u, v), predicted, actual))
    return IntersectionSurvey(m=m, pairs_checked=checked, mismatches=tuple(bad))
