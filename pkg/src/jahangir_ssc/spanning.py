"""Spanning-tree enumeration, generic and structured.

The generic enumerator is the oracle: plain backtracking over the edge
list with a connectivity probe, emitting edge sets in canonical order.

The structured enumerator builds the same trees for J(2,m) by the
cutting-down rules: choose which spokes to delete (never all m), then
delete exactly one rim edge from every merged cycle and from every
untouched cycle. Trees are classified by the shape of the deleted
spoke set, and verify_partition checks that the classes are disjoint
and jointly exhaust the generic enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .cycles import cyclic_runs
from .errors import ClassificationError, InvalidParameterError
from .graphs import Graph, build_jahangir, is_connected, rim_indices, spoke_index


class TreeClass(str, Enum):
    """Shape of the deleted spoke set behind a spanning tree."""

    KEEP_ALL_SPOKES = "CJ1"      # no spoke deleted
    DROP_ONE_SPOKE = "CJ2"       # exactly one spoke deleted
    DROP_RUN = "CJ3a"            # >= 2 spokes deleted, one consecutive run
    DROP_SCATTERED = "CJ3b"      # >= 2 spokes deleted, pairwise non-consecutive
    DROP_MIXED = "CJ3c"          # >= 2 spokes deleted, some runs of each kind

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SpanningTreeRecord:
    """A spanning tree of J(2,m) as the pair (kept, removed) plus its
    class. kept is the facet; removed is its m-edge complement."""

    kept: frozenset[int]
    removed: frozenset[int]
    tree_class: TreeClass


def enumerate_spanning_trees_generic(g: Graph) -> list[frozenset[int]]:
    """All spanning-tree edge sets of g, each once, canonical order.

    Backtracking over edge positions; a branch that excludes an edge
    is taken only if the remaining edges can still connect the graph.
    Disconnected input yields an empty list.
    """
    n, edges = g.vertex_count, g.edges
    if n == 0:
        return []
    if n == 1:
        return [frozenset()]
    total = len(edges)
    out: list[frozenset[int]] = []
    chosen: list[int] = []

    def find(parent: list[int], x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def still_connectable(pos: int) -> bool:
        # chosen edges plus everything from pos on must span one component
        parent = list(range(n))
        comps = n
        for ei in itertools.chain(chosen, range(pos, total)):
            ru, rv = find(parent, edges[ei][0]), find(parent, edges[ei][1])
            if ru != rv:
                parent[ru] = rv
                comps -= 1
                if comps == 1:
                    return True
        return False

    def rec(pos: int, ncomp: int, parent: list[int]) -> None:
        if ncomp == 1:
            out.append(frozenset(chosen))
            return
        if pos == total or total - pos < ncomp - 1:
            return
        u, v = edges[pos]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv:
            child = parent[:]
            child[ru] = rv
            chosen.append(pos)
            rec(pos + 1, ncomp - 1, child)
            chosen.pop()
        if still_connectable(pos + 1):
            rec(pos + 1, ncomp, parent)

    rec(0, n, list(range(n)))
    out.sort(key=lambda s: tuple(sorted(s)))
    return out


# ---------------------------------------------------------------------------
# Structured enumeration for J(2,m)


def _classify_spoke_set(deleted_spokes: set[int], m: int) -> TreeClass:
    rho = len(deleted_spokes)
    if rho == 0:
        return TreeClass.KEEP_ALL_SPOKES
    if rho == 1:
        return TreeClass.DROP_ONE_SPOKE
    runs = cyclic_runs(deleted_spokes, m)
    if len(runs) == 1:
        return TreeClass.DROP_RUN
    if len(runs) == rho:
        return TreeClass.DROP_SCATTERED
    return TreeClass.DROP_MIXED


def _rim_pools(deleted_spokes: set[int], m: int) -> list[list[int]]:
    """One pool of candidate rim deletions per constraint: each maximal
    run of deleted spokes merges the run's cycles with the one before
    it and demands exactly one rim deletion from the merged cycle; each
    untouched cycle demands one of its own two rim edges."""
    pools: list[list[int]] = []
    covered: set[int] = set()
    for run in cyclic_runs(deleted_spokes, m):
        first = run[0] - 1 if run[0] > 1 else m
        merged = [first] + run
        covered.update(merged)
        pool: list[int] = []
        for j in merged:
            pool.extend(rim_indices(j, m))
        pools.append(pool)
    pools.extend(list(rim_indices(j, m))
                 for j in range(1, m + 1) if j not in covered)
    return pools


def enumerate_spanning_trees_jahangir(m: int) -> list[SpanningTreeRecord]:
    """All spanning trees of J(2,m) by the cutting-down rules, in a
    deterministic order (deleted-spoke count, then lexicographic)."""
    if m < 3:
        raise InvalidParameterError(f"m must be >= 3, got {m}")
    every_edge = frozenset(range(3 * m))
    records: list[SpanningTreeRecord] = []
    for rho in range(m):  # never all m spokes
        for spokes in itertools.combinations(range(1, m + 1), rho):
            deleted = set(spokes)
            cls = _classify_spoke_set(deleted, m)
            base = frozenset(spoke_index(j, m) for j in deleted)
            for picks in itertools.product(*_rim_pools(deleted, m)):
                removed = base | frozenset(picks)
                records.append(SpanningTreeRecord(
                    kept=every_edge - removed, removed=removed, tree_class=cls))
    return records


def classify_tree(removed: frozenset[int], m: int) -> TreeClass:
    """Class of the spanning tree whose removed edge set is given.

    Raises ClassificationError unless removed really is the complement
    of a spanning tree of J(2,m).
    """
    if m < 3:
        raise InvalidParameterError(f"m must be >= 3, got {m}")
    g = build_jahangir(m)
    if len(removed) != m or not all(0 <= i < 3 * m for i in removed):
        raise ClassificationError(f"not an m-edge cut set: {sorted(removed)}")
    kept = [g.edges[i] for i in range(3 * m) if i not in removed]
    sub = Graph(g.vertex_count, tuple(kept))
    # 2m edges on 2m+1 vertices: connected implies spanning tree
    if not is_connected(sub):
        raise ClassificationError(
            f"complement of {sorted(removed)} is not a spanning tree")
    deleted_spokes = {j for j in range(1, m + 1) if spoke_index(j, m) in removed}
    return _classify_spoke_set(deleted_spokes, m)


@dataclass(frozen=True)
class PartitionReport:
    m: int
    class_counts: tuple[tuple[str, int], ...]
    total: int
    generic_total: int
    disjoint: bool
    union_matches: bool
    missing: tuple[frozenset[int], ...]   # generic trees no record produced
    extra: tuple[frozenset[int], ...]     # records outside the generic set

    @property
    def ok(self) -> bool:
        return self.disjoint and self.union_matches


def verify_partition(m: int) -> PartitionReport:
    """Check the structured classes against the generic oracle: classes
    pairwise disjoint, union equal to the generic enumeration. Failures
    land in the report, not in an exception."""
    records = enumerate_spanning_trees_jahangir(m)
    generic = enumerate_spanning_trees_generic(build_jahangir(m))
    counts = {cls: 0 for cls in TreeClass}
    seen: dict[frozenset[int], TreeClass] = {}
    disjoint = True
    for rec in records:
        counts[rec.tree_class] += 1
        if rec.kept in seen:
            disjoint = False
        seen[rec.kept] = rec.tree_class
    generic_set = set(generic)
    missing = tuple(sorted((t for t in generic_set if t not in seen),
                           key=lambda s: tuple(sorted(s))))
    extra = tuple(sorted((t for t in seen if t not in generic_set),
                         key=lambda s: tuple(sorted(s))))
    return PartitionReport(
        m=m,
        class_counts=tuple((cls.value, counts[cls]) for cls in TreeClass),
        total=len(records),
        generic_total=len(generic),
        disjoint=disjoint,
        union_matches=not missing and not extra and len(records) == len(generic),
        missing=missing,
        extra=extra)
