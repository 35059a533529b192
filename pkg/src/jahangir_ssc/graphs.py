"""Labeled simple graphs, the Jahangir family J(2,m), and the two
ground-truth oracles everything else is checked against: an exact
fraction-free spanning-tree count and exhaustive simple-cycle
enumeration.

The edge order of J(2,m) is fixed once and for all, cycle by cycle with
the spoke first: index 3*(k-1) is the k-th spoke (hub to rim), followed
by the two rim edges of cycle k. Vertices are numbered hub = 0, rim
1..2m clockwise starting at the far end of the first spoke. Bitmask
encodings, emitted documents, and every golden value in the test suite
depend on this order staying put.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import CapacityError, GraphParseError, InvalidParameterError

# Edge-index sets (frozensets of int) are the universal currency for
# cycles, facets, faces, and monomial supports.
EdgeSet = frozenset

HUB = 0

# Cycle-space enumeration walks 2^mu masks; mu above this is refused.
MAX_INDEPENDENT_CYCLES = 26


@dataclass(frozen=True)
class EdgeLabel:
    """Label e{j}{i}: j is the cycle index, i the position within the
    cycle (1 = spoke shared with the hub, 2 and 3 = rim edges)."""

    j: int
    i: int

    def __post_init__(self) -> None:
        if self.j < 1:
            raise InvalidParameterError(f"cycle index must be >= 1, got {self.j}")
        if not 1 <= self.i <= 3:
            raise InvalidParameterError(f"position index must be in 1..3, got {self.i}")

    def __str__(self) -> str:
        return f"e{self.j}{self.i}"

    @classmethod
    def parse(cls, text: str) -> "EdgeLabel":
        # The position is always a single digit, so the final digit is i
        # and everything between "e" and it is j. Unambiguous for any m.
        if len(text) < 3 or text[0] != "e" or not text[1:].isdigit():
            raise InvalidParameterError(f"bad edge label {text!r}")
        return cls(j=int(text[1:-1]), i=int(text[-1]))


def _normalize(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with an ordered edge list.

    Immutable after construction; all operations in this package are
    pure functions over it. Labels, when present, parallel the edge
    list one to one.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[EdgeLabel, ...] | None = None

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise InvalidParameterError("vertex count must be nonnegative")
        seen: set[tuple[int, int]] = set()
        for pos, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidParameterError(
                    f"edges[{pos}]: endpoint out of range in ({u}, {v})")
            if u == v:
                raise InvalidParameterError(f"edges[{pos}]: loop at vertex {u}")
            key = _normalize(u, v)
            if key in seen:
                raise InvalidParameterError(f"edges[{pos}]: duplicate edge ({u}, {v})")
            seen.add(key)
        if self.labels is not None:
            if len(self.labels) != len(self.edges):
                raise InvalidParameterError(
                    f"label count {len(self.labels)} != edge count {len(self.edges)}")
            if len(set(self.labels)) != len(self.labels):
                raise InvalidParameterError("duplicate edge labels")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Adjacency lists of (neighbor, edge index) pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for idx, (u, v) in enumerate(self.edges):
            adj[u].append((v, idx))
            adj[v].append((u, idx))
        return adj

    def index_of_label(self, label: EdgeLabel) -> int:
        if self.labels is None:
            raise InvalidParameterError("graph has no edge labels")
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidParameterError(f"no edge labeled {label}") from None

    def label_of(self, index: int) -> EdgeLabel:
        if self.labels is None:
            raise InvalidParameterError("graph has no edge labels")
        return self.labels[index]


# ---------------------------------------------------------------------------
# Jahangir construction and its fixed edge indexing


def spoke_index(j: int, m: int) -> int:
    """Edge index of the j-th spoke (j taken cyclically in 1..m)."""
    return 3 * ((j - 1) % m)


def rim_indices(j: int, m: int) -> tuple[int, int]:
    """Edge indices of the two rim edges belonging to cycle j."""
    base = 3 * ((j - 1) % m)
    return (base + 1, base + 2)


def base_cycle_indices(j: int, m: int) -> frozenset[int]:
    """Edge set of the j-th base cycle: its spoke, its two rim edges,
    and the next spoke (wrapping after m)."""
    return frozenset((spoke_index(j, m), *rim_indices(j, m), spoke_index(j + 1, m)))


def build_jahangir(m: int) -> Graph:
    """The graph J(2,m): a 2m-cycle plus a hub joined to every second
    rim vertex. 2m+1 vertices, 3m labeled edges."""
    if m < 3:
        raise InvalidParameterError(f"m must be >= 3, got {m}")
    edges: list[tuple[int, int]] = []
    labels: list[EdgeLabel] = []
    for k in range(1, m + 1):
        a = 2 * k - 1          # rim vertex hit by the k-th spoke
        b = 2 * k              # midpoint of the k-th rim arc
        c = 2 * k + 1 if k < m else 1
        edges.append((HUB, a))
        edges.append((a, b))
        edges.append((b, c))
        labels.extend(EdgeLabel(k, i) for i in (1, 2, 3))
    return Graph(2 * m + 1, tuple(edges), tuple(labels))


def jahangir_order(g: Graph) -> int | None:
    """Return m when g is structurally J(2,m) under the canonical vertex
    numbering (edge order may differ), else None."""
    if g.vertex_count < 7 or g.vertex_count % 2 == 0:
        return None
    m = (g.vertex_count - 1) // 2
    if g.edge_count != 3 * m:
        return None
    want = {_normalize(u, v) for u, v in build_jahangir(m).edges}
    have = {_normalize(u, v) for u, v in g.edges}
    return m if want == have else None


# ---------------------------------------------------------------------------
# Document format: {"vertices": N, "edges": [[u, v], ...], "labels": [...]}


def parse_graph(text: str) -> Graph:
    """Parse the JSON graph document format.

    Malformed documents raise GraphParseError naming the offending
    entry; structural violations (loops, duplicates) are reported the
    same way.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"line {exc.lineno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise GraphParseError("document root must be an object")
    unknown = set(doc) - {"vertices", "edges", "labels"}
    if unknown:
        raise GraphParseError(f"unknown keys: {sorted(unknown)}")
    if not isinstance(doc.get("vertices"), int) or isinstance(doc.get("vertices"), bool):
        raise GraphParseError('"vertices" must be an integer')
    raw_edges = doc.get("edges")
    if not isinstance(raw_edges, list):
        raise GraphParseError('"edges" must be a list of [u, v] pairs')
    edges: list[tuple[int, int]] = []
    for pos, item in enumerate(raw_edges):
        ok = (isinstance(item, list) and len(item) == 2
              and all(isinstance(x, int) and not isinstance(x, bool) for x in item))
        if not ok:
            raise GraphParseError(f"edges[{pos}]: expected a pair of integers, got {item!r}")
        edges.append((item[0], item[1]))
    labels: tuple[EdgeLabel, ...] | None = None
    if "labels" in doc:
        raw_labels = doc["labels"]
        if not isinstance(raw_labels, list) or not all(isinstance(s, str) for s in raw_labels):
            raise GraphParseError('"labels" must be a list of strings')
        parsed = []
        for pos, s in enumerate(raw_labels):
            try:
                parsed.append(EdgeLabel.parse(s))
            except InvalidParameterError as exc:
                raise GraphParseError(f"labels[{pos}]: {exc}") from None
        labels = tuple(parsed)
    try:
        return Graph(doc["vertices"], tuple(edges), labels)
    except InvalidParameterError as exc:
        raise GraphParseError(str(exc)) from None


def emit_graph(g: Graph) -> str:
    """Serialize g in the document format; parse_graph round-trips it."""
    doc: dict = {"vertices": g.vertex_count, "edges": [list(e) for e in g.edges]}
    if g.labels is not None:
        doc["labels"] = [str(lab) for lab in g.labels]
    return json.dumps(doc) + "\n"


# ---------------------------------------------------------------------------
# Oracle 1: exact spanning-tree count


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return False
    adj = g.adjacency()
    seen = [False] * g.vertex_count
    stack = [0]
    seen[0] = True
    while stack:
        x = stack.pop()
        for y, _ in adj[x]:
            if not seen[y]:
                seen[y] = True
                stack.append(y)
    return all(seen)


def matrix_tree_count(g: Graph) -> int:
    """Number of spanning trees, as the determinant of a reduced
    Laplacian computed by fraction-free integer elimination.

    Exact for any size; disconnected graphs give 0.
    """
    n = g.vertex_count
    if n == 0:
        raise InvalidParameterError("graph must have at least one vertex")
    if n == 1:
        return 1
    lap = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    mat = [row[1:] for row in lap[1:]]
    size = n - 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if mat[k][k] == 0:
            for r in range(k + 1, size):
                if mat[r][k] != 0:
                    mat[k], mat[r] = mat[r], mat[k]
                    sign = -sign
                    break
            else:
                return 0  # singular: no spanning tree
        for r in range(k + 1, size):
            for c in range(k + 1, size):
                # Bareiss step: division is exact by construction
                mat[r][c] = (mat[r][c] * mat[k][k] - mat[r][k] * mat[k][c]) // prev
            mat[r][k] = 0
        prev = mat[k][k]
    return sign * mat[size - 1][size - 1]


# ---------------------------------------------------------------------------
# Oracle 2: simple-cycle enumeration via the cycle space


def _is_simple_cycle_mask(mask: int, edges: tuple[tuple[int, int], ...]) -> bool:
    # A simple cycle is a connected 2-regular edge subset.
    deg: dict[int, int] = {}
    sub = []
    for i, (u, v) in enumerate(edges):
        if mask >> i & 1:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
            sub.append((u, v))
    if not deg or any(d != 2 for d in deg.values()):
        return False
    adj: dict[int, list[int]] = {x: [] for x in deg}
    for u, v in sub:
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


def enumerate_simple_cycles(g: Graph) -> list[frozenset[int]]:
    """Every simple cycle of g as an edge-index set, each exactly once,
    sorted canonically.

    Strategy: build a spanning forest, take the fundamental cycle of
    each non-tree edge, and scan all xor-combinations, keeping those
    that are connected and 2-regular.
    """
    n, edges = g.vertex_count, g.edges
    adj = g.adjacency()
    parent = [-1] * n
    parent_edge = [-1] * n
    seen = [False] * n
    in_tree = [False] * len(edges)
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        while stack:
            x = stack.pop()
            for y, idx in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    parent_edge[y] = idx
                    in_tree[idx] = True
                    stack.append(y)

    def tree_path_mask(u: int, v: int) -> int:
        # xor of edge bits along the unique forest path from u to v
        chain: dict[int, int] = {}
        x, acc = u, 0
        while x != -1:
            chain[x] = acc
            if parent[x] == -1:
                break
            acc ^= 1 << parent_edge[x]
            x = parent[x]
        x, acc = v, 0
        while x not in chain:
            acc ^= 1 << parent_edge[x]
            x = parent[x]
        return acc ^ chain[x]

    fundamental = [(1 << idx) ^ tree_path_mask(u, v)
                   for idx, (u, v) in enumerate(edges) if not in_tree[idx]]
    if len(fundamental) > MAX_INDEPENDENT_CYCLES:
        raise CapacityError(
            f"cycle space rank {len(fundamental)} exceeds "
            f"{MAX_INDEPENDENT_CYCLES}; exhaustive cycle enumeration refused")
    found: set[int] = set()
    for bits in range(1, 1 << len(fundamental)):
        mask = 0
        b, i = bits, 0
        while b:
            if b & 1:
                mask ^= fundamental[i]
            b >>= 1
            i += 1
        if mask and mask not in found and _is_simple_cycle_mask(mask, edges):
            found.add(mask)
    cycles = [frozenset(i for i in range(len(edges)) if mk >> i & 1) for mk in found]
    cycles.sort(key=lambda s: tuple(sorted(s)))
    return cycles
