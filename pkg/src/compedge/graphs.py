"""Finite simple graphs on labeled vertices, their small invariants, and I/O.

Vertices are 0-based integers 0..n-1 everywhere in code; the two text
formats (graph6, edge lists) and report output are 1-based, matching the
usual convention for vertex sets written as [n].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

DEFAULT_CENSUS_LIMIT = 6
DEFAULT_ISO_LIMIT = 8


def _normalize_edge(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """A finite simple graph: vertex count plus a set of unordered edges."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(self.edges))
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < j < self.n):
                raise ValueError(f"edge {e} not a sorted pair inside range(0, {self.n})")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from 0-based endpoint pairs in either order."""
        return Graph(n, frozenset(_normalize_edge(i, j) for i, j in edges))

    def has_edge(self, i: int, j: int) -> bool:
        return _normalize_edge(i, j) in self.edges

    def degree(self, i: int) -> int:
        return sum(1 for e in self.edges if i in e)

    def neighbors(self, i: int) -> set[int]:
        return {j for e in self.edges for j in e if i in e and j != i}

    def is_isolated(self, i: int) -> bool:
        return all(i not in e for e in self.edges)

    @property
    def isolated_vertices(self) -> frozenset[int]:
        touched = {v for e in self.edges for v in e}
        return frozenset(v for v in range(self.n) if v not in touched)

    def degree_sequence(self) -> tuple[int, ...]:
        degs = [0] * self.n
        for i, j in self.edges:
            degs[i] += 1
            degs[j] += 1
        return tuple(sorted(degs))

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges as sorted 1-based pairs, for display and serialization."""
        return [(i + 1, j + 1) for i, j in sorted(self.edges)]

    def __str__(self) -> str:
        es = ", ".join(f"{{{i},{j}}}" for i, j in self.edge_list())
        return f"Graph(n={self.n}, edges=[{es}])"


# ---------------------------------------------------------------------------
# standard families


def complete_graph(n: int) -> Graph:
    """K_n."""
    if n < 1:
        raise ValueError("K_n needs n >= 1")
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def path_graph(n: int) -> Graph:
    """P_n, edges {i, i+1}."""
    if n < 1:
        raise ValueError("P_n needs n >= 1")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    """C_n, the path closed up with the edge {n, 1}."""
    if n < 3:
        raise ValueError("C_n needs n >= 3")
    edges = {(i, i + 1) for i in range(n - 1)}
    edges.add((0, n - 1))
    return Graph(n, frozenset(edges))


def matching_graph(t: int) -> Graph:
    """tK_2: t disjoint edges on 2t vertices."""
    if t < 1:
        raise ValueError("tK_2 needs t >= 1")
    return Graph(2 * t, frozenset((2 * i, 2 * i + 1) for i in range(t)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union, with h's vertices shifted past g's."""
    shifted = {(i + g.n, j + g.n) for i, j in h.edges}
    return Graph(g.n + h.n, g.edges | frozenset(shifted))


def with_isolated(g: Graph, count: int) -> Graph:
    """Append ``count`` isolated vertices after the existing ones."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    return Graph(g.n + count, g.edges)


# ---------------------------------------------------------------------------
# components, bipartiteness, complement, triangles


@dataclass(frozen=True)
class ComponentSummary:
    """Connected components with the bipartite bookkeeping used throughout.

    b counts bipartite components including isolated vertices, b_tilde only
    those with more than one vertex, c the components with more than one
    vertex regardless of bipartiteness.
    """

    components: tuple[frozenset[int], ...]
    b: int
    b_tilde: int
    c: int
    isolated: frozenset[int]


def component_summary(g: Graph) -> ComponentSummary:
    """Components by graph search; bipartite means 2-colorable."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for i, j in g.edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = [False] * g.n
    comps: list[frozenset[int]] = []
    bipartite_flags: list[bool] = []
    for start in range(g.n):
        if seen[start]:
            continue
        color = {start: 0}
        seen[start] = True
        queue = [start]
        bipartite = True
        members = [start]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    seen[w] = True
                    members.append(w)
                    queue.append(w)
                elif color[w] == color[v]:
                    bipartite = False
        comps.append(frozenset(members))
        bipartite_flags.append(bipartite)
    isolated = frozenset(v for comp in comps if len(comp) == 1 for v in comp)
    b = sum(1 for f in bipartite_flags if f)
    b_tilde = sum(
        1 for comp, f in zip(comps, bipartite_flags) if f and len(comp) > 1
    )
    c = sum(1 for comp in comps if len(comp) > 1)
    return ComponentSummary(tuple(comps), b, b_tilde, c, isolated)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``vertices``, relabeled onto 0..|F|-1.

    Returns the subgraph together with the order-preserving map back: entry
    k of the returned tuple is the original label of new vertex k.
    """
    vs = sorted(set(vertices))
    if not vs:
        raise ValueError("vertex subset must be nonempty")
    if vs[0] < 0 or vs[-1] >= g.n:
        raise ValueError(f"vertices {vs} out of range for n={g.n}")
    index = {v: k for k, v in enumerate(vs)}
    edges = frozenset(
        (index[i], index[j]) for i, j in g.edges if i in index and j in index
    )
    return Graph(len(vs), edges), tuple(vs)


def complement(g: Graph) -> Graph:
    """Complement on the same vertex set."""
    all_pairs = {(i, j) for i in range(g.n) for j in range(i + 1, g.n)}
    return Graph(g.n, frozenset(all_pairs - g.edges))


def triangles(g: Graph) -> set[frozenset[int]]:
    """All 3-subsets of vertices that are pairwise adjacent."""
    out = set()
    for i, j, k in itertools.combinations(range(g.n), 3):
        if g.has_edge(i, j) and g.has_edge(i, k) and g.has_edge(j, k):
            out.add(frozenset((i, j, k)))
    return out


# ---------------------------------------------------------------------------
# isomorphism and enumeration


def is_isomorphic(g: Graph, h: Graph, limit: int = DEFAULT_ISO_LIMIT) -> bool:
    """Exhaustive isomorphism test with degree pruning; meant for small n."""
    if g.n > limit or h.n > limit:
        raise ValueError(f"isomorphism brute force limited to n <= {limit}")
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    gdeg = [g.degree(v) for v in range(g.n)]
    hdeg = [h.degree(v) for v in range(h.n)]
    hedges = h.edges

    # map g-vertices one at a time, most constrained (highest degree) first
    order = sorted(range(g.n), key=lambda v: -gdeg[v])

    def extend(pos: int, mapping: dict[int, int], used: set[int]) -> bool:
        if pos == g.n:
            return True
        v = order[pos]
        for w in range(h.n):
            if w in used or hdeg[w] != gdeg[v]:
                continue
            ok = True
            for u in mapping:
                if (_normalize_edge(u, v) in g.edges) != (
                    _normalize_edge(mapping[u], w) in hedges
                ):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if extend(pos + 1, mapping, used):
                    return True
                del mapping[v]
                used.remove(w)
        return False

    return extend(0, {}, set())


def _pair_order(n: int) -> list[tuple[int, int]]:
    """Upper-triangle pairs column by column: (0,1),(0,2),(1,2),(0,3),..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def enumerate_labeled_graphs(
    n: int, limit: int = DEFAULT_CENSUS_LIMIT
) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices, bitmask ascending.

    Bit k of the mask toggles the k-th pair in column-major upper-triangle
    order, the same order used by the graph6 encoding.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n > limit:
        raise ValueError(f"census limited to n <= {limit}")
    pairs = _pair_order(n)
    for mask in range(1 << len(pairs)):
        edges = frozenset(p for k, p in enumerate(pairs) if mask >> k & 1)
        yield Graph(n, edges)


# ---------------------------------------------------------------------------
# graph6 (n <= 62 only) and edge-list text formats


def to_graph6(g: Graph) -> str:
    """Encode as graph6: byte n+63, then the upper-triangle bits, 6 per byte."""
    if g.n > 62:
        raise ValueError("graph6 writer supports n <= 62 only")
    bits = [1 if p in g.edges else 0 for p in _pair_order(g.n)]
    while len(bits) % 6 != 0:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Decode a graph6 string; strict about length, padding, and byte range."""
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<") :]
    if not text:
        raise ValueError("empty graph6 string")
    codes = [ord(ch) for ch in text]
    if any(c < 63 or c > 126 for c in codes):
        raise ValueError("graph6 bytes must lie in [63, 126]")
    n = codes[0] - 63
    if n == 63:
        raise ValueError("graph6 extended (n > 62) encodings are not supported")
    if n < 1:
        raise ValueError("graph6 graph needs at least one vertex")
    npairs = n * (n - 1) // 2
    expected = (npairs + 5) // 6
    body = codes[1:]
    if len(body) != expected:
        raise ValueError(
            f"graph6 body has {len(body)} bytes, expected {expected} for n={n}"
        )
    bits: list[int] = []
    for c in body:
        val = c - 63
        bits.extend(val >> (5 - t) & 1 for t in range(6))
    if any(bits[npairs:]):
        raise ValueError("graph6 padding bits must be zero")
    pairs = _pair_order(n)
    edges = frozenset(p for k, p in enumerate(pairs) if bits[k])
    return Graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain text format: a header line ``n <count>`` then one
    1-based ``i j`` pair per line."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"header must be 'n <count>', got {lines[0]!r}")
    try:
        n, count = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ValueError(f"bad header {lines[0]!r}") from exc
    if n < 1:
        raise ValueError("need n >= 1")
    if len(lines) - 1 != count:
        raise ValueError(f"expected {count} edge lines, found {len(lines) - 1}")
    edges: set[tuple[int, int]] = set()
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        try:
            i, j = int(toks[0]), int(toks[1])
        except ValueError as exc:
            raise ValueError(f"bad edge line {ln!r}") from exc
        if i == j:
            raise ValueError(f"loop edge {i} {j}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"edge {i} {j} out of range 1..{n}")
        e = _normalize_edge(i - 1, j - 1)
        if e in edges:
            raise ValueError(f"duplicate edge {i} {j}")
        edges.add(e)
    return Graph(n, frozenset(edges))


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{i} {j}" for i, j in g.edge_list())
    return "\n".join(lines) + "\n"
