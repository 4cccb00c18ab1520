"""Finite simple graphs, vertex covers, class predicates and graph families.

Vertices are the indices ``0..n-1``; each carries a label (``x1``, ``x2``, ...
by default) that survives vertex deletion, so ideals built on subgraphs can be
matched back to the ambient ring by name. Vertex sets are plain frozensets of
indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator

from ._rng import SplitMix64, as_probability

VertexSet = frozenset

MAX_ENUMERATION_VERTICES = 8


class GraphFormatError(ValueError):
    """Malformed edge-list input."""


def _normalize_edge(e) -> tuple[int, int]:
    i, j = e
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = frozenset()
    labels: tuple = ()
    name: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = set()
        for e in self.edges:
            i, j = _normalize_edge(e)
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if i < 0 or j >= self.n:
                raise ValueError(f"edge {e} has an endpoint outside [0, {self.n})")
            edges.add((i, j))
        object.__setattr__(self, "edges", frozenset(edges))
        labels = tuple(self.labels) or tuple(f"x{i + 1}" for i in range(self.n))
        if len(labels) != self.n or len(set(labels)) != self.n:
            raise ValueError("labels must be n distinct names")
        object.__setattr__(self, "labels", labels)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks, one int per vertex."""
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return tuple(adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return _normalize_edge((i, j)) in self.edges

    def degree(self, v: int) -> int:
        _check_vertex(self, v)
        return self.adjacency[v].bit_count()

    def isolated_vertices(self) -> VertexSet:
        return VertexSet(v for v in range(self.n) if not self.adjacency[v])

    def graph_id(self) -> str:
        if self.name:
            return self.name
        body = ",".join(f"{i + 1}-{j + 1}" for i, j in self.sorted_edges())
        return f"n{self.n}[{body}]"

    def __repr__(self) -> str:
        return f"Graph({self.graph_id()})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for a graph on {g.n} vertices")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def neighbors(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return VertexSet(_bits(g.adjacency[v]))


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    return neighbors(g, v) | {v}


def delete_vertices(g: Graph, a: Iterable[int]) -> Graph:
    """The induced subgraph on ``V(g) - a``; isolated vertices are kept."""
    a = set(a)
    for v in a:
        _check_vertex(g, v)
    keep = [v for v in range(g.n) if v not in a]
    index = {v: i for i, v in enumerate(keep)}
    edges = {(index[i], index[j]) for i, j in g.edges if i in index and j in index}
    return Graph(len(keep), frozenset(edges), tuple(g.labels[v] for v in keep))


def drop_isolated(g: Graph) -> Graph:
    iso = g.isolated_vertices()
    if not iso:
        return g
    h = delete_vertices(g, iso)
    return Graph(h.n, h.edges, h.labels, name=g.name)


def maximal_independent_sets(g: Graph) -> list[VertexSet]:
    """All maximal independent sets (Bron-Kerbosch with pivoting on the complement)."""
    full = (1 << g.n) - 1
    # non-neighbours of v, excluding v itself
    comp = [full & ~g.adjacency[v] & ~(1 << v) for v in range(g.n)]
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        pivot = max(_bits(p | x), key=lambda u: (comp[u] & p).bit_count())
        for v in _bits(p & ~comp[pivot]):
            expand(r | (1 << v), p & comp[v], x & comp[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, full, 0)
    return [VertexSet(_bits(s)) for s in sorted(found)]


def minimal_vertex_covers(g: Graph) -> list[VertexSet]:
    """Minimal vertex covers, as complements of maximal independent sets.

    Sorted by (size, members). An edgeless graph has the single cover ``{}``.
    """
    everything = VertexSet(range(g.n))
    covers = [everything - s for s in maximal_independent_sets(g)]
    return sorted(covers, key=lambda c: (len(c), sorted(c)))


def independence_number(g: Graph) -> int:
    return max(len(s) for s in maximal_independent_sets(g))


def is_bipartite(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """A bipartition ``(A, B)`` found by BFS two-colouring, or None.

    Each component's lowest vertex (in particular every isolated vertex)
    goes to ``A``.
    """
    color: dict[int, int] = {}
    for start in range(g.n):
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        for u in queue:
            for w in _bits(g.adjacency[u]):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    a = VertexSet(v for v, c in color.items() if c == 0)
    return a, VertexSet(range(g.n)) - a


def is_unmixed(g: Graph) -> bool:
    return len({len(c) for c in minimal_vertex_covers(g)}) == 1


def is_claw_free(g: Graph) -> bool:
    adj = g.adjacency
    for v in range(g.n):
        for a, b, c in itertools.combinations(_bits(adj[v]), 3):
            if not (adj[a] >> b) & 1 and not (adj[a] >> c) & 1 and not (adj[b] >> c) & 1:
                return False
    return True


def max_cover_size(g: Graph) -> int:
    return max(len(c) for c in minimal_vertex_covers(g))


# --- named families -------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete(n) needs n >= 1")
    return Graph(n, frozenset(itertools.combinations(range(n), 2)), name=f"K_{n}")


def complete_bipartite(a: int, b: int) -> Graph:
    """Parts ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite(a, b) needs a, b >= 1")
    edges = frozenset((i, a + j) for i in range(a) for j in range(b))
    return Graph(a + b, edges, name=f"K_{{{a},{b}}}")


def star(n: int) -> Graph:
    """``K_{1,n}`` with the centre at vertex 0."""
    return complete_bipartite(1, n)


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path(n) needs n >= 1")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)), name=f"P_{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle(n) needs n >= 3")
    edges = frozenset((i, (i + 1) % n) for i in range(n))
    return Graph(n, edges, name=f"C_{n}")


def pendant_blowup(n: int, s: int) -> Graph:
    """``K_n`` with ``s`` pendant edges at every vertex.

    The clique occupies ``0..n-1``; the leaves of clique vertex ``i`` are
    ``n + i*s .. n + i*s + s - 1``.
    """
    if n < 3 or s < 2:
        raise ValueError("pendant_blowup(n, s) needs n >= 3 and s >= 2")
    edges = set(itertools.combinations(range(n), 2))
    for i in range(n):
        edges.update((i, n + i * s + t) for t in range(s))
    return Graph(n + n * s, frozenset(edges), name=f"G_{{{n},{s}}}")


def cone(h: Graph) -> Graph:
    """Join a new apex, placed last, to every vertex of ``h``."""
    apex = h.n
    edges = set(h.edges) | {(v, apex) for v in range(h.n)}
    label = f"x{h.n + 1}"
    while label in h.labels:
        label += "'"
    name = f"cone({h.graph_id()})"
    return Graph(h.n + 1, frozenset(edges), h.labels + (label,), name=name)


def edgeless(n: int) -> Graph:
    return Graph(n, frozenset(), name=f"E_{n}")


# --- enumeration ----------------------------------------------------------


def _refined_colors(n: int, adj: list[int]) -> list[int]:
    """Colour refinement from degrees; colours are isomorphism-invariant."""
    colors = [a.bit_count() for a in adj]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in _bits(adj[v])))) for v in range(n)]
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _code(n: int, adj: list[int], order: tuple[int, ...]) -> int:
    code = 0
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | ((row >> order[j]) & 1)
    return code


def canonical_code(g: Graph) -> int:
    """Minimum upper-triangle adjacency bit string over colour-respecting orders.

    Vertices are grouped by refined colour and permuted only within their
    colour class, which keeps the minimisation invariant under isomorphism
    while avoiding the full ``n!`` scan.
    """
    n, adj = g.n, list(g.adjacency)
    if n == 0:
        return 0
    colors = _refined_colors(n, adj)
    cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in cells)):
        order = tuple(itertools.chain.from_iterable(parts))
        code = _code(n, adj, order)
        if best is None or code < best:
            best = code
    return best


def brute_force_canonical_code(g: Graph) -> int:
    """Minimum adjacency bit string over all ``n!`` orders (slow reference)."""
    adj = list(g.adjacency)
    return min(_code(g.n, adj, p) for p in itertools.permutations(range(g.n)))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen, frontier = 1, 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adjacency[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def _from_code(n: int, code: int) -> Graph:
    edges = []
    bit = n * (n - 1) // 2 - 1
    for i in range(n):
        for j in range(i + 1, n):
            if (code >> bit) & 1:
                edges.append((i, j))
            bit -= 1
    return Graph(n, frozenset(edges))


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class of graphs on ``n`` vertices.

    Classes are grown one vertex at a time (every class on ``n`` vertices
    arises by adding a vertex to some class on ``n - 1``), deduplicated by
    :func:`canonical_code`. Output is sorted by (edge count, code) and each
    representative is the canonical relabelling.
    """
    if n < 0 or n > MAX_ENUMERATION_VERTICES:
        raise ValueError(f"enumerate_graphs supports 0 <= n <= {MAX_ENUMERATION_VERTICES}")
    codes = {0}
    for size in range(1, n + 1):
        nxt = set()
        for code in codes:
            base = _from_code(size - 1, code)
            for nbrs in range(1 << (size - 1)):
                edges = set(base.edges) | {(u, size - 1) for u in _bits(nbrs)}
                nxt.add(canonical_code(Graph(size, frozenset(edges))))
        codes = nxt
    for code in sorted(codes, key=lambda c: (c.bit_count(), c)):
        g = _from_code(n, code)
        if connected_only and not is_connected(g):
            continue
        yield g


def random_graph(n: int, p, seed: int) -> Graph:
    """G(n, p) driven by SplitMix64; edges are drawn in lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    q = as_probability(p)
    rng = SplitMix64(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.bernoulli(q)]
    return Graph(n, frozenset(edges), name=f"G({n},{q},seed={seed})")


# --- edge-list text format ------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of 1-based ``i j`` pairs.

    Blank lines and ``#`` comments are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            rows.append((lineno, line))
    if not rows:
        raise GraphFormatError("empty input: expected header line 'n m'")

    def ints(lineno: int, line: str) -> tuple[int, int]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}") from None

    lineno, header = rows[0]
    n, m = ints(lineno, header)
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lineno}: counts must be non-negative")
    if len(rows) - 1 != m:
        raise GraphFormatError(f"line {lineno}: header announces {m} edges, found {len(rows) - 1}")
    edges: set[tuple[int, int]] = set()
    for lineno, line in rows[1:]:
        i, j = ints(lineno, line)
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphFormatError(f"line {lineno}: vertex index out of range 1..{n}")
        if i == j:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {i}")
        e = _normalize_edge((i - 1, j - 1))
        if e in edges:
            raise GraphFormatError(f"line {lineno}: duplicate edge {i} {j}")
        edges.add(e)
    return Graph(n, frozenset(edges))


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{i + 1} {j + 1}" for i, j in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    p = Path(path)
    g = parse_edge_list(p.read_text())
    return Graph(g.n, g.edges, g.labels, name=p.stem)
