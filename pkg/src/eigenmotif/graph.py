"""Immutable simple undirected graphs and the motif/vertex-map vocabulary.

Vertices are the contiguous integers ``0 .. n-1``.  Graphs are simple
(no self-loops, no parallel edges) and unweighted; every evolution
operation returns a new graph plus a vertex map rather than mutating.
Dense spectral routines downstream keep practical sizes to a few
thousand vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class PreconditionError(Exception):
    """A structural precondition of an operation does not hold."""


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("_n", "_adj", "_degrees", "_edge_count")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or n <= 0:
            raise ValueError("vertex count must be a positive integer")
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        count = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} rejected")
            if v in neighbor_sets[u]:
                continue  # duplicate edge, keep the graph simple
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
            count += 1
        self._n = n
        self._adj = tuple(tuple(sorted(s)) for s in neighbor_sets)
        self._degrees = tuple(len(s) for s in self._adj)
        self._edge_count = count

    @property
    def n(self) -> int:
        return self._n

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    @property
    def num_edges(self) -> int:
        return self._edge_count

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        return tuple((u, v) for u in range(self._n) for v in self._adj[u] if u < v)

    def is_complete(self) -> bool:
        return self._edge_count == self._n * (self._n - 1) // 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._edge_count})"


def build_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Validate and build a graph from a vertex count and an edge list."""
    return Graph(n, edges)


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = [False] * g.n
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        members = []
        while stack:
            u = stack.pop()
            members.append(u)
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        components.append(sorted(members))
    return components


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def is_bipartite(g: Graph) -> bool:
    """Two-coloring test via breadth-first search, per component."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            nxt = []
            for u in queue:
                for w in g.neighbors(u):
                    if color[w] == -1:
                        color[w] = color[u] ^ 1
                        nxt.append(w)
                    elif color[w] == color[u]:
                        return False
            queue = nxt
    return True


@dataclass(frozen=True)
class Motif:
    """An induced subgraph given by an ordered tuple of distinct host vertices.

    Exposes the internal edge structure and, per member, the neighbors
    that lie outside the motif.  Ordering matters: it fixes the layout of
    copies made by the doubling operations.
    """

    host: Graph
    vertices: tuple[int, ...]
    internal_edges: tuple[tuple[int, int], ...] = field(init=False)
    external_neighbors: tuple[tuple[int, ...], ...] = field(init=False)

    def __post_init__(self):
        if len(self.vertices) == 0:
            raise ValueError("motif needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("motif vertices must be distinct")
        for v in self.vertices:
            if not (0 <= v < self.host.n):
                raise ValueError(f"motif vertex {v} out of range")
        inside = set(self.vertices)
        internal = []
        external = []
        for a_pos, v in enumerate(self.vertices):
            ext = tuple(w for w in self.host.neighbors(v) if w not in inside)
            external.append(ext)
            for b_pos in range(a_pos + 1, len(self.vertices)):
                if self.host.has_edge(v, self.vertices[b_pos]):
                    internal.append((a_pos, b_pos))
        object.__setattr__(self, "internal_edges", tuple(internal))
        object.__setattr__(self, "external_neighbors", tuple(external))

    def __len__(self) -> int:
        return len(self.vertices)

    def position(self, v: int) -> int:
        return self.vertices.index(v)

    def host_degrees(self) -> tuple[int, ...]:
        """Degrees of the motif members in the host graph."""
        return tuple(self.host.degree(v) for v in self.vertices)


def induced_motif(g: Graph, vertices: Sequence[int]) -> Motif:
    """The motif induced by ``vertices`` in ``g`` (order preserved)."""
    return Motif(g, tuple(vertices))


@dataclass(frozen=True)
class VertexMap:
    """Where each input vertex of an operation landed, plus the added vertices.

    ``images[v]`` is the output label of input vertex ``v`` (injective);
    ``new_by_round`` lists the vertices created by each round of the
    operation, in creation order.  Images and new vertices together
    partition the output vertex set.
    """

    images: tuple[int, ...]
    new_by_round: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if len(set(self.images)) != len(self.images):
            raise ValueError("vertex map images must be injective")
        flat = [v for rnd in self.new_by_round for v in rnd]
        if set(flat) & set(self.images):
            raise ValueError("new vertices must be disjoint from images")

    @property
    def new_vertices(self) -> tuple[int, ...]:
        return tuple(v for rnd in self.new_by_round for v in rnd)

    def output_size(self) -> int:
        return len(self.images) + len(self.new_vertices)


def identity_map(n: int, new_by_round: tuple[tuple[int, ...], ...] = ()) -> VertexMap:
    return VertexMap(tuple(range(n)), new_by_round)


@dataclass(frozen=True)
class DuplicateClasses:
    """Partition of the vertex set by equal open neighborhoods."""

    classes: tuple[tuple[int, ...], ...]
    multiplicity_bound: int


def duplicate_vertex_classes(g: Graph) -> DuplicateClasses:
    """Group vertices with identical open neighborhoods.

    Two vertices in one class see exactly the same set of other vertices
    (and are therefore themselves non-adjacent).  Each class of size k
    contributes k-1 to a lower bound on the multiplicity of eigenvalue 1
    of the normalized Laplacian.
    """
    buckets: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.n):
        buckets.setdefault(g.neighbors(v), []).append(v)
    classes = tuple(tuple(sorted(members)) for _, members in sorted(
        buckets.items(), key=lambda item: item[1][0]))
    bound = sum(len(c) - 1 for c in classes)
    return DuplicateClasses(classes, bound)


# ---------------------------------------------------------------------------
# edge-list text format: first line "n m", then m lines "u v"; '#' comments


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: expected two integers, got {line!r}") from None
    if not rows:
        raise ValueError("missing header line 'n m'")
    n, m = rows[0]
    edges = rows[1:]
    if len(edges) != m:
        raise ValueError(f"header promises {m} edges, found {len(edges)}")
    return Graph(n, edges)


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(g))


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())
