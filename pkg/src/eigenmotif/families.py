"""Graph family generators with known spectra, and a worked-example catalog.

Each generator returns the graph together with what is known about its
normalized-Laplacian spectrum: either the complete list of eigenvalues
with multiplicities (coverage "full") or a guaranteed sub-multiset
(coverage "partial").  Values are exact rationals where the family
admits them and floats (cosine formulas) otherwise.

The catalog at the bottom packages small end-to-end constructions with
frozen expected outcomes; the demo CLI command and the verification
suite replay it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import math

import numpy as np

from .graph import Graph, build_graph, connected_components, induced_motif
from .ops import (
    OperationResult,
    attach_subgraph,
    couple_via_neighbors,
    double_motif_repeated,
    double_vertex_repeated,
    motif_doubling_eigenvalues,
)


@dataclass(frozen=True)
class FamilySpec:
    """Recipe for one parametric family member.

    ``n`` is the primary size parameter; ``m`` the secondary block size
    (complete_bipartite, kite); ``p`` the edge probability and ``seed``
    the generator seed for erdos_renyi.
    """

    family: str
    n: int | None = None
    m: int | None = None
    p: float | None = None
    seed: int | None = None


@dataclass(frozen=True)
class ExpectedSpectrum:
    """Known eigenvalues with multiplicities; full or partial coverage."""

    entries: tuple[tuple[object, int], ...]
    coverage: str

    def __post_init__(self):
        if self.coverage not in ("full", "partial"):
            raise ValueError("coverage must be 'full' or 'partial'")
        object.__setattr__(self, "entries",
                           tuple((v, int(c)) for v, c in self.entries if c > 0))

    def floats(self) -> tuple[tuple[float, int], ...]:
        return tuple((float(v), c) for v, c in self.entries)

    @property
    def total_multiplicity(self) -> int:
        return sum(c for _, c in self.entries)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError("path needs at least 2 vertices")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    if leaves < 1:
        raise ValueError("star needs at least 1 leaf")
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both sides need at least 1 vertex")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def kite_graph(m: int, n: int) -> Graph:
    """Complete blocks of sizes m and n joined through one cut vertex.

    Vertex 0 is the cut vertex, vertices 1..m the first block,
    m+1..m+n the second; the cut vertex is adjacent to everything.
    """
    if m < 1 or n < 1:
        raise ValueError("block sizes must be positive")
    edges = [(0, v) for v in range(1, m + n + 1)]
    edges.extend((i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1))
    edges.extend((i, j) for i in range(m + 1, m + n + 1)
                 for j in range(i + 1, m + n + 1))
    return build_graph(m + n + 1, edges)


def star_of_triangles_graph(i: int) -> Graph:
    """``i`` triangles sharing one central vertex (and nothing else).

    Laid out so that the graph literally equals i-1 successive doublings
    of one triangle edge: center 0, triangle l on vertices (2l-1, 2l).
    """
    if i < 1:
        raise ValueError("need at least 1 triangle")
    edges = []
    for block in range(1, i + 1):
        a, b = 2 * block - 1, 2 * block
        edges.extend([(0, a), (0, b), (a, b)])
    return build_graph(2 * i + 1, edges)


def random_connected(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi sample, bridged with random edges until connected.

    Deterministic for a fixed seed: the same (n, p, seed) always yields
    the same graph.
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    if not (0.0 < p <= 1.0):
        raise ValueError("edge probability must be in (0, 1]")
    rng = np.random.default_rng(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    g = build_graph(n, edges)
    while True:
        comps = connected_components(g)
        if len(comps) == 1:
            return g
        a = int(rng.choice(comps[0]))
        other = comps[int(rng.integers(1, len(comps)))]
        b = int(rng.choice(other))
        edges.append((a, b))
        g = build_graph(n, edges)


def _expected_complete(n: int) -> ExpectedSpectrum:
    if n == 1:
        return ExpectedSpectrum(((Fraction(0), 1),), "full")
    return ExpectedSpectrum(((Fraction(0), 1), (Fraction(n, n - 1), n - 1)), "full")


def _expected_kite(m: int, n: int) -> ExpectedSpectrum:
    if m == n:
        return ExpectedSpectrum(
            ((Fraction(0), 1), (Fraction(m + 1, m), 2 * m - 1), (Fraction(1, m), 1)),
            "full")
    return ExpectedSpectrum(
        ((Fraction(0), 1), (Fraction(m + 1, m), m - 1), (Fraction(n + 1, n), n - 1)),
        "partial")


def generate(spec: FamilySpec) -> tuple[Graph, ExpectedSpectrum]:
    """Build a family member and its known spectrum."""
    fam = spec.family
    if fam == "complete":
        n = _require(spec.n, "n")
        return complete_graph(n), _expected_complete(n)
    if fam == "path":
        n = _require(spec.n, "n")
        if n < 2:
            raise ValueError("path family needs n >= 2")
        g = path_graph(n)
        values = [1.0 - math.cos(math.pi * k / (n - 1)) for k in range(n)]
        return g, ExpectedSpectrum(tuple((v, 1) for v in values), "full")
    if fam == "cycle":
        n = _require(spec.n, "n")
        g = cycle_graph(n)
        values = sorted(1.0 - math.cos(2.0 * math.pi * k / n) for k in range(n))
        return g, ExpectedSpectrum(tuple((v, 1) for v in values), "full")
    if fam == "star":
        leaves = _require(spec.n, "n")
        return star_graph(leaves), ExpectedSpectrum(
            ((Fraction(0), 1), (Fraction(1), leaves - 1), (Fraction(2), 1)), "full")
    if fam == "complete_bipartite":
        a, b = _require(spec.m, "m"), _require(spec.n, "n")
        return complete_bipartite_graph(a, b), ExpectedSpectrum(
            ((Fraction(0), 1), (Fraction(1), a + b - 2), (Fraction(2), 1)), "full")
    if fam == "kite":
        m, n = _require(spec.m, "m"), _require(spec.n, "n")
        return kite_graph(m, n), _expected_kite(m, n)
    if fam == "star_of_triangles":
        i = _require(spec.n, "n")
        return star_of_triangles_graph(i), ExpectedSpectrum(
            ((Fraction(0), 1), (Fraction(1, 2), i - 1), (Fraction(3, 2), i + 1)),
            "full")
    if fam == "erdos_renyi":
        n = _require(spec.n, "n")
        if spec.p is None:
            raise ValueError("erdos_renyi needs an edge probability p")
        if spec.seed is None:
            raise ValueError("erdos_renyi needs a seed for reproducibility")
        return (random_connected(n, spec.p, spec.seed),
                ExpectedSpectrum((), "partial"))
    raise ValueError(f"unknown family {fam!r}")


def _require(value, name: str) -> int:
    if value is None:
        raise ValueError(f"family parameter {name!r} is required")
    return int(value)


FAMILY_NAMES = ("complete", "path", "cycle", "star", "complete_bipartite",
                "kite", "star_of_triangles", "erdos_renyi")


# ---------------------------------------------------------------------------
# worked-example catalog


@dataclass(frozen=True, eq=False)
class FixtureCase:
    """Concrete construction with frozen expected outcomes.

    ``graph`` is the graph whose spectrum gets checked (the operation
    output when ``result`` is present).  ``expected_groups`` are
    (eigenvalue, multiplicity) pairs -- exact group structure when
    ``full_coverage``, guaranteed lower bounds otherwise.
    ``expected_multiplicity`` pins exact numeric multiplicities,
    ``expected_vectors`` are (eigenvalue, eigenfunction) pairs that must
    satisfy the eigenvalue equation to ``vector_tol``, and
    ``kite_blocks`` triggers the residual-pair sum rule.
    """

    graph: Graph
    result: OperationResult | None = None
    expected_groups: tuple[tuple[float, int], ...] = ()
    full_coverage: bool = False
    expected_multiplicity: tuple[tuple[float, int], ...] = ()
    expected_vectors: tuple[tuple[float, tuple[float, ...]], ...] = ()
    vector_tol: float = 1e-12
    kite_blocks: tuple[int, int] | None = None
    extra_graphs: tuple[Graph, ...] = ()

    def all_graphs(self) -> tuple[Graph, ...]:
        return (self.graph,) + self.extra_graphs


@dataclass(frozen=True)
class Fixture:
    name: str
    summary: str
    build: Callable[[], FixtureCase] = field(repr=False)


def _fixture_twin_vertex_twice() -> FixtureCase:
    g = build_graph(6, [(5, 3), (3, 4), (4, 0), (0, 1), (1, 3), (1, 2), (2, 3)])
    result = double_vertex_repeated(g, 4, 2)
    return FixtureCase(
        graph=result.graph,
        result=result,
        expected_multiplicity=(),
        expected_vectors=(
            (1.0, (0, 0, 0, 0, 1, 0, -1, 0)),
            (1.0, (0, 0, 0, 0, 1, 0, 1, -2)),
        ),
        extra_graphs=(g,),
    )


def _fixture_edge_tripling() -> FixtureCase:
    k3 = complete_graph(3)
    result = double_motif_repeated(k3, induced_motif(k3, [1, 2]), 3)
    return FixtureCase(
        graph=result.graph,
        result=result,
        expected_groups=((0.0, 1), (0.5, 3), (1.5, 5)),
        full_coverage=True,
        expected_vectors=(
            (1.5, (0, 1, -1, -1, 1, 0, 0, 0, 0)),
            (0.5, (0, 1, 1, 1, 1, -2, -2, 0, 0)),
        ),
        extra_graphs=(k3,),
    )


def _fixture_triangle_quadrilateral() -> FixtureCase:
    triangle = complete_graph(3)
    quad = cycle_graph(4)
    result = couple_via_neighbors(
        triangle, quad, 2, 0, [[1, 0, -1, 0], [0, 1, 0, -1]])
    return FixtureCase(
        graph=result.graph,
        result=result,
        expected_multiplicity=((1.0, 2),),
        expected_vectors=(
            (1.0, (0, 0, 0, 1, 0, -1, 0)),
            (1.0, (0, 0, 0, 0, 1, 0, -1)),
        ),
        extra_graphs=(quad,),
    )


def _fixture_star_from_coupling() -> FixtureCase:
    single = build_graph(1)
    three_path = path_graph(3)
    result = couple_via_neighbors(single, three_path, 0, 0, [1, 0, -1])
    if sorted(result.graph.edges()) != [(0, 2), (1, 2), (2, 3)]:
        raise AssertionError("coupling did not produce the 3-leaf star")
    return FixtureCase(
        graph=result.graph,
        result=result,
        expected_groups=((0.0, 1), (1.0, 2), (2.0, 1)),
        full_coverage=True,
        expected_multiplicity=((0.0, 1), (1.0, 2), (2.0, 1)),
        expected_vectors=((1.0, (0, 1, 0, -1)),),
        extra_graphs=(three_path,),
    )


def _fixture_path3_motif() -> FixtureCase:
    g = build_graph(6, [(5, 3), (3, 4), (4, 0), (0, 1), (1, 3), (1, 2), (2, 3)])
    motif = induced_motif(g, [5, 3, 4])
    d1, d2, d3 = motif.host_degrees()
    gap = math.sqrt((d1 + d3) / (d1 * d2 * d3))
    predicted = sorted([1.0 - gap, 1.0, 1.0 + gap])
    computed = sorted(lam for lam, _ in motif_doubling_eigenvalues(g, motif))
    if max(abs(a - b) for a, b in zip(predicted, computed)) > 1e-10:
        raise AssertionError("three-vertex path motif eigenvalues off the closed form")
    result = double_motif_repeated(g, motif, 1)
    return FixtureCase(
        graph=result.graph,
        result=result,
        expected_groups=tuple((lam, 1) for lam in predicted),
        full_coverage=False,
        extra_graphs=(g,),
    )


def _fixture_star_of_triangles() -> FixtureCase:
    i = 4
    k3 = complete_graph(3)
    result = double_motif_repeated(k3, induced_motif(k3, [1, 2]), i - 1)
    family_graph, expected = generate(FamilySpec("star_of_triangles", n=i))
    if family_graph != result.graph:
        raise AssertionError("family layout diverged from repeated edge doubling")
    return FixtureCase(
        graph=result.graph,
        result=result,
        expected_groups=expected.floats(),
        full_coverage=True,
        extra_graphs=(k3,),
    )


def _fixture_k2_attach_k2() -> FixtureCase:
    k2 = complete_graph(2)
    result = attach_subgraph(k2, k2, "all", 0)
    return FixtureCase(
        graph=result.graph,
        result=result,
        expected_groups=((1.5, 1),),
        full_coverage=False,
        expected_vectors=((1.5, (0, 0, 1, -1)),),
        extra_graphs=(k2,),
    )


def _fixture_kite_tail_sum() -> FixtureCase:
    m, n = 2, 3
    graph, expected = generate(FamilySpec("kite", m=m, n=n))
    return FixtureCase(
        graph=graph,
        expected_groups=expected.floats(),
        full_coverage=False,
        kite_blocks=(m, n),
    )


def _fixture_kite_equal_blocks() -> FixtureCase:
    m = 3
    graph, expected = generate(FamilySpec("kite", m=m, n=m))
    return FixtureCase(
        graph=graph,
        expected_groups=expected.floats(),
        full_coverage=True,
        kite_blocks=(m, m),
    )


def example_catalog() -> tuple[Fixture, ...]:
    """Small constructions with frozen outcomes, replayed by the demo command."""
    return (
        Fixture("twin_vertex_twice",
                "double one vertex twice; eigenvalue 1 arrives with two witnesses",
                _fixture_twin_vertex_twice),
        Fixture("edge_tripling",
                "triple an edge of a triangle; spectrum becomes {0, 1/2 x3, 3/2 x5}",
                _fixture_edge_tripling),
        Fixture("triangle_quadrilateral",
                "couple a quadrilateral to a triangle; eigenvalue 1 gets multiplicity 2",
                _fixture_triangle_quadrilateral),
        Fixture("star_from_coupling",
                "couple a 2-edge path to a lone vertex; yields the 3-leaf star",
                _fixture_star_from_coupling),
        Fixture("path3_motif",
                "doubling a 3-vertex path motif adds 1 and 1 +- sqrt((d1+d3)/(d1 d2 d3))",
                _fixture_path3_motif),
        Fixture("star_of_triangles",
                "i triangles through one center equal i-1 edge doublings of a triangle",
                _fixture_star_of_triangles),
        Fixture("k2_attach_k2",
                "attach an edge to an edge via both endpoints; eigenvalue 3/2 appears",
                _fixture_k2_attach_k2),
        Fixture("kite_tail_sum",
                "kite blocks (2,3): leftover eigenvalue pair sums to 1 + 1/2 + 1/3",
                _fixture_kite_tail_sum),
        Fixture("kite_equal_blocks",
                "equal-block kite has exactly three distinct eigenvalues",
                _fixture_kite_equal_blocks),
    )


__all__ = [
    "FAMILY_NAMES",
    "ExpectedSpectrum",
    "FamilySpec",
    "Fixture",
    "FixtureCase",
    "complete_bipartite_graph",
    "complete_graph",
    "cycle_graph",
    "example_catalog",
    "generate",
    "kite_graph",
    "path_graph",
    "random_connected",
    "star_graph",
    "star_of_triangles_graph",
]
