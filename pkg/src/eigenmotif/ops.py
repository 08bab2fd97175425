"""Graph evolution operations that carry predicted eigenvalues.

Every operation builds a new graph from a host (doubling a vertex or a
motif, coupling a second graph through shared neighbors, or attaching a
block to anchor vertices) and returns it together with *claims*:
eigenvalues of the normalized Laplacian of the output that the
construction guarantees, each with explicit eigenfunctions and a lower
bound on multiplicity.  Claims are meant to be re-checked numerically
by the verify module; nothing here trusts the algebra blindly.

The common mechanism: a function supported on the new (or copied)
vertices extends by zero across the rest of the graph whenever the
eigenvalue equation closes on that support.  For doubling, the
candidate eigenvalues solve a small restricted system over the motif;
for attachment, candidates additionally must sum to zero over each
anchored contact set, so that the anchor vertex sees a zero neighbor
sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .graph import (
    Graph,
    Motif,
    PreconditionError,
    VertexMap,
    duplicate_vertex_classes,
    induced_motif,
    is_connected,
)
from .spectral import GROUP_TOL, eigen_residual, eigendecompose, residual_tol

ZERO_SUM_TOL = 1e-10

VERTEX_DOUBLING = "VERTEX_DOUBLING"
MOTIF_DOUBLING_1 = "MOTIF_DOUBLING_1"
MOTIF_DOUBLING_LAMBDA = "MOTIF_DOUBLING_LAMBDA"
REPEATED_DOUBLING_1 = "REPEATED_DOUBLING_1"
REPEATED_DOUBLING_LAMBDA = "REPEATED_DOUBLING_LAMBDA"
COUPLING_1 = "COUPLING_1"
ATTACH_SINGLE_ANCHOR = "ATTACH_SINGLE_ANCHOR"
ATTACH_COMPLETE_SINGLE = "ATTACH_COMPLETE_SINGLE"
ATTACH_COMPLETE_MULTI = "ATTACH_COMPLETE_MULTI"
ATTACH_MULTI_ANCHOR = "ATTACH_MULTI_ANCHOR"
DUPLICATE_CLASS = "DUPLICATE_CLASS"

ALLOWED_PROVENANCE = frozenset({
    VERTEX_DOUBLING,
    MOTIF_DOUBLING_1,
    MOTIF_DOUBLING_LAMBDA,
    REPEATED_DOUBLING_1,
    REPEATED_DOUBLING_LAMBDA,
    COUPLING_1,
    ATTACH_SINGLE_ANCHOR,
    ATTACH_COMPLETE_SINGLE,
    ATTACH_COMPLETE_MULTI,
    ATTACH_MULTI_ANCHOR,
    DUPLICATE_CLASS,
})


@dataclass(frozen=True, eq=False)
class EigenClaim:
    """A guaranteed eigenvalue of a graph, with witnesses.

    ``eigenfunctions`` are linearly independent eigenfunctions of the
    random-walk Laplacian for ``eigenvalue``; their count equals
    ``multiplicity_at_least``.  ``eigenvalue_exact`` carries a rational
    string such as "3/2" when the construction pins the value exactly.
    """

    eigenvalue: float
    eigenfunctions: tuple[np.ndarray, ...]
    multiplicity_at_least: int
    provenance: str
    eigenvalue_exact: str | None = None

    def __post_init__(self):
        if self.provenance not in ALLOWED_PROVENANCE:
            raise ValueError(f"unknown provenance tag {self.provenance!r}")
        if not np.isfinite(self.eigenvalue):
            raise ValueError("claimed eigenvalue must be finite")
        if self.multiplicity_at_least < 1:
            raise ValueError("claimed multiplicity must be at least 1")
        if len(self.eigenfunctions) != self.multiplicity_at_least:
            raise ValueError("need exactly one eigenfunction per claimed dimension")
        funcs = tuple(np.asarray(f, dtype=float) for f in self.eigenfunctions)
        for f in funcs:
            if f.ndim != 1 or not np.any(f):
                raise ValueError("claim eigenfunctions must be nonzero vectors")
        object.__setattr__(self, "eigenfunctions", funcs)
        stacked = np.column_stack(funcs)
        if np.linalg.matrix_rank(stacked) != len(funcs):
            raise ValueError("claim eigenfunctions must be linearly independent")


@dataclass(frozen=True, eq=False)
class OperationResult:
    """Evolved graph, vertex bookkeeping, and the claims the step earned."""

    graph: Graph
    vertex_map: VertexMap
    claims: tuple[EigenClaim, ...]
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        if self.vertex_map.output_size() != self.graph.n:
            raise ValueError("vertex map does not cover the output graph")
        for claim in self.claims:
            for f in claim.eigenfunctions:
                if f.shape != (self.graph.n,):
                    raise ValueError("claim eigenfunction length does not match graph")


@dataclass(frozen=True, eq=False)
class MotifSystem:
    """Restricted eigenvalue problem of a motif inside its host.

    The added eigenvalues of a motif doubling solve det A(lambda) = 0
    where A(lambda) = internal adjacency + (lambda - 1) diag(host degrees).
    Rather than chasing polynomial roots, the determinant condition is
    rewritten as a symmetric eigenproblem: with D the host-degree
    diagonal, each eigenpair (mu, w) of D^{-1/2} A D^{-1/2} yields
    lambda = 1 - mu and F = D^{-1/2} w.
    """

    adjacency: np.ndarray
    degrees: tuple[int, ...]

    @classmethod
    def from_motif(cls, motif: Motif) -> "MotifSystem":
        m = len(motif)
        adj = np.zeros((m, m))
        for a, b in motif.internal_edges:
            adj[a, b] = 1.0
            adj[b, a] = 1.0
        return cls(adj, motif.host_degrees())

    @property
    def order(self) -> int:
        return len(self.degrees)

    def matrix(self, lam: float) -> np.ndarray:
        """A(lambda) whose kernel vectors extend to eigenfunctions."""
        return self.adjacency + (lam - 1.0) * np.diag(np.asarray(self.degrees, dtype=float))

    def solve(self, group_tol: float = GROUP_TOL) -> list[tuple[float, np.ndarray]]:
        """All ``order`` solutions as (lambda, F) pairs, ascending in lambda."""
        if min(self.degrees) < 1:
            raise ValueError("motif members must have positive host degree")
        return _restricted_eigenpairs(self.adjacency, self.degrees, group_tol)


def _restricted_eigenpairs(adjacency, degrees, group_tol) -> list[tuple[float, np.ndarray]]:
    inv = 1.0 / np.sqrt(np.asarray(degrees, dtype=float))
    sym = np.asarray(adjacency, dtype=float) * np.outer(inv, inv)
    spec = eigendecompose(sym, group_tol)
    pairs = []
    for i in reversed(range(len(spec))):
        lam = 1.0 - float(spec.eigenvalues[i])
        vec = inv * spec.eigenvectors[:, i]
        pairs.append((lam, vec / np.abs(vec).max()))
    return pairs


def _group_pairs(pairs: list[tuple[float, np.ndarray]], tol: float):
    """Single-linkage grouping of (lambda, F) pairs already sorted by lambda."""
    buckets: list[list[tuple[float, np.ndarray]]] = []
    for lam, vec in pairs:
        if buckets and lam - buckets[-1][-1][0] <= tol:
            buckets[-1].append((lam, vec))
        else:
            buckets.append([(lam, vec)])
    return [(float(np.mean([lam for lam, _ in bucket])),
             [vec for _, vec in bucket]) for bucket in buckets]


def _gate_connected(graphs_and_names, allow_disconnected: bool, warnings: list[str]) -> bool:
    """Enforce the connected-host precondition shared by all operations.

    Returns whether claims may be emitted.  Without the override flag a
    disconnected input raises; with it, the graph is still built but the
    caller suppresses claims.
    """
    for g, name in graphs_and_names:
        if not is_connected(g):
            if not allow_disconnected:
                raise PreconditionError(
                    f"{name} is disconnected; the construction can still be "
                    "built with the override flag, but claims are suppressed")
            warnings.append(f"{name} is disconnected: claims suppressed")
            return False
    return True


def _doubled_graph(g: Graph, motif: Motif, rounds: int) -> tuple[Graph, VertexMap]:
    """Append ``rounds`` copies of the motif.

    Copy r of motif member alpha gets label n + r*m + alpha.  Copies keep
    the motif's internal edges and inherit the *external* host neighbors
    of their originals; copies are adjacent neither to the originals nor
    to other copies, so each copy's degrees equal the originals' host
    degrees and the originals' degrees are unchanged.
    """
    size = len(motif)
    edges = list(g.edges())
    for r in range(rounds):
        base = g.n + r * size
        for a, b in motif.internal_edges:
            edges.append((base + a, base + b))
        for a in range(size):
            for w in motif.external_neighbors[a]:
                edges.append((base + a, w))
    out = Graph(g.n + rounds * size, edges)
    new_rounds = tuple(
        tuple(range(g.n + r * size, g.n + (r + 1) * size)) for r in range(rounds))
    return out, VertexMap(tuple(range(g.n)), new_rounds)


def _motif_connected(motif: Motif) -> bool:
    if len(motif) == 1:
        return True
    adj: dict[int, list[int]] = {i: [] for i in range(len(motif))}
    for a, b in motif.internal_edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(motif)


def _doubling_claims(g: Graph, motif: Motif, rounds: int, out: Graph,
                     vmap: VertexMap, group_tol: float) -> tuple[EigenClaim, ...]:
    """Claims for ``rounds`` successive doublings of one motif.

    For each restricted solution (lambda, F) and each round index j, the
    function equal to F on the motif, F on copies before round j, -j*F on
    the round-j copy and zero elsewhere is an eigenfunction for lambda.
    Grouped solutions share one claim; the group for lambda = 0 (constant
    shift) is dropped when the motif covers the whole host, where the
    restricted system degenerates into the full one.
    """
    pairs = MotifSystem.from_motif(motif).solve(group_tol)
    whole_graph = len(motif) == g.n
    positions = list(motif.vertices)
    claims = []
    for lam, vecs in _group_pairs(pairs, group_tol):
        if whole_graph and abs(lam) <= group_tol:
            continue
        if abs(lam - 1.0) <= group_tol:
            lam, exact = 1.0, "1"
        else:
            exact = None
        funcs = []
        for j in range(1, rounds + 1):
            for vec in vecs:
                f = np.zeros(out.n)
                f[positions] = vec
                for earlier in range(j - 1):
                    f[list(vmap.new_by_round[earlier])] = vec
                f[list(vmap.new_by_round[j - 1])] = -float(j) * vec
                funcs.append(f)
        if rounds == 1:
            tag = MOTIF_DOUBLING_1 if exact == "1" else MOTIF_DOUBLING_LAMBDA
        else:
            tag = REPEATED_DOUBLING_1 if exact == "1" else REPEATED_DOUBLING_LAMBDA
        claims.append(EigenClaim(lam, tuple(funcs), rounds * len(vecs), tag, exact))
    return tuple(claims)


def motif_doubling_eigenvalues(g: Graph, motif: Motif,
                               group_tol: float = GROUP_TOL) -> list[tuple[float, np.ndarray]]:
    """The eigenvalues added by doubling ``motif``, with their F-vectors."""
    if motif.host != g:
        raise ValueError("motif does not belong to this graph")
    return MotifSystem.from_motif(motif).solve(group_tol)


def double_motif(g: Graph, motif: Motif, *, allow_disconnected: bool = False,
                 group_tol: float = GROUP_TOL) -> OperationResult:
    """Copy a motif, wiring the copy to the originals' outside neighbors."""
    return double_motif_repeated(g, motif, 1, allow_disconnected=allow_disconnected,
                                 group_tol=group_tol)


def double_motif_repeated(g: Graph, motif: Motif, m: int, *,
                          allow_disconnected: bool = False,
                          group_tol: float = GROUP_TOL) -> OperationResult:
    """Double the same original motif ``m`` times.

    Every round copies the *original* motif, so all copies are pairwise
    non-adjacent and each claim eigenvalue gains multiplicity m.
    """
    if motif.host != g:
        raise ValueError("motif does not belong to this graph")
    if m < 1:
        raise ValueError("round count must be at least 1")
    warnings: list[str] = []
    emit = _gate_connected([(g, "host graph")], allow_disconnected, warnings)
    if not _motif_connected(motif):
        warnings.append("motif induces a disconnected subgraph")
    out, vmap = _doubled_graph(g, motif, m)
    claims = _doubling_claims(g, motif, m, out, vmap, group_tol) if emit else ()
    return OperationResult(out, vmap, claims, tuple(warnings))


def double_vertex(g: Graph, p: int, *, allow_disconnected: bool = False) -> OperationResult:
    """Add a twin of vertex p sharing all its neighbors (p and the twin stay
    non-adjacent).  Guarantees eigenvalue 1 with the difference function."""
    return double_vertex_repeated(g, p, 1, allow_disconnected=allow_disconnected)


def double_vertex_repeated(g: Graph, p: int, m: int, *,
                           allow_disconnected: bool = False) -> OperationResult:
    """Add ``m`` mutually non-adjacent twins of vertex p.

    The j-th witness function is 1 on p and the first j-1 twins, -j on
    twin j, zero elsewhere; together they pin eigenvalue 1 with
    multiplicity at least m.
    """
    if not (0 <= p < g.n):
        raise ValueError(f"vertex {p} out of range")
    if m < 1:
        raise ValueError("twin count must be at least 1")
    warnings: list[str] = []
    emit = _gate_connected([(g, "host graph")], allow_disconnected, warnings)
    out, vmap = _doubled_graph(g, induced_motif(g, [p]), m)
    claims: tuple[EigenClaim, ...] = ()
    if emit:
        funcs = []
        for j in range(1, m + 1):
            f = np.zeros(out.n)
            f[p] = 1.0
            for earlier in range(j - 1):
                f[vmap.new_by_round[earlier][0]] = 1.0
            f[vmap.new_by_round[j - 1][0]] = -float(j)
            funcs.append(f)
        tag = VERTEX_DOUBLING if m == 1 else REPEATED_DOUBLING_1
        claims = (EigenClaim(1.0, tuple(funcs), m, tag, "1"),)
    return OperationResult(out, vmap, claims, tuple(warnings))


def couple_via_neighbors(host: Graph, attachment: Graph, q: int, p: int,
                         f1, *, tol: float | None = None,
                         allow_disconnected: bool = False) -> OperationResult:
    """Join a second graph to the host through the neighbors of one vertex.

    Adds edges from host vertex q to every attachment-neighbor of p (q
    and p themselves stay non-adjacent).  Any eigenvalue-1 eigenfunction
    of the attachment then extends by zero over the host, because its
    neighbor sums vanish everywhere -- including at q, whose new
    neighbors are exactly the neighbors of p.

    ``f1`` is one such eigenfunction, or a sequence of linearly
    independent ones; each is required (precondition) to satisfy the
    eigenvalue-1 equation on the attachment within ``tol``.
    """
    if not (0 <= q < host.n):
        raise ValueError(f"host vertex {q} out of range")
    if not (0 <= p < attachment.n):
        raise ValueError(f"attachment vertex {p} out of range")
    supplied = np.asarray(f1, dtype=float)
    vecs = supplied[None, :] if supplied.ndim == 1 else supplied
    if vecs.ndim != 2 or vecs.shape[1] != attachment.n:
        raise ValueError(f"expected eigenfunction vectors of length {attachment.n}")

    warnings: list[str] = []
    emit = _gate_connected([(host, "host graph"), (attachment, "attachment graph")],
                           allow_disconnected, warnings)
    if attachment.degree(p) == 0:
        if not allow_disconnected:
            raise PreconditionError(
                "coupling vertex p has no neighbors in the attachment")
        warnings.append("coupling vertex p has no neighbors: claims suppressed")
        emit = False
    if emit:
        check_tol = residual_tol(attachment.n) if tol is None else tol
        for vec in vecs:
            defect = eigen_residual(attachment, vec, 1.0)
            if defect > check_tol:
                raise PreconditionError(
                    f"supplied function has eigenvalue-1 residual {defect:.3g} "
                    f"on the attachment (tolerance {check_tol:.3g})")

    offset = host.n
    edges = list(host.edges())
    edges.extend((u + offset, v + offset) for u, v in attachment.edges())
    edges.extend((q, w + offset) for w in attachment.neighbors(p))
    out = Graph(host.n + attachment.n, edges)
    vmap = VertexMap(tuple(range(host.n)),
                     (tuple(range(offset, offset + attachment.n)),))
    claims: tuple[EigenClaim, ...] = ()
    if emit:
        funcs = tuple(np.concatenate([np.zeros(host.n), vec]) for vec in vecs)
        claims = (EigenClaim(1.0, funcs, len(funcs), COUPLING_1, "1"),)
    return OperationResult(out, vmap, claims, tuple(warnings))


def _parse_contact(sigma: Graph, contact) -> tuple[int, ...]:
    if isinstance(contact, str):
        if contact == "all":
            return tuple(range(sigma.n))
        raise ValueError(f"contact set must be vertex indices or 'all', got {contact!r}")
    members = tuple(int(v) for v in contact)
    if not members:
        raise ValueError("contact set must be nonempty")
    if len(set(members)) != len(members):
        raise ValueError("contact set has repeated vertices")
    for v in members:
        if not (0 <= v < sigma.n):
            raise ValueError(f"contact vertex {v} out of range for the attached block")
    return members


def _attach(host: Graph, sigma: Graph,
            assignments: Sequence[tuple[tuple[int, ...], int]], *,
            candidate=None, allow_disconnected: bool = False,
            group_tol: float = GROUP_TOL,
            zero_sum_tol: float = ZERO_SUM_TOL) -> OperationResult:
    """Shared core of the attachment operations.

    ``assignments`` pairs each anchor vertex of the host with the block
    vertices it is joined to.  Candidate eigenvalues solve the block's
    restricted system with post-attachment degrees; a candidate survives
    only if its eigenspace meets every hyperplane "sum over the contact
    set is zero", found by rank-revealing SVD of the constraint matrix
    applied to an eigenspace basis.  Survivors extend by zero over the
    host.
    """
    anchors = [a for _, a in assignments]
    if not assignments:
        raise ValueError("need at least one (contact set, anchor) assignment")
    if len(set(anchors)) != len(anchors):
        raise ValueError("anchor vertices must be distinct")
    for a in anchors:
        if not (0 <= a < host.n):
            raise ValueError(f"anchor vertex {a} out of range")

    offset = host.n
    edges = list(host.edges())
    edges.extend((u + offset, v + offset) for u, v in sigma.edges())
    for contact, anchor in assignments:
        edges.extend((anchor, w + offset) for w in contact)
    out = Graph(host.n + sigma.n, edges)
    vmap = VertexMap(tuple(range(host.n)), (tuple(range(offset, offset + sigma.n)),))

    warnings: list[str] = []
    emit = _gate_connected([(host, "host graph")], allow_disconnected, warnings)
    if emit and not is_connected(out):
        if not allow_disconnected:
            raise PreconditionError(
                "attachment leaves the output disconnected (some block "
                "component has no contact vertex); the construction can "
                "still be built with the override flag")
        warnings.append("output graph is disconnected: claims suppressed")
        emit = False

    claims: tuple[EigenClaim, ...] = ()
    if emit:
        bumps = np.zeros(sigma.n)
        for contact, _ in assignments:
            bumps[list(contact)] += 1.0
        degrees = np.asarray(sigma.degrees, dtype=float) + bumps
        constraint = np.zeros((len(assignments), sigma.n))
        for row, (contact, _) in enumerate(assignments):
            constraint[row, list(contact)] = 1.0
        if candidate is not None:
            claims = (_validated_attach_claim(
                host, sigma, out, candidate, degrees, constraint,
                assignments, zero_sum_tol),)
        else:
            claims = _attach_claims(host, sigma, out, degrees, constraint,
                                    assignments, group_tol, zero_sum_tol)
    return OperationResult(out, vmap, claims, tuple(warnings))


def _attach_provenance(sigma: Graph, assignments, lam: float,
                       group_tol: float) -> tuple[str, str | None, float]:
    """Tag an attach claim, recognizing the complete-block special case.

    A complete block on n vertices whose entire vertex set is joined to k
    anchors contributes eigenvalue (n+k)/(n+k-1) with multiplicity n-1;
    when the computed eigenvalue matches, the claim is snapped to the
    exact rational.
    """
    k = len(assignments)
    contacts = {contact for contact, _ in assignments}
    full_complete = (sigma.is_complete()
                     and contacts == {tuple(range(sigma.n))}
                     and sigma.n >= 2)
    if full_complete:
        exact = Fraction(sigma.n + k, sigma.n + k - 1)
        if abs(lam - float(exact)) <= group_tol:
            tag = ATTACH_COMPLETE_SINGLE if k == 1 else ATTACH_COMPLETE_MULTI
            return tag, f"{exact.numerator}/{exact.denominator}", float(exact)
    if abs(lam - 1.0) <= group_tol:
        exact_str: str | None = "1"
        lam = 1.0
    else:
        exact_str = None
    return (ATTACH_SINGLE_ANCHOR if k == 1 else ATTACH_MULTI_ANCHOR), exact_str, lam


def _extend_by_zero(host: Graph, sigma: Graph, vec: np.ndarray) -> np.ndarray:
    out = np.zeros(host.n + sigma.n)
    out[host.n:] = vec
    return out


def _attach_claims(host, sigma, out, degrees, constraint, assignments,
                   group_tol, zero_sum_tol) -> tuple[EigenClaim, ...]:
    pairs = _restricted_eigenpairs(np.asarray(_sigma_adjacency(sigma)), degrees, group_tol)
    claims = []
    for lam, vecs in _group_pairs(pairs, group_tol):
        basis = np.column_stack(vecs)
        mapped = constraint @ basis
        kernel = _kernel_basis(mapped, zero_sum_tol)
        if kernel.shape[1] == 0:
            continue
        survivors = basis @ kernel
        funcs = []
        for col in range(survivors.shape[1]):
            vec = survivors[:, col]
            vec = vec / np.abs(vec).max()
            funcs.append(_extend_by_zero(host, sigma, vec))
        tag, exact, lam_out = _attach_provenance(sigma, assignments, lam, group_tol)
        claims.append(EigenClaim(lam_out, tuple(funcs), len(funcs), tag, exact))
    return tuple(sorted(claims, key=lambda c: c.eigenvalue))


def _validated_attach_claim(host, sigma, out, candidate, degrees, constraint,
                            assignments, zero_sum_tol) -> EigenClaim:
    """Validation mode: check a caller-supplied (lambda, f) pair and wrap it."""
    lam, vec = candidate
    vec = np.asarray(vec, dtype=float)
    if vec.shape != (sigma.n,):
        raise ValueError(f"candidate eigenfunction must have length {sigma.n}")
    norm = float(np.abs(vec).max())
    if norm == 0.0:
        raise ValueError("candidate eigenfunction is zero")
    adj = np.asarray(_sigma_adjacency(sigma))
    defect = float(np.abs(adj @ vec - (1.0 - lam) * degrees * vec).max()) / norm
    if defect > residual_tol(sigma.n):
        raise ValueError(
            f"candidate fails the restricted eigenvalue equation (defect {defect:.3g})")
    sums = constraint @ vec
    if float(np.abs(sums).max()) > zero_sum_tol * norm:
        raise ValueError(
            "candidate does not sum to zero over every anchored contact set")
    tag, exact, lam_out = _attach_provenance(sigma, assignments, float(lam), GROUP_TOL)
    return EigenClaim(lam_out, (_extend_by_zero(host, sigma, vec / norm),), 1, tag, exact)


def _sigma_adjacency(sigma: Graph) -> list[list[float]]:
    adj = [[0.0] * sigma.n for _ in range(sigma.n)]
    for u, v in sigma.edges():
        adj[u][v] = 1.0
        adj[v][u] = 1.0
    return adj


def _kernel_basis(matrix: np.ndarray, tol: float) -> np.ndarray:
    """Orthonormal kernel basis of a small dense matrix via SVD.

    Singular values at or below ``tol`` count as zero (rank-revealing
    cutoff); the matching right singular vectors span the kernel.
    """
    rows, cols = matrix.shape
    if rows == 0:
        return np.eye(cols)
    _, sing, vt = np.linalg.svd(matrix)
    rank = int(np.count_nonzero(sing > tol))
    return vt[rank:].T


def attach_subgraph(host: Graph, sigma: Graph, sigma_c, anchor: int, *,
                    candidate=None, allow_disconnected: bool = False,
                    group_tol: float = GROUP_TOL) -> OperationResult:
    """Attach a block to one host vertex through a contact set.

    Joins ``anchor`` to every vertex in ``sigma_c`` (a subset of the
    block's vertices, or "all").  Eigenvalues of the block's restricted
    system whose eigenspace contains a vector summing to zero over the
    contact set carry over to the combined graph.
    """
    contact = _parse_contact(sigma, sigma_c)
    return _attach(host, sigma, [(contact, anchor)], candidate=candidate,
                   allow_disconnected=allow_disconnected, group_tol=group_tol)


def attach_subgraph_multi_anchor(host: Graph, sigma: Graph, sigma_c,
                                 anchors: Sequence[int], *, candidate=None,
                                 allow_disconnected: bool = False,
                                 group_tol: float = GROUP_TOL) -> OperationResult:
    """Attach one block to several host anchors, all using the same contact set."""
    contact = _parse_contact(sigma, sigma_c)
    return _attach(host, sigma, [(contact, int(a)) for a in anchors],
                   candidate=candidate, allow_disconnected=allow_disconnected,
                   group_tol=group_tol)


def attach_multi_subgraphs(host: Graph, sigma: Graph,
                           assignments: Iterable[tuple[Sequence[int], int]], *,
                           candidate=None, allow_disconnected: bool = False,
                           group_tol: float = GROUP_TOL) -> OperationResult:
    """Attach one block to several anchors with per-anchor contact sets.

    Each assignment (contact set, anchor) adds its own zero-sum
    constraint; surviving eigenfunctions satisfy all of them at once.
    """
    parsed = [(_parse_contact(sigma, contact), int(anchor))
              for contact, anchor in assignments]
    return _attach(host, sigma, parsed, candidate=candidate,
                   allow_disconnected=allow_disconnected, group_tol=group_tol)


def duplicate_class_claims(g: Graph, *, allow_disconnected: bool = False) -> OperationResult:
    """Eigenvalue-1 claims implied by vertices with identical neighborhoods.

    The graph is returned unchanged; each class of k twin vertices
    contributes k-1 difference functions, all eigenfunctions for
    eigenvalue 1.
    """
    warnings: list[str] = []
    emit = _gate_connected([(g, "graph")], allow_disconnected, warnings)
    claims: tuple[EigenClaim, ...] = ()
    if emit:
        funcs = []
        for members in duplicate_vertex_classes(g).classes:
            for other in members[1:]:
                f = np.zeros(g.n)
                f[members[0]] = 1.0
                f[other] = -1.0
                funcs.append(f)
        if funcs:
            claims = (EigenClaim(1.0, tuple(funcs), len(funcs), DUPLICATE_CLASS, "1"),)
    return OperationResult(g, VertexMap(tuple(range(g.n))), claims, tuple(warnings))


@dataclass(frozen=True)
class KiteTailResult:
    """Residual eigenvalue pair of a kite graph and its sum test."""

    lambda_beta: float
    lambda_gamma: float
    expected_sum: float
    check: bool


def kite_tail_relation(m: int, n: int, spectrum, tol: float = GROUP_TOL) -> KiteTailResult:
    """Check the sum rule for the two unnamed eigenvalues of a kite graph.

    A kite joins complete blocks of sizes m and n through one cut vertex.
    Its spectrum contains 0, the value (m+1)/m with multiplicity m-1 and
    (n+1)/n with multiplicity n-1; after removing those, exactly two
    eigenvalues remain, and their sum must equal 1 + 1/m + 1/n.
    """
    if m < 1 or n < 1:
        raise ValueError("block sizes must be positive")
    values = list(np.sort(np.asarray(
        spectrum.eigenvalues if hasattr(spectrum, "eigenvalues") else spectrum,
        dtype=float)))
    if len(values) != m + n + 1:
        raise ValueError(f"kite on blocks ({m}, {n}) has {m + n + 1} eigenvalues, "
                         f"got {len(values)}")

    def remove_closest(target: float, count: int):
        for _ in range(count):
            idx = int(np.argmin([abs(v - target) for v in values]))
            if abs(values[idx] - target) > tol:
                raise ValueError(
                    f"spectrum lacks the expected eigenvalue {target:.12g}")
            values.pop(idx)

    remove_closest(0.0, 1)
    remove_closest((m + 1) / m, m - 1)
    remove_closest((n + 1) / n, n - 1)
    beta, gamma = sorted(values)
    expected = 1.0 + 1.0 / m + 1.0 / n
    return KiteTailResult(beta, gamma, expected,
                          bool(abs(beta + gamma - expected) <= tol))


__all__ = [
    "ALLOWED_PROVENANCE",
    "ATTACH_COMPLETE_MULTI",
    "ATTACH_COMPLETE_SINGLE",
    "ATTACH_MULTI_ANCHOR",
    "ATTACH_SINGLE_ANCHOR",
    "COUPLING_1",
    "DUPLICATE_CLASS",
    "EigenClaim",
    "KiteTailResult",
    "MOTIF_DOUBLING_1",
    "MOTIF_DOUBLING_LAMBDA",
    "MotifSystem",
    "OperationResult",
    "REPEATED_DOUBLING_1",
    "REPEATED_DOUBLING_LAMBDA",
    "VERTEX_DOUBLING",
    "ZERO_SUM_TOL",
    "attach_multi_subgraphs",
    "attach_subgraph",
    "attach_subgraph_multi_anchor",
    "couple_via_neighbors",
    "double_motif",
    "double_motif_repeated",
    "double_vertex",
    "double_vertex_repeated",
    "duplicate_class_claims",
    "kite_tail_relation",
    "motif_doubling_eigenvalues",
]
