"""Labeled Bratteli diagrams for finite prefixes of direct systems.

A system is a list of levels (semisimple algebras embedded in a growing
ambient chain) and a list of edges (branchings between consecutive
levels).  Vertices (n, j) carry the embedding index alpha of component j
in the level-n ambient; edges carry the component-to-component index
beta.  The consistency law alpha_n^j = sum_k beta_n^{j,k} alpha_{n+1}^k
is validated on construction, and everything downstream (level sums,
stabilization, decomposition into constituents) works on the validated
graph.

Levels are numbered from 1; component positions j are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebras import SimpleAlgebra
from .errors import DimensionMismatchError, DomainError, InternalConsistencyError, NotStabilizedError
from .index import (
    Embedding,
    ModuleDecomposition,
    SemisimpleAlgebra,
    Standard,
    classify_embedding,
    embedding_index,
    restrict_to_factor,
)

_AMBIENT_KIND = {"A": "sl", "B": "so", "D": "so", "C": "sp"}

INFINITE_KINDS = ("SlInf", "SoInf", "SpInf")
_SERIES_TO_INFINITE = {"A": "SlInf", "C": "SpInf", "B": "SoInf", "D": "SoInf"}

# Window used to judge tail patterns (rank growth, constancy) from a prefix.
TAIL_WINDOW = 3


@dataclass(frozen=True)
class LevelSpec:
    """One level: the semisimple algebra, its ambient, and how the ambient's
    natural module branches over the components.

    conatural_branching optionally overrides the dual-side decomposition for
    socle analysis; it models non-square levels of non-reductive exhaustions
    (a Levi component paired with a strictly smaller restricted dual), so its
    total dimension may differ from the natural one.  When absent, the dual
    side is derived from the primal branching by factorwise dualization.
    """

    components: SemisimpleAlgebra
    ambient: SimpleAlgebra
    ambient_branching: ModuleDecomposition
    conatural_branching: ModuleDecomposition | None = None

    def __post_init__(self):
        # Embedding construction validates total dimension and, for B/C/D
        # ambients, self-duality of the branching.
        Embedding(self.components, self.ambient, self.ambient_branching)
        if self.conatural_branching is not None:
            if self.conatural_branching.algebra != self.components:
                raise DomainError("conatural branching must decompose over the level components")
            if self.conatural_branching.total_dim > self.ambient.natural_dim:
                raise DimensionMismatchError(
                    "conatural branching cannot exceed the ambient natural dimension"
                )


@dataclass(frozen=True)
class EdgeSpec:
    """Branchings of the next level's component naturals over this level."""

    branchings: tuple[ModuleDecomposition, ...]  # one per component of level n+1


@dataclass(frozen=True)
class BratteliGraph:
    levels: tuple[LevelSpec, ...]
    edges: tuple[EdgeSpec, ...]
    alpha: dict[tuple[int, int], int] = field(compare=False)
    beta: dict[tuple[int, int, int], int] = field(compare=False)

    @property
    def top(self) -> int:
        return len(self.levels)

    def components_at(self, n: int) -> tuple[SimpleAlgebra, ...]:
        return self.levels[n - 1].components.factors

    def vertices(self):
        for n in range(1, self.top + 1):
            for j in range(len(self.components_at(n))):
                yield (n, j)

    def out_edges(self, n: int, j: int):
        if n == self.top:
            return []
        return [
            (k, self.beta[(n, j, k)])
            for k in range(len(self.components_at(n + 1)))
            if (n, j, k) in self.beta
        ]

    def algebra_at(self, vertex) -> SimpleAlgebra:
        n, j = vertex
        return self.components_at(n)[j]


def compute_labels(levels, edges) -> BratteliGraph:
    """Build and validate the labeled graph from level and edge specs."""
    levels = tuple(levels)
    edges = tuple(edges)
    if not levels:
        raise DomainError("a system needs at least one level")
    if len(edges) != len(levels) - 1:
        raise DimensionMismatchError(
            f"{len(levels)} levels need {len(levels) - 1} edge specs, got {len(edges)}"
        )
    kinds = {_AMBIENT_KIND[lv.ambient.series] for lv in levels}
    if len(kinds) > 1:
        raise DomainError(f"ambient kind must be constant across levels, got {sorted(kinds)}")
    for n, (lower, upper) in enumerate(zip(levels, levels[1:]), start=1):
        lower_dim = sum(f.dim for f in lower.components.factors)
        upper_dim = sum(f.dim for f in upper.components.factors)
        if lower_dim > upper_dim:
            raise DomainError(
                f"level {n} has dimension {lower_dim} > {upper_dim} of level {n + 1}; "
                "the connecting maps cannot be injective"
            )

    alpha: dict[tuple[int, int], int] = {}
    for n, lv in enumerate(levels, start=1):
        emb = Embedding(lv.components, lv.ambient, lv.ambient_branching)
        for j, value in enumerate(embedding_index(emb)):
            if value < 1:
                raise DomainError(
                    f"component {j} of level {n} acts trivially on the ambient natural module"
                )
            alpha[(n, j)] = value

    beta: dict[tuple[int, int, int], int] = {}
    for n, edge in enumerate(edges, start=1):
        sources = levels[n - 1].components
        targets = levels[n].components.factors
        if len(edge.branchings) != len(targets):
            raise DimensionMismatchError(
                f"edge {n} has {len(edge.branchings)} branchings for {len(targets)} "
                f"components of level {n + 1}"
            )
        for k, branching in enumerate(edge.branchings):
            if branching.algebra != sources:
                raise DomainError(
                    f"edge {n}: branching of component {k} must decompose over level {n}"
                )
            emb = Embedding(sources, targets[k], branching)
            zero_rows = {j: True for j in range(len(sources.factors))}
            for s in branching.summands:
                for j, w in enumerate(s.weights):
                    if any(w):
                        zero_rows[j] = False
            for j, value in enumerate(embedding_index(emb)):
                present = not zero_rows[j]
                if present != (value > 0):
                    raise InternalConsistencyError(
                        f"edge ({n},{j})->({n + 1},{k}): presence and index disagree"
                    )
                if present:
                    beta[(n, j, k)] = value

    graph = BratteliGraph(levels, edges, alpha, beta)
    _validate_consistency(graph)
    return graph


def _validate_consistency(graph: BratteliGraph):
    """The level-to-level sum law, checked at every non-top vertex."""
    for n in range(1, graph.top):
        for j in range(len(graph.components_at(n))):
            total = sum(b * graph.alpha[(n + 1, k)] for k, b in graph.out_edges(n, j))
            if total != graph.alpha[(n, j)]:
                raise DomainError(
                    f"inconsistent system at level {n}, component {j}: "
                    f"alpha={graph.alpha[(n, j)]} but edge sum gives {total}"
                )


def subdiagram(graph: BratteliGraph, origin) -> set[tuple[int, int]]:
    """Vertices reachable from the origin (the full forward closure)."""
    n, j = origin
    if (n, j) not in graph.alpha:
        raise DomainError(f"no vertex {origin} in the graph")
    seen = {(n, j)}
    frontier = [(n, j)]
    while frontier:
        nxt = []
        for m, i in frontier:
            for k, _ in graph.out_edges(m, i):
                if (m + 1, k) not in seen:
                    seen.add((m + 1, k))
                    nxt.append((m + 1, k))
        frontier = nxt
    return seen


def level_sums(graph: BratteliGraph, origin) -> list[int]:
    """a_m = sum of alpha over the subdiagram's level-m vertices, m = n..top.

    The sequence is monotone non-increasing on every validated graph.
    """
    sub = subdiagram(graph, origin)
    n = origin[0]
    sums = []
    for m in range(n, graph.top + 1):
        sums.append(sum(graph.alpha[v] for v in sub if v[0] == m))
    for a, b in zip(sums, sums[1:]):
        if a < b:
            raise InternalConsistencyError(
                f"level sums increased at origin {origin}: {sums}"
            )
    return sums


def stabilization(graph: BratteliGraph, origin) -> int | None:
    """Least level m0 from which the subdiagram is a union of strings.

    Requires the level sums to be constant from m0 through the top and every
    vertex in between to have exactly one outgoing edge inside the
    subdiagram.  A candidate at the very top only counts when nothing could
    still change: a single-vertex subdiagram, or a top sum of 1 (labels are
    positive, so the sequence cannot drop further).  Returns None when the
    prefix is too short to witness any of this.
    """
    sub = subdiagram(graph, origin)
    n = origin[0]
    top = graph.top
    sums = level_sums(graph, origin)

    def strings_from(m0: int) -> bool:
        for m, i in sub:
            if m0 <= m < top:
                degree = sum(1 for _ in graph.out_edges(m, i))
                if degree != 1:
                    return False
        return True

    for m0 in range(n, top + 1):
        if len(set(sums[m0 - n:])) != 1:
            continue
        if not strings_from(m0):
            continue
        if m0 < top:
            return m0
        if sums[-1] == 1 or n == top:
            return m0
        return None
    return None


def _string_from(graph: BratteliGraph, vertex) -> tuple[tuple[int, int], ...]:
    path = [vertex]
    n, j = vertex
    while n < graph.top:
        outs = graph.out_edges(n, j)
        if len(outs) != 1:
            raise InternalConsistencyError(f"no unique continuation from {(n, j)}")
        (k, _), = outs
        n, j = n + 1, k
        path.append((n, j))
    return tuple(path)


@dataclass(frozen=True)
class Constituent:
    """One direct summand of the limit, witnessed by a string of vertices."""

    cid: int
    kind: str  # FiniteSimple | SlInf | SoInf | SpInf | Undetermined
    algebra: SimpleAlgebra | None
    string: tuple[tuple[int, int], ...]
    tail_assumed: bool

    def is_infinite(self) -> bool:
        return self.kind in INFINITE_KINDS


def _classify_tail(graph: BratteliGraph, string) -> tuple[str, SimpleAlgebra | None, bool]:
    window = string[-min(TAIL_WINDOW, len(string)):]
    algs = [graph.algebra_at(v) for v in window]
    betas = [
        graph.beta[(v[0], v[1], w[1])] for v, w in zip(window, window[1:])
    ]
    if all(b == 1 for b in betas):
        # Natural dimensions, not ranks: so(2n) -> so(2n+1) grows while the
        # rank plateaus, and the dimension test coincides with rank growth
        # inside a single series anyway.
        dims = [a.natural_dim for a in algs]
        growing = len(dims) >= 2 and all(a < b for a, b in zip(dims, dims[1:]))
        if growing:
            # The limit is decided by the eventual tail, hence by the last
            # vertex's series class; earlier window entries may predate a
            # one-way series transition.
            return _SERIES_TO_INFINITE[algs[-1].series], None, True
        if len(set(algs)) == 1:
            return "FiniteSimple", algs[0], True
    return "Undetermined", None, False


def decompose(graph: BratteliGraph) -> list[Constituent]:
    """Constituents of the limit: equivalence classes of strings.

    Every vertex is taken as an origin; strings start at each origin's
    stabilized level; strings sharing a vertex at or above their
    stabilization levels coincide from that point on, so classes are the
    groups of strings with a common endpoint.
    """
    unstable = [v for v in graph.vertices() if stabilization(graph, v) is None]
    if unstable:
        raise NotStabilizedError(
            "prefix too short: no stabilization witnessed at origins "
            + ", ".join(map(str, sorted(unstable))),
            origins=sorted(unstable),
        )
    strings_by_top: dict[tuple[int, int], list] = {}
    for origin in graph.vertices():
        m0 = stabilization(graph, origin)
        sub = subdiagram(graph, origin)
        for vertex in sorted(v for v in sub if v[0] == m0):
            string = _string_from(graph, vertex)
            strings_by_top.setdefault(string[-1], []).append(string)

    constituents = []
    for cid, endpoint in enumerate(sorted(strings_by_top)):
        witness = min(strings_by_top[endpoint], key=lambda s: (s[0][0], s))
        kind, algebra, assumed = _classify_tail(graph, witness)
        constituents.append(Constituent(cid, kind, algebra, witness, assumed))
    return constituents


def edge_restriction(graph: BratteliGraph, source, target) -> ModuleDecomposition:
    """Branching of the target component's natural module over the single
    source component (other factors collapsed into multiplicities)."""
    (n, j), (m, k) = source, target
    if m != n + 1:
        raise DomainError("edge restriction needs consecutive levels")
    branching = graph.edges[n - 1].branchings[k]
    return restrict_to_factor(branching, j)


@dataclass(frozen=True)
class RefinementReport:
    """The nested simple ideals along the unique infinite string."""

    chain: tuple[tuple[int, int], ...]
    algebras: tuple[SimpleAlgebra, ...]
    standard_edges: tuple[bool, ...]
    n0: int


def extract_refinement(graph: BratteliGraph, constituents=None, constituent_id=None) -> RefinementReport:
    """Nested simple ideals refining the system when the limit is simple.

    With several infinite constituents, pass constituent_id to restrict the
    refinement to one class.
    """
    if constituents is None:
        constituents = decompose(graph)
    infinite = [c for c in constituents if c.is_infinite()]
    if constituent_id is not None:
        infinite = [c for c in infinite if c.cid == constituent_id]
        if not infinite:
            raise DomainError(f"no infinite constituent with id {constituent_id}")
    if len(infinite) != 1:
        raise DomainError(
            f"refinement needs exactly one infinite constituent, found {len(infinite)}; "
            "pass constituent_id to pick a class"
        )
    string = infinite[0].string
    flags = []
    for v, w in zip(string, string[1:]):
        restricted = edge_restriction(graph, v, w)
        emb = Embedding(
            SemisimpleAlgebra((graph.algebra_at(v),)), graph.algebra_at(w), restricted
        )
        flags.append(isinstance(classify_embedding(emb), Standard))
    n0 = string[0][0]
    for pos, flag in enumerate(flags):
        if not flag:
            n0 = string[pos + 1][0]
    return RefinementReport(
        chain=string,
        algebras=tuple(graph.algebra_at(v) for v in string),
        standard_edges=tuple(flags),
        n0=n0,
    )
