"""Structure of the natural and conatural modules over the limit subalgebra.

All quantities are read off the ambient branchings along constituent
strings.  Limits are judged from a finite prefix with a three-level
window, so every verdict ships its evidence sequence: `finite(t)` when the
trivial mass is constant across the window, `countable` when it grows
strictly, `undetermined_at_horizon` otherwise.  The dual side uses the
level's conatural override when present and the factorwise dual of the
primal branching when not.

A finite prefix cannot tell trivial directions that persist (socle) from
trivial directions that keep escaping into later naturals (quotient); the
reported quotient dimensions carry the full stabilized trivial mass, which
is exact for every fixture in scope.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import Weight, dual_weight
from .errors import DomainError, InternalConsistencyError, NotStabilizedError
from .index import NATURAL_MODULE_INDEX, ModuleDecomposition
from .system import TAIL_WINDOW, BratteliGraph, Constituent, decompose


@dataclass(frozen=True)
class ExtendedDim:
    """finite(n), countable, or undetermined_at_horizon(lower_bound)."""

    kind: str  # finite | countable | undetermined
    value: int | None = None
    lower_bound: int | None = None
    tail_assumed: bool = False
    evidence: tuple[int, ...] = ()

    @staticmethod
    def from_sequence(seq) -> "ExtendedDim":
        seq = tuple(seq)
        if not seq:
            raise DomainError("cannot judge a dimension from an empty sequence")
        window = seq[-min(TAIL_WINDOW, len(seq)):]
        if len(set(window)) == 1:
            return ExtendedDim("finite", value=window[-1], tail_assumed=True, evidence=seq)
        if all(a < b for a, b in zip(window, window[1:])):
            return ExtendedDim("countable", lower_bound=window[-1], tail_assumed=True, evidence=seq)
        return ExtendedDim("undetermined", lower_bound=window[-1], evidence=seq)

    def __str__(self) -> str:
        if self.kind == "finite":
            return f"finite({self.value})"
        if self.kind == "countable":
            return "countable"
        return f"undetermined_at_horizon(>= {self.lower_bound})"


def _conatural_decomposition(level) -> ModuleDecomposition:
    if level.conatural_branching is not None:
        return level.conatural_branching
    return level.ambient_branching.dual()


def _trivial_mass(decomp: ModuleDecomposition, positions) -> int:
    """Total dimension of the summands trivial on every listed factor."""
    total = 0
    for s in decomp.summands:
        if all(not any(s.weights[j]) for j in positions):
            total += s.mult * decomp.summand_dim(s)
    return total


def _pure_counts(decomp: ModuleDecomposition, j: int, where: str) -> tuple[int, int]:
    """Copies of the natural / conatural of factor j; errors on anything mixed."""
    alg = decomp.algebra.factors[j]
    omega = alg.natural_weight
    omega_dual = dual_weight(alg, omega)
    k = l = 0
    for s in decomp.summands:
        w = s.weights[j]
        if not any(w):
            continue
        if any(any(s.weights[i]) for i in range(len(s.weights)) if i != j):
            raise NotStabilizedError(
                f"branching at {where} mixes factor {j} with other components; "
                "not yet stable, lengthen prefix"
            )
        if w == omega:
            k += s.mult
        elif w == omega_dual:
            l += s.mult
        else:
            raise NotStabilizedError(
                f"branching at {where} is not diagonal on factor {j} (weight {w}); "
                "not yet stable, lengthen prefix"
            )
    return k, l


def multiplicities(graph: BratteliGraph, constituent: Constituent) -> tuple[int, int]:
    """(k, l): copies of the constituent's natural and conatural in the
    ambient natural module at the top level, cross-checked one level down."""
    if not constituent.is_infinite():
        raise DomainError("multiplicities are defined for infinite constituents")
    top_vertex = constituent.string[-1]
    n, j = top_vertex
    k, l = _pure_counts(graph.levels[n - 1].ambient_branching, j, f"level {n}")
    if len(constituent.string) >= 2:
        m, i = constituent.string[-2]
        k2, l2 = _pure_counts(graph.levels[m - 1].ambient_branching, i, f"level {m}")
        if (k2, l2) != (k, l):
            raise NotStabilizedError(
                f"multiplicities differ between levels {m} and {n}: "
                f"({k2},{l2}) vs ({k},{l}); not yet stable, lengthen prefix"
            )
    source_idx = NATURAL_MODULE_INDEX[graph.algebra_at(top_vertex).series]
    ambient_idx = NATURAL_MODULE_INDEX[graph.levels[n - 1].ambient.series]
    if (k + l) * source_idx != graph.alpha[top_vertex] * ambient_idx:
        raise InternalConsistencyError(
            f"(k+l) = {k + l} does not match the embedding index "
            f"{graph.alpha[top_vertex]} of {top_vertex}"
        )
    return k, l


def trivial_dims(graph: BratteliGraph, constituent: Constituent) -> tuple[ExtendedDim, ExtendedDim]:
    """Dimensions of the trivial parts of V and V_* over one constituent."""
    if not constituent.is_infinite():
        raise DomainError("trivial parts are tracked for infinite constituents")
    top_n, top_j = constituent.string[-1]
    top_level = graph.levels[top_n - 1]
    if top_level.conatural_branching is not None:
        # a dual-side override must mirror the primal multiplicities:
        # k copies of the conatural and l copies of the natural
        k, l = _pure_counts(top_level.ambient_branching, top_j, f"level {top_n}")
        k_dual, l_dual = _pure_counts(
            _conatural_decomposition(top_level), top_j, f"level {top_n} (conatural)"
        )
        alg = graph.algebra_at((top_n, top_j))
        self_dual = dual_weight(alg, alg.natural_weight) == alg.natural_weight
        mirrored = (
            k_dual + l_dual == k + l if self_dual else (k_dual, l_dual) == (l, k)
        )
        if not mirrored:
            raise DomainError(
                f"conatural override at level {top_n} carries multiplicities "
                f"({k_dual},{l_dual}), expected the mirror of ({k},{l})"
            )
    primal, dual = [], []
    for n, j in constituent.string:
        level = graph.levels[n - 1]
        primal.append(_trivial_mass(level.ambient_branching, (j,)))
        dual.append(_trivial_mass(_conatural_decomposition(level), (j,)))
    return ExtendedDim.from_sequence(primal), ExtendedDim.from_sequence(dual)


@dataclass(frozen=True)
class ConstituentSocle:
    cid: int
    kind: str
    algebra: str | None
    k: int
    l: int
    dim_trivial: ExtendedDim
    dim_trivial_dual: ExtendedDim


@dataclass(frozen=True)
class IsotypicRow:
    cid: int
    algebra: str
    weight: Weight
    mult: int


@dataclass(frozen=True)
class SocleReport:
    constituents: tuple[ConstituentSocle, ...]
    finite_part: tuple[IsotypicRow, ...]
    quotient: ExtendedDim
    quotient_dual: ExtendedDim


def _check_disjoint_supports(graph: BratteliGraph):
    """At the top level, no summand may be non-trivial on two components."""
    top = graph.levels[-1].ambient_branching
    for s in top.summands:
        support = [j for j, w in enumerate(s.weights) if any(w)]
        if len(support) > 1:
            raise DomainError(
                f"top-level summand {s.weights} has overlapping isotypic supports "
                f"{support}: inconsistent system data"
            )


def socle_report(graph: BratteliGraph, constituents=None) -> SocleReport:
    if constituents is None:
        constituents = decompose(graph)
    _check_disjoint_supports(graph)

    rows = []
    finite_rows = []
    top_level = graph.levels[-1]
    endpoint_to_constituent = {c.string[-1]: c for c in constituents}
    for vertex in sorted(endpoint_to_constituent):
        c = endpoint_to_constituent[vertex]
        if c.is_infinite():
            k, l = multiplicities(graph, c)
            dim_n, dim_n_star = trivial_dims(graph, c)
            rows.append(
                ConstituentSocle(
                    c.cid, c.kind, str(c.algebra) if c.algebra else None, k, l, dim_n, dim_n_star
                )
            )
        else:
            j = vertex[1]
            alg = graph.algebra_at(vertex)
            counts: dict[Weight, int] = {}
            for s in top_level.ambient_branching.summands:
                w = s.weights[j]
                if any(w):
                    counts[w] = counts.get(w, 0) + s.mult
            for w in sorted(counts):
                finite_rows.append(IsotypicRow(c.cid, str(alg), w, counts[w]))

    primal = [_trivial_mass(lv.ambient_branching, range(len(lv.components.factors))) for lv in graph.levels]
    dual = [
        _trivial_mass(_conatural_decomposition(lv), range(len(lv.components.factors)))
        for lv in graph.levels
    ]
    return SocleReport(
        constituents=tuple(rows),
        finite_part=tuple(finite_rows),
        quotient=ExtendedDim.from_sequence(primal),
        quotient_dual=ExtendedDim.from_sequence(dual),
    )


@dataclass(frozen=True)
class SubsetInvariants:
    ids: tuple[int, ...]
    dim_trivial: ExtendedDim
    dim_trivial_dual: ExtendedDim
    quotient: ExtendedDim
    quotient_dual: ExtendedDim


@dataclass(frozen=True)
class InvariantsReport:
    multiplicity_pairs: tuple[tuple[int, int, int], ...]  # (cid, k, l)
    subsets: tuple[SubsetInvariants, ...]


def standard_invariants(graph: BratteliGraph, constituents=None, subsets=None) -> InvariantsReport:
    """k/l pairs plus, per subset J of infinite constituents, the trivial
    dimensions of the joint fixed part and the quotient evidence.

    Defaults to every singleton and the full infinite set.  The quotient
    entries repeat the trivial evidence: over a finite prefix both are read
    from the same stabilized trivial mass.
    """
    if constituents is None:
        constituents = decompose(graph)
    by_id = {c.cid: c for c in constituents}
    infinite_ids = [c.cid for c in constituents if c.is_infinite()]

    if not subsets:
        subsets = [(cid,) for cid in infinite_ids]
        if len(infinite_ids) > 1:
            subsets.append(tuple(infinite_ids))
    chosen = []
    for J in subsets:
        J = tuple(sorted(set(J)))
        if not J:
            raise DomainError("subsets must be non-empty")
        for cid in J:
            if cid not in by_id or not by_id[cid].is_infinite():
                raise DomainError(f"constituent {cid} is not an infinite constituent")
        if J not in chosen:
            chosen.append(J)

    pairs = []
    for cid in infinite_ids:
        k, l = multiplicities(graph, by_id[cid])
        pairs.append((cid, k, l))

    rows = []
    for J in chosen:
        strings = [dict(by_id[cid].string) for cid in J]
        start = max(s[0][0] for s in (by_id[cid].string for cid in J))
        primal, dual = [], []
        for n in range(start, graph.top + 1):
            positions = [s[n] for s in strings]
            level = graph.levels[n - 1]
            primal.append(_trivial_mass(level.ambient_branching, positions))
            dual.append(_trivial_mass(_conatural_decomposition(level), positions))
        dim_n = ExtendedDim.from_sequence(primal)
        dim_n_star = ExtendedDim.from_sequence(dual)
        rows.append(SubsetInvariants(J, dim_n, dim_n_star, dim_n, dim_n_star))
    return InvariantsReport(tuple(pairs), tuple(rows))
