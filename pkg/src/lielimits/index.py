"""Dynkin index calculus.

The index of an irreducible module U with highest weight lam over a simple
algebra f is (dim U / dim f) * (lam, lam + 2 rho); it is always a
non-negative integer.  Embedding indices divide out the index of the
target's natural module, fixed per series as {A: 1, B: 2, C: 1, D: 2}
(derived from the same formula and asserted at import).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import algebras
from .algebras import SimpleAlgebra, Weight, check_dominant, dimension, dual_weight, weight_form
from .errors import DimensionMismatchError, DomainError, InternalConsistencyError, ResourceBoundError


@dataclass(frozen=True)
class SemisimpleAlgebra:
    """An ordered direct sum of classical simple algebras."""

    factors: tuple[SimpleAlgebra, ...]

    def __post_init__(self):
        if not self.factors:
            raise DomainError("a semisimple algebra needs at least one simple factor")
        object.__setattr__(self, "factors", tuple(self.factors))

    def __str__(self) -> str:
        return "+".join(str(f) for f in self.factors)

    def __len__(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class Summand:
    """One irreducible summand: a weight per factor (zero = trivial), with multiplicity."""

    weights: tuple[Weight, ...]
    mult: int = 1

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(tuple(w) for w in self.weights))
        if self.mult < 1:
            raise DomainError(f"multiplicity must be positive, got {self.mult}")


@dataclass(frozen=True)
class ModuleDecomposition:
    """A finite multiset of irreducible summands over a semisimple algebra."""

    algebra: SemisimpleAlgebra
    summands: tuple[Summand, ...]

    def __post_init__(self):
        merged: dict[tuple[Weight, ...], int] = {}
        for s in self.summands:
            if len(s.weights) != len(self.algebra.factors):
                raise DimensionMismatchError(
                    f"summand has {len(s.weights)} weights for {len(self.algebra.factors)} factors"
                )
            ws = tuple(check_dominant(f, w) for f, w in zip(self.algebra.factors, s.weights))
            merged[ws] = merged.get(ws, 0) + s.mult
        object.__setattr__(
            self, "summands", tuple(Summand(w, m) for w, m in sorted(merged.items()))
        )

    def summand_dim(self, s: Summand) -> int:
        d = 1
        for f, w in zip(self.algebra.factors, s.weights):
            d *= dimension(f, w)
        return d

    @property
    def total_dim(self) -> int:
        return sum(s.mult * self.summand_dim(s) for s in self.summands)

    def dual(self) -> "ModuleDecomposition":
        """Factorwise dual of every summand (same multiplicities)."""
        return ModuleDecomposition(
            self.algebra,
            tuple(
                Summand(tuple(dual_weight(f, w) for f, w in zip(self.algebra.factors, s.weights)), s.mult)
                for s in self.summands
            ),
        )

    def is_self_dual(self) -> bool:
        return self.dual() == self


def _looks_like_weights(obj) -> bool:
    return (
        isinstance(obj, (list, tuple))
        and bool(obj)
        and all(isinstance(w, (list, tuple)) for w in obj)
    )


def decomposition(factors, records) -> ModuleDecomposition:
    """Convenience constructor.  Each record is a Summand, a per-factor
    weight list like ((1, 0), (0, 0)), or a pair (weights, mult)."""
    algebra = SemisimpleAlgebra(tuple(factors))
    summands = []
    for rec in records:
        if isinstance(rec, Summand):
            summands.append(rec)
        elif len(rec) == 2 and isinstance(rec[1], int) and _looks_like_weights(rec[0]):
            summands.append(Summand(tuple(rec[0]), rec[1]))
        elif _looks_like_weights(rec):
            summands.append(Summand(tuple(rec), 1))
        else:
            raise DomainError(f"cannot read summand record {rec!r}")
    return ModuleDecomposition(algebra, tuple(summands))


# Index of the natural module per series; the divisor in embedding_index.
NATURAL_MODULE_INDEX = {"A": 1, "B": 2, "C": 1, "D": 2}


def index_of_irrep(alg: SimpleAlgebra, lam) -> int:
    """Dynkin index of the irreducible with highest weight lam; integer >= 0."""
    lam = check_dominant(alg, lam)
    two_rho = tuple(2 for _ in lam)
    shifted = tuple(x + y for x, y in zip(lam, two_rho))
    value = Fraction(dimension(alg, lam), alg.dim) * weight_form(alg, lam, shifted)
    if value.denominator != 1 or value < 0:
        raise InternalConsistencyError(f"index of {lam} over {alg} is not an integer >= 0: {value}")
    return int(value)


def index_of_module(decomp: ModuleDecomposition, factor: int) -> int:
    """Index of the whole module seen through one source factor.

    Sums mult * (product of the other factors' dims) * index(weight at
    `factor`); this is exactly the direct-sum and tensor-product rules
    combined.
    """
    factors = decomp.algebra.factors
    if not 0 <= factor < len(factors):
        raise DomainError(f"factor {factor} out of range for {decomp.algebra}")
    total = 0
    for s in decomp.summands:
        others = 1
        for i, (f, w) in enumerate(zip(factors, s.weights)):
            if i != factor:
                others *= dimension(f, w)
        total += s.mult * others * index_of_irrep(factors[factor], s.weights[factor])
    return total


@dataclass(frozen=True)
class Embedding:
    """An embedding of a semisimple algebra into a simple one, recorded by the
    branching of the target's natural module over the source."""

    source: SemisimpleAlgebra
    target: SimpleAlgebra
    branching: ModuleDecomposition

    def __post_init__(self):
        if self.branching.algebra != self.source:
            raise DomainError("branching must decompose over the source algebra")
        if self.branching.total_dim != self.target.natural_dim:
            raise DimensionMismatchError(
                f"branching dimension {self.branching.total_dim} != natural dimension "
                f"{self.target.natural_dim} of target {self.target}"
            )
        if self.target.series in ("B", "C", "D") and not self.branching.is_self_dual():
            raise DomainError(
                f"target {self.target} carries an invariant form; the branching must be "
                "self-dual as a multiset"
            )


def restrict_to_factor(decomp: ModuleDecomposition, factor: int) -> ModuleDecomposition:
    """The same module seen over a single factor: every tensor summand
    collapses to its weight at `factor`, multiplied by the other factors'
    dimensions."""
    factors = decomp.algebra.factors
    if not 0 <= factor < len(factors):
        raise DomainError(f"factor {factor} out of range for {decomp.algebra}")
    summands = []
    for s in decomp.summands:
        others = 1
        for i, (f, w) in enumerate(zip(factors, s.weights)):
            if i != factor:
                others *= dimension(f, w)
        summands.append(Summand((s.weights[factor],), s.mult * others))
    return ModuleDecomposition(SemisimpleAlgebra((factors[factor],)), tuple(summands))


def embedding_index(emb: Embedding) -> list[int]:
    """Per-source-factor Dynkin index of the embedding."""
    divisor = NATURAL_MODULE_INDEX[emb.target.series]
    out = []
    for j in range(len(emb.source.factors)):
        raw = index_of_module(emb.branching, j)
        if raw % divisor != 0:
            raise DomainError(
                f"module index {raw} of factor {j} is not divisible by the natural-module "
                f"index {divisor} of target {emb.target}: invalid branching data"
            )
        out.append(raw // divisor)
    return out


@dataclass(frozen=True)
class Standard:
    dual: bool = False  # True when the single copy is the conatural

    def __str__(self):
        return "Standard"


@dataclass(frozen=True)
class Diagonal:
    copies: int          # copies of the natural module
    dual_copies: int     # copies of its dual
    trivial: int         # trivial lines

    def __str__(self):
        return f"Diagonal(k={self.copies}, l={self.dual_copies}, t={self.trivial})"


@dataclass(frozen=True)
class General:
    def __str__(self):
        return "General"


def classify_embedding(emb: Embedding):
    """Standard / Diagonal(k, l, t) / General, for a simple source."""
    if len(emb.source.factors) != 1:
        raise DomainError("classification is defined for embeddings of a simple algebra")
    alg = emb.source.factors[0]
    omega = alg.natural_weight
    omega_dual = dual_weight(alg, omega)
    zero = (0,) * alg.rank
    k = l = t = 0
    for s in emb.branching.summands:
        (w,) = s.weights
        if w == zero:
            t += s.mult
        elif w == omega:
            k += s.mult
        elif w == omega_dual:
            l += s.mult
        else:
            return General()
    if k + l == 1:
        return Standard(dual=(l == 1))
    return Diagonal(k, l, t)


def compose_index(first: list[Embedding], second: Embedding) -> int:
    """Index of a composite f -> k_1 + ... + k_l -> f'.

    `first` holds one Embedding per middle factor (all with the same simple
    source f); `second` embeds the middle sum into f'.  Both sides of the
    sum formula are computed and must agree exactly: the sum of per-factor
    index products, and the index of the composite branching of the natural
    module of f' over f (resolved through the oracle when every middle
    weight is a natural, a conatural, or trivial; through the chain rule
    per summand otherwise).
    """
    if not first:
        raise DomainError("need at least one middle factor")
    sources = {e.source for e in first}
    if len(sources) != 1 or len(first[0].source.factors) != 1:
        raise DomainError("all first-leg embeddings must share one simple source")
    f = first[0].source.factors[0]
    middle = tuple(e.target for e in first)
    if second.source.factors != middle:
        raise DomainError(
            f"middle algebra mismatch: first legs give {'+'.join(map(str, middle))}, "
            f"second expects {second.source}"
        )

    leg_index = [embedding_index(e)[0] for e in first]
    side_sum = sum(
        li * sj for li, sj in zip(leg_index, embedding_index(second))
    )

    side_direct = _composite_index(f, first, second)
    if side_sum != side_direct:
        raise DomainError(
            f"composite index mismatch: sum formula gives {side_sum}, direct computation "
            f"gives {side_direct}; the branching data are inconsistent"
        )
    return side_sum


def _composite_index(f: SimpleAlgebra, first: list[Embedding], second: Embedding) -> int:
    divisor = NATURAL_MODULE_INDEX[second.target.series]
    try:
        total = 0
        for s in second.branching.summands:
            restricted = _restrict_summand(f, first, s)
            total += s.mult * index_of_module(restricted, 0)
        quotient = Fraction(total, divisor)
    except ResourceBoundError:
        quotient = Fraction(_composite_index_chain_rule(first, second), divisor)
    if quotient.denominator != 1:
        raise DomainError("composite branching index is not divisible by the target divisor")
    return int(quotient)


def _restrict_summand(f: SimpleAlgebra, first: list[Embedding], s: Summand) -> ModuleDecomposition:
    """Restrict one tensor summand of the second branching down to f.

    Middle weights must be the natural, the conatural, or zero; anything
    else has no structural restriction and trips the chain-rule fallback.
    """
    parts: list[ModuleDecomposition] = []
    for e, w in zip(first, s.weights):
        k = e.target
        zero = (0,) * k.rank
        if w == zero:
            continue
        if w == k.natural_weight:
            parts.append(e.branching)
        elif w == dual_weight(k, k.natural_weight):
            parts.append(e.branching.dual())
        else:
            raise ResourceBoundError(f"middle weight {w} over {k} is not diagonal-compatible")
    if not parts:
        return decomposition([f], [(((0,) * f.rank,), 1)])
    result = parts[0]
    for nxt in parts[1:]:
        result = _tensor_over_simple(f, result, nxt)
    return result


def _tensor_over_simple(f, a: ModuleDecomposition, b: ModuleDecomposition) -> ModuleDecomposition:
    from . import oracle

    out: list[Summand] = []
    for sa in a.summands:
        for sb in b.summands:
            product = oracle.tensor_decompose(f, sa.weights[0], sb.weights[0])
            for sp in product.summands:
                out.append(Summand(sp.weights, sp.mult * sa.mult * sb.mult))
    return ModuleDecomposition(a.algebra, tuple(out))


def _composite_index_chain_rule(first: list[Embedding], second: Embedding) -> int:
    """I_f(natural of f') via the sum and tensor rules with per-factor chain rule."""
    leg_index = [embedding_index(e)[0] for e in first]
    total = Fraction(0)
    for s in second.branching.summands:
        dims = [dimension(k.target, w) for k, w in zip(first, s.weights)]
        prod = 1
        for d in dims:
            prod *= d
        term = Fraction(0)
        for leg, (e, w, d) in zip(leg_index, zip(first, s.weights, dims)):
            idx_middle = index_of_irrep(e.target, w)
            term += Fraction(leg * idx_middle, d)
        total += s.mult * prod * term
    if total.denominator != 1:
        raise InternalConsistencyError("chain-rule composite index is not an integer")
    return int(total)


def min_nondiagonal_index(alg: SimpleAlgebra, dim_bound: int) -> int:
    """Minimum index over dominant weights outside {0, natural, conatural}
    with dimension <= dim_bound; exhaustive by lexicographic enumeration."""
    omega = alg.natural_weight
    excluded = {(0,) * alg.rank, omega, dual_weight(alg, omega)}
    best = None
    for lam in algebras.dominant_weights_up_to_dim(alg, dim_bound):
        if lam in excluded:
            continue
        idx = index_of_irrep(alg, lam)
        if best is None or idx < best:
            best = idx
    if best is None:
        raise ResourceBoundError(
            f"bound too small: no dominant weight of {alg} outside the trivial, natural, "
            f"and conatural modules has dimension <= {dim_bound}"
        )
    return best


def _assert_natural_index_table():
    probes = {"A": (1, 2, 5), "B": (2, 3, 5), "C": (1, 2, 5), "D": (4, 5, 6)}
    for series, ranks in probes.items():
        for rank in ranks:
            alg = SimpleAlgebra(series, rank)
            got = index_of_irrep(alg, alg.natural_weight)
            if got != NATURAL_MODULE_INDEX[series]:
                raise InternalConsistencyError(
                    f"natural-module index table broken for {alg}: got {got}"
                )


_assert_natural_index_table()
