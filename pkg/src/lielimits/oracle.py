"""Independent verification engine.

Weight multiplicities come from the Freudenthal recursion over the
saturated weight system, the trace-form index evaluates Tr pi(h)^2 / 2 on
a long simple coroot h, and small tensor products are decomposed by
iterated highest-weight extraction.  None of these touch the closed-form
index formula, so agreement with it is evidence rather than tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebras import (
    SimpleAlgebra,
    Weight,
    cartan_matrix,
    check_dominant,
    dimension,
    weight_form,
    weight_gram,
)
from .errors import InternalConsistencyError, ResourceBoundError
from .linalg import frac_matrix, invert, mat_vec

DEFAULT_DIM_BOUND = 5000


@dataclass(frozen=True)
class WeightMultiset:
    """Exact weight multiplicities of one irreducible module."""

    algebra: SimpleAlgebra
    entries: tuple[tuple[Weight, int], ...]

    def as_dict(self) -> dict[Weight, int]:
        return dict(self.entries)

    @property
    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def check_reflection_symmetry(self) -> bool:
        """Invariance under every simple reflection s_i(mu) = mu - mu_i alpha_i."""
        table = self.as_dict()
        cartan = cartan_matrix(self.algebra)
        for mu, m in self.entries:
            for i in range(self.algebra.rank):
                refl = tuple(x - mu[i] * a for x, a in zip(mu, cartan[i]))
                if table.get(refl, 0) != m:
                    return False
        return True


@lru_cache(maxsize=None)
def _inverse_cartan(alg: SimpleAlgebra):
    return invert(frac_matrix(cartan_matrix(alg)))


def _depth(alg: SimpleAlgebra, top: Weight, mu: Weight) -> int:
    """Height of top - mu in simple-root coordinates."""
    diff = [Fraction(a - b) for a, b in zip(top, mu)]
    coeffs = mat_vec(list(zip(*_inverse_cartan(alg))), diff)
    total = sum(coeffs)
    if total.denominator != 1 or any(c.denominator != 1 or c < 0 for c in coeffs):
        raise InternalConsistencyError(f"{mu} is not below {top} in the root lattice")
    return int(total)


def weight_system(alg: SimpleAlgebra, lam) -> set[Weight]:
    """Saturated set of weights of the irreducible with highest weight lam."""
    lam = check_dominant(alg, lam)
    cartan = cartan_matrix(alg)
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for i in range(alg.rank):
                for k in range(1, mu[i] + 1):
                    down = tuple(x - k * a for x, a in zip(mu, cartan[i]))
                    if down not in seen:
                        seen.add(down)
                        nxt.append(down)
        frontier = nxt
    return seen


@lru_cache(maxsize=None)
def freudenthal(alg: SimpleAlgebra, lam: Weight, dim_bound: int = DEFAULT_DIM_BOUND) -> WeightMultiset:
    """Exact weight multiplicities via the Freudenthal recursion.

    The inner string walks run on integer-scaled pairings and a successor
    table (weight id -> weight id per positive root); only the final
    division per weight touches rationals.
    """
    lam = check_dominant(alg, lam)
    dim = dimension(alg, lam)
    if dim > dim_bound:
        raise ResourceBoundError(
            f"dimension {dim} of {lam} over {alg} exceeds the configured bound {dim_bound}"
        )
    weights = sorted(weight_system(alg, lam), key=lambda mu: (_depth(alg, lam, mu), mu))
    index = {mu: i for i, mu in enumerate(weights)}

    gram = [list(row) for row in weight_gram(alg)]
    from .algebras import positive_roots

    roots = positive_roots(alg)
    forms = [mat_vec(gram, [Fraction(x) for x in alpha]) for alpha in roots]
    scale = 1
    for row in forms:
        for value in row:
            scale = scale * value.denominator // _gcd(scale, value.denominator)
    int_forms = [[int(v * scale) for v in row] for row in forms]
    successors = [
        [index.get(tuple(x + a for x, a in zip(mu, alpha)), -1) for mu in weights]
        for alpha in roots
    ]

    def norm_shifted(mu):
        shifted = tuple(x + 1 for x in mu)
        return weight_form(alg, shifted, shifted)

    top_norm = norm_shifted(lam)
    mult = [0] * len(weights)
    mult[0] = 1
    for i in range(1, len(weights)):
        mu = weights[i]
        acc = 0
        for alpha, ga, succ in zip(roots, int_forms, successors):
            j = succ[i]
            if j < 0:
                continue
            base = sum(c * x for c, x in zip(ga, mu))
            step = sum(c * a for c, a in zip(ga, alpha))
            k = 1
            while j >= 0:
                acc += mult[j] * (base + k * step)
                j = succ[j]
                k += 1
        denom = top_norm - norm_shifted(mu)
        if denom == 0:
            raise InternalConsistencyError(f"Freudenthal denominator vanished at {mu}")
        value = Fraction(2 * acc, scale) / denom
        if value.denominator != 1 or value <= 0:
            raise InternalConsistencyError(f"non-integral multiplicity {value} at {mu}")
        mult[i] = int(value)
    if sum(mult) != dim:
        raise InternalConsistencyError(
            f"multiplicities of {lam} over {alg} sum to {sum(mult)}, expected {dim}"
        )
    return WeightMultiset(alg, tuple(sorted(zip(weights, mult))))


def _gcd(a: int, b: int) -> int:
    from math import gcd

    return gcd(a, b)


def _long_simple_root_position(alg: SimpleAlgebra) -> int:
    # All simple roots are long for A and D; for B only the last is short;
    # for C only the last is long.
    return alg.rank - 1 if alg.series == "C" else 0


def trace_index(alg: SimpleAlgebra, lam, dim_bound: int = DEFAULT_DIM_BOUND) -> int:
    """Index as Tr pi(h)^2 / <h, h> for a long simple coroot h (<h, h> = 2).

    Evaluating a weight on that coroot reads off a single Dynkin label, so
    the trace is a plain sum over the Freudenthal multiset.
    """
    ms = freudenthal(alg, tuple(lam), dim_bound)
    j = _long_simple_root_position(alg)
    trace = sum(m * mu[j] * mu[j] for mu, m in ms.entries)
    if trace % 2 != 0:
        raise InternalConsistencyError(f"odd trace {trace} for {lam} over {alg}")
    return trace // 2


def tensor_decompose(alg: SimpleAlgebra, lam, mu, dim_bound: int = DEFAULT_DIM_BOUND):
    """Decompose the tensor product of two irreducibles into a ModuleDecomposition.

    Works by convolving the two weight multisets and repeatedly extracting
    the summand of smallest depth; dimension is checked to be preserved.
    """
    from .index import ModuleDecomposition, SemisimpleAlgebra, Summand

    lam = check_dominant(alg, lam)
    mu = check_dominant(alg, mu)
    product_dim = dimension(alg, lam) * dimension(alg, mu)
    if product_dim > dim_bound:
        raise ResourceBoundError(
            f"product dimension {product_dim} exceeds the configured bound {dim_bound}"
        )
    left = freudenthal(alg, lam, dim_bound)
    right = freudenthal(alg, mu, dim_bound)
    product: dict[Weight, int] = {}
    for wl, ml in left.entries:
        for wr, mr in right.entries:
            key = tuple(a + b for a, b in zip(wl, wr))
            product[key] = product.get(key, 0) + ml * mr

    top = tuple(a + b for a, b in zip(lam, mu))
    found: list[Summand] = []
    remaining = product_dim
    while remaining > 0:
        candidates = [w for w, m in product.items() if m > 0]
        if not candidates:
            raise InternalConsistencyError("tensor extraction ran out of weights early")
        nu = min(candidates, key=lambda w: (_depth(alg, top, w), w))
        if any(x < 0 for x in nu):
            raise InternalConsistencyError(f"extracted a non-dominant highest weight {nu}")
        count = product[nu]
        for w, m in freudenthal(alg, nu, dim_bound).entries:
            new = product.get(w, 0) - count * m
            if new < 0:
                raise InternalConsistencyError(f"negative multiplicity at {w} while extracting {nu}")
            product[w] = new
        found.append(Summand((nu,), count))
        remaining -= count * dimension(alg, nu)
    if remaining != 0 or any(m != 0 for m in product.values()):
        raise InternalConsistencyError("tensor decomposition did not exhaust the product")
    return ModuleDecomposition(SemisimpleAlgebra((alg,)), tuple(found))
