"""Exact root-system data for the classical series A, B, C, D.

Conventions, fixed once for the whole package:

* Bourbaki numbering of simple roots.  For B_n the last simple root is
  short, for C_n the last is long, for D_n the fork is at the end.
* Weights are tuples of integers in fundamental-weight coordinates
  (Dynkin labels).  Epsilon coordinates are used internally to generate
  positive roots and never leave this module.
* The invariant form is normalized so that (alpha, alpha) = 2 for long
  roots; its Gram matrix on fundamental weights is CartanInverse * D with
  D the symmetrizer diag((alpha_i, alpha_i)/2).
* All arithmetic is Fraction / int.  No floats anywhere.

Rank floors: A and C from rank 1, B from rank 2, D from rank 4.  The
small orthogonal algebras so(2), so(3), so(4), so(6) coincide with (sums
of) other series members and must be entered under their A/C names.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DimensionMismatchError, DomainError, ParseError
from .linalg import frac_matrix, invert

Weight = tuple[int, ...]

SERIES = ("A", "B", "C", "D")

_RANK_FLOOR = {"A": 1, "B": 2, "C": 1, "D": 4}


@dataclass(frozen=True, order=True)
class SimpleAlgebra:
    """A classical simple Lie algebra, e.g. SimpleAlgebra('B', 3) = so(7)."""

    series: str
    rank: int

    def __post_init__(self):
        if self.series not in SERIES:
            raise DomainError(f"unknown series {self.series!r}; expected one of {SERIES}")
        if not isinstance(self.rank, int) or self.rank < _RANK_FLOOR[self.series]:
            raise DomainError(
                f"rank {self.rank} not allowed for series {self.series} "
                f"(floor is {_RANK_FLOOR[self.series]}; use the isomorphic A/C type instead)"
            )

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"

    @staticmethod
    def parse(literal: str) -> "SimpleAlgebra":
        """Parse an algebra literal such as 'A3' or 'B12'."""
        text = literal.strip()
        if len(text) < 2 or text[0] not in SERIES or not text[1:].isdigit():
            raise ParseError(f"bad algebra literal {literal!r}; expected e.g. 'A3', 'D4'")
        try:
            return SimpleAlgebra(text[0], int(text[1:]))
        except DomainError as exc:
            raise ParseError(str(exc)) from exc

    @property
    def natural_weight(self) -> Weight:
        return (1,) + (0,) * (self.rank - 1)

    @property
    def natural_dim(self) -> int:
        n = self.rank
        return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[self.series]

    @property
    def dim(self) -> int:
        n = self.rank
        return {"A": n * (n + 2), "B": n * (2 * n + 1), "C": n * (2 * n + 1), "D": n * (2 * n - 1)}[self.series]


def check_weight(alg: SimpleAlgebra, weight) -> Weight:
    weight = tuple(weight)
    if len(weight) != alg.rank:
        raise DimensionMismatchError(
            f"weight {weight} has length {len(weight)}, expected rank {alg.rank} of {alg}"
        )
    if not all(isinstance(x, int) for x in weight):
        raise DomainError(f"weight {weight} must consist of integers")
    return weight


def check_dominant(alg: SimpleAlgebra, weight) -> Weight:
    weight = check_weight(alg, weight)
    if any(x < 0 for x in weight):
        raise DomainError(f"weight {weight} is not dominant")
    return weight


@lru_cache(maxsize=None)
def cartan_matrix(alg: SimpleAlgebra) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix a[i][j] = <alpha_i, alpha_j^vee>, Bourbaki numbering."""
    n = alg.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if alg.series == "B" and n >= 2:
        a[n - 2][n - 1] = -2      # last root short
        a[n - 1][n - 2] = -1
    elif alg.series == "C" and n >= 2:
        a[n - 2][n - 1] = -1      # last root long
        a[n - 1][n - 2] = -2
    elif alg.series == "D":
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    return tuple(tuple(row) for row in a)


@lru_cache(maxsize=None)
def symmetrizer(alg: SimpleAlgebra) -> tuple[Fraction, ...]:
    """d_i = (alpha_i, alpha_i) / 2 with long roots of squared length 2."""
    n = alg.rank
    if alg.series == "B":
        return tuple([Fraction(1)] * (n - 1) + [Fraction(1, 2)])
    if alg.series == "C":
        return tuple([Fraction(1, 2)] * (n - 1) + [Fraction(1)])
    return tuple([Fraction(1)] * n)


@lru_cache(maxsize=None)
def weight_gram(alg: SimpleAlgebra) -> tuple[tuple[Fraction, ...], ...]:
    """Gram matrix gram[i][j] = (omega_i, omega_j) of the normalized form."""
    inv = invert(frac_matrix(cartan_matrix(alg)))
    d = symmetrizer(alg)
    gram = tuple(tuple(inv[i][j] * d[j] for j in range(alg.rank)) for i in range(alg.rank))
    _validate_gram(alg, gram)
    return gram


def _validate_gram(alg, gram):
    n = alg.rank
    for i in range(n):
        for j in range(n):
            if gram[i][j] != gram[j][i]:
                raise DomainError(f"gram matrix of {alg} is not symmetric")
    # Defining property (omega_i, alpha_j^vee) = delta_ij, with alpha_j^vee
    # expressed through the Cartan matrix and the symmetrizer.
    a = cartan_matrix(alg)
    d = symmetrizer(alg)
    for i in range(n):
        for j in range(n):
            val = sum(gram[i][k] * a[j][k] for k in range(n)) / d[j]
            if val != (1 if i == j else 0):
                raise DomainError(f"gram matrix of {alg} fails (omega_i, alpha_j^vee) = delta_ij")


def gram_form(alg: SimpleAlgebra, lam, mu) -> Fraction:
    """The form evaluated against the Gram table, lam^T * gram * mu."""
    lam = check_weight(alg, lam)
    mu = check_weight(alg, mu)
    gram = weight_gram(alg)
    total = Fraction(0)
    for i, li in enumerate(lam):
        if li:
            row = gram[i]
            total += li * sum(row[j] * mj for j, mj in enumerate(mu) if mj)
    return total


def _eps_coordinates(alg: SimpleAlgebra, weight) -> list[Fraction]:
    """Internal epsilon coordinates of a weight (never exposed)."""
    n = alg.rank
    w = [Fraction(x) for x in weight]
    if alg.series == "A":
        # partial sums in R^{n+1}; the centering happens in the form
        out = []
        acc = Fraction(0)
        for i in range(n, -1, -1):
            out.append(acc)
            if i > 0:
                acc += w[i - 1]
        return list(reversed(out))
    if alg.series == "B":
        half = w[n - 1] / 2
        out = [half] * n
        acc = Fraction(0)
        for i in range(n - 2, -1, -1):
            acc += w[i]
            out[i] += acc
        return out
    if alg.series == "C":
        out = [Fraction(0)] * n
        acc = Fraction(0)
        for i in range(n - 1, -1, -1):
            acc += w[i]
            out[i] = acc
        return out
    plus = (w[n - 2] + w[n - 1]) / 2
    minus = (w[n - 1] - w[n - 2]) / 2
    out = [plus] * (n - 1) + [minus]
    acc = Fraction(0)
    for i in range(n - 3, -1, -1):
        acc += w[i]
        out[i] += acc
    return out


def weight_form(alg: SimpleAlgebra, lam, mu) -> Fraction:
    """Normalized invariant form on the weight lattice (long roots of norm 2).

    Evaluated in epsilon coordinates; agrees exactly with the Gram-table
    pairing lam^T * gram * mu (see gram_form), which stays quadratic-time
    in the rank instead of cubic.
    """
    lam = check_weight(alg, lam)
    mu = check_weight(alg, mu)
    a = _eps_coordinates(alg, lam)
    b = _eps_coordinates(alg, mu)
    total = sum((x * y for x, y in zip(a, b)), Fraction(0))
    if alg.series == "A":
        total -= sum(a) * sum(b) / (alg.rank + 1)
    elif alg.series == "C":
        total /= 2
    return total


def simple_roots(alg: SimpleAlgebra) -> list[Weight]:
    """Simple roots in fundamental-weight coordinates (rows of the Cartan matrix)."""
    return [tuple(row) for row in cartan_matrix(alg)]


@lru_cache(maxsize=None)
def positive_roots(alg: SimpleAlgebra) -> tuple[Weight, ...]:
    """All positive roots, in fundamental-weight coordinates.

    Counts: A_n has n(n+1)/2, B_n and C_n have n^2, D_n has n(n-1).
    """
    n = alg.rank
    eps_roots: list[dict[int, int]] = []

    def e(*pairs):
        return {i: c for i, c in pairs if c}

    if alg.series == "A":
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                eps_roots.append(e((i, 1), (j, -1)))
    else:
        for i in range(n):
            for j in range(i + 1, n):
                eps_roots.append(e((i, 1), (j, -1)))
                eps_roots.append(e((i, 1), (j, 1)))
        if alg.series == "B":
            eps_roots.extend(e((i, 1)) for i in range(n))
        elif alg.series == "C":
            eps_roots.extend(e((i, 2)) for i in range(n))

    def labels(root: dict[int, int]) -> Weight:
        def coord(i):
            return root.get(i, 0)

        lab = [coord(k) - coord(k + 1) for k in range(n - 1)]
        if alg.series == "A":
            lab.append(coord(n - 1) - coord(n))
        elif alg.series == "B":
            lab.append(2 * coord(n - 1))
        elif alg.series == "C":
            lab.append(coord(n - 1))
        else:
            lab[n - 2] = coord(n - 2) - coord(n - 1)
            lab.append(coord(n - 2) + coord(n - 1))
        return tuple(lab)

    roots = tuple(sorted(labels(r) for r in eps_roots))
    expected = {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1)}[alg.series]
    if len(roots) != expected:
        raise DomainError(f"positive root count for {alg}: got {len(roots)}, expected {expected}")
    return roots


def rho(alg: SimpleAlgebra) -> Weight:
    """Half-sum of positive roots; the all-ones weight in label coordinates."""
    return (1,) * alg.rank


def _doubled_eps(alg: SimpleAlgebra, labels) -> list[int]:
    """2x the epsilon coordinates: always integers, for the Weyl product."""
    return [int(2 * c) for c in _eps_coordinates(alg, labels)]


def _weyl_numerator(alg: SimpleAlgebra, doubled) -> int:
    # One integer factor per positive root; the doubling cancels between
    # the lam+rho and rho products.
    c = doubled
    n = len(c)
    product = 1
    if alg.series == "A":
        for i in range(n):
            for j in range(i + 1, n):
                product *= c[i] - c[j]
        return product
    for i in range(n):
        for j in range(i + 1, n):
            product *= (c[i] - c[j]) * (c[i] + c[j])
    if alg.series in ("B", "C"):
        for x in c:
            product *= x
    return product


def dimension(alg: SimpleAlgebra, lam) -> int:
    """Weyl dimension formula: prod over alpha > 0 of (lam+rho, alpha)/(rho, alpha).

    Evaluated root-by-root in epsilon coordinates with integer arithmetic.
    """
    lam = check_dominant(alg, lam)
    shifted = tuple(x + 1 for x in lam)
    num = _weyl_numerator(alg, _doubled_eps(alg, shifted))
    den = _weyl_numerator(alg, _doubled_eps(alg, rho(alg)))
    if den == 0 or num % den != 0 or num // den <= 0:
        raise DomainError(f"Weyl dimension of {lam} over {alg} is not a positive integer")
    return num // den


def dual_weight(alg: SimpleAlgebra, lam) -> Weight:
    """Highest weight of the dual module (action of -w0 on labels).

    Reversal for A_n, identity for B_n and C_n; for D_n the last two labels
    swap exactly when the rank is odd.
    """
    lam = check_dominant(alg, lam)
    if alg.series == "A":
        return tuple(reversed(lam))
    if alg.series == "D" and alg.rank % 2 == 1:
        return lam[:-2] + (lam[-1], lam[-2])
    return lam


def is_self_dual(alg: SimpleAlgebra, lam) -> bool:
    return dual_weight(alg, lam) == tuple(lam)


def dominant_weights_up_to_dim(alg: SimpleAlgebra, bound: int) -> list[Weight]:
    """All dominant weights of dimension <= bound, in lexicographic order.

    Relies on the Weyl dimension being strictly increasing in every label,
    which makes the prefix pruning exhaustive.
    """
    if bound < 1:
        return []
    out: list[Weight] = []
    labels = [0] * alg.rank

    def rec(i: int):
        if i == alg.rank:
            out.append(tuple(labels))
            return
        v = 0
        while True:
            labels[i] = v
            if dimension(alg, tuple(labels)) > bound:
                break
            rec(i + 1)
            v += 1
        labels[i] = 0

    rec(0)
    return out
