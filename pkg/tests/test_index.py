import pytest

from lielimits.algebras import SimpleAlgebra, dimension, dominant_weights_up_to_dim, dual_weight
from lielimits.errors import DimensionMismatchError, DomainError, ResourceBoundError
from lielimits.index import (
    NATURAL_MODULE_INDEX,
    Diagonal,
    Embedding,
    General,
    SemisimpleAlgebra,
    Standard,
    classify_embedding,
    compose_index,
    decomposition,
    embedding_index,
    index_of_irrep,
    index_of_module,
    min_nondiagonal_index,
    restrict_to_factor,
)

A1 = SimpleAlgebra("A", 1)
A2 = SimpleAlgebra("A", 2)
A3 = SimpleAlgebra("A", 3)


def simple_embedding(source, target, records):
    return Embedding(SemisimpleAlgebra((source,)), target, decomposition([source], records))


def test_index_examples():
    assert index_of_irrep(A1, (1,)) == 1
    assert index_of_irrep(A1, (2,)) == 4
    assert index_of_irrep(A2, (1, 1)) == 6
    assert index_of_irrep(SimpleAlgebra("B", 3), (1, 0, 0)) == 2


def test_index_integral_nonnegative_zero_iff_trivial():
    literals = ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4")
    for literal in literals:
        alg = SimpleAlgebra.parse(literal)
        for lam in dominant_weights_up_to_dim(alg, 2000):
            idx = index_of_irrep(alg, lam)  # integrality asserted inside
            assert idx >= 0
            assert (idx == 0) == (not any(lam))


def test_a1_closed_form():
    for d in range(1, 21):
        assert index_of_irrep(A1, (d - 1,)) == d * (d * d - 1) // 6


def test_spin_module_indices():
    for n in (2, 3, 4, 5):
        alg = SimpleAlgebra("B", n)
        assert index_of_irrep(alg, (0,) * (n - 1) + (1,)) == 2 ** (n - 2)
    for n in (4, 5):
        alg = SimpleAlgebra("D", n)
        assert index_of_irrep(alg, (0,) * (n - 1) + (1,)) == 2 ** (n - 3)


@pytest.mark.parametrize(
    "literal,adjoint,dual_coxeter",
    [("A2", (1, 1), 3), ("A3", (1, 0, 1), 4), ("B3", (0, 1, 0), 5),
     ("C3", (2, 0, 0), 4), ("D4", (0, 1, 0, 0), 6)],
)
def test_adjoint_index_is_twice_dual_coxeter(literal, adjoint, dual_coxeter):
    alg = SimpleAlgebra.parse(literal)
    assert index_of_irrep(alg, adjoint) == 2 * dual_coxeter


def test_index_of_module_examples():
    pair = decomposition([A1, A1], [(((1,), (1,)), 1)])
    assert index_of_module(pair, 0) == 2
    assert index_of_module(pair, 1) == 2
    # (2) + (0) carries the same index as the 2x2 tensor square.
    square = decomposition([A1], [(((2,),), 1), (((0,),), 1)])
    assert index_of_module(square, 0) == 4
    trivial = decomposition([A1, A2], [(((0,), (0, 0)), 3)])
    assert index_of_module(trivial, 0) == 0
    with pytest.raises(DomainError):
        index_of_module(pair, 2)


def test_embedding_validation():
    with pytest.raises(DimensionMismatchError):
        simple_embedding(A1, A3, [(((1,),), 1)])  # dim 2 into dim 4
    # a form-carrying target needs a self-dual branching
    with pytest.raises(DomainError):
        simple_embedding(A2, SimpleAlgebra("C", 3), [(((1, 0),), 2)])
    ok = simple_embedding(
        A2, SimpleAlgebra("C", 3), [(((1, 0),), 1), (((0, 1),), 1)]
    )
    assert embedding_index(ok) == [2]


def test_embedding_index_rejects_non_integer_quotient():
    # one 2-dimensional natural plus trivials inside so(5): the module index 1
    # is not divisible by the orthogonal divisor 2, so no such embedding exists
    b2 = SimpleAlgebra("B", 2)
    emb = simple_embedding(A1, b2, [(((1,),), 1), (((0,),), 3)])
    with pytest.raises(DomainError):
        embedding_index(emb)


def test_embedding_index_examples():
    assert embedding_index(simple_embedding(A3, A3, [(((1, 0, 0),), 1)])) == [1]
    assert embedding_index(simple_embedding(A1, A3, [(((1,),), 2)])) == [2]
    b3 = SimpleAlgebra("B", 3)
    assert embedding_index(simple_embedding(b3, SimpleAlgebra("A", 6), [(((1, 0, 0),), 1)])) == [2]


def test_classification_examples():
    a5, a9, a11 = SimpleAlgebra("A", 5), SimpleAlgebra("A", 9), SimpleAlgebra("A", 11)
    std = simple_embedding(a5, a9, [((a5.natural_weight,), 1), (((0,) * 5,), 4)])
    assert classify_embedding(std) == Standard(dual=False)
    diag = simple_embedding(
        a5, a11, [((a5.natural_weight,), 1), ((tuple(reversed(a5.natural_weight)),), 1)]
    )
    assert classify_embedding(diag) == Diagonal(1, 1, 0)
    adjoint = simple_embedding(A1, A2, [(((2,),), 1)])
    assert classify_embedding(adjoint) == General()


def test_standard_is_diagonal_with_one_copy():
    a6 = SimpleAlgebra("A", 6)
    dual_std = simple_embedding(
        A2, a6, [((dual_weight(A2, (1, 0)),), 1), (((0, 0),), 4)]
    )
    got = classify_embedding(dual_std)
    assert got == Standard(dual=True)


def test_classification_needs_simple_source():
    emb = Embedding(
        SemisimpleAlgebra((A1, A1)),
        A3,
        decomposition([A1, A1], [(((1,), (0,)), 1), (((0,), (1,)), 1)]),
    )
    with pytest.raises(DomainError):
        classify_embedding(emb)


def leg(source, middle, records):
    return Embedding(SemisimpleAlgebra((source,)), middle, decomposition([source], records))


def test_compose_index_examples():
    diagonal_leg = leg(A1, A1, [(((1,),), 1)])
    second_sum = Embedding(
        SemisimpleAlgebra((A1, A1)),
        A3,
        decomposition([A1, A1], [(((1,), (0,)), 1), (((0,), (1,)), 1)]),
    )
    assert compose_index([diagonal_leg, diagonal_leg], second_sum) == 2
    second_tensor = Embedding(
        SemisimpleAlgebra((A1, A1)),
        A3,
        decomposition([A1, A1], [(((1,), (1,)), 1)]),
    )
    assert compose_index([diagonal_leg, diagonal_leg], second_tensor) == 4


def test_compose_single_middle_is_plain_chain():
    first = leg(A1, A3, [(((1,),), 2)])           # index 2
    second = Embedding(
        SemisimpleAlgebra((A3,)),
        SimpleAlgebra("A", 7),
        decomposition([A3], [(((1, 0, 0),), 1), (((0, 0, 1),), 1)]),  # index 2
    )
    assert compose_index([first], second) == 4


def test_compose_middle_mismatch():
    first = leg(A1, A1, [(((1,),), 1)])
    second = Embedding(
        SemisimpleAlgebra((A3,)),
        SimpleAlgebra("A", 7),
        decomposition([A3], [(((1, 0, 0),), 2)]),
    )
    with pytest.raises(DomainError):
        compose_index([first], second)


def test_compose_general_middle_weight_uses_chain_rule():
    # second branching uses the adjoint of the middle A1: not diagonal-compatible
    first = leg(A1, A1, [(((1,),), 1)])
    second = Embedding(
        SemisimpleAlgebra((A1,)),
        SimpleAlgebra("A", 2),
        decomposition([A1], [(((2,),), 1)]),
    )
    assert compose_index([first], second) == 4


def test_min_nondiagonal_index():
    assert min_nondiagonal_index(A1, 10) == 4
    assert min_nondiagonal_index(A2, 10) == 5
    # A3 has the 6-dimensional wedge square at the bound
    assert min_nondiagonal_index(A3, 6) == 2
    with pytest.raises(ResourceBoundError):
        min_nondiagonal_index(A3, 5)


def test_min_nondiagonal_matches_brute_force():
    for alg, bound in ((A2, 60), (SimpleAlgebra("B", 2), 60)):
        omega = alg.natural_weight
        excluded = {(0,) * alg.rank, omega, dual_weight(alg, omega)}
        box = [
            (a, b)
            for a in range(bound)
            for b in range(bound)
            if dimension(alg, (a, b)) <= bound and (a, b) not in excluded
        ]
        expected = min(index_of_irrep(alg, lam) for lam in box)
        assert min_nondiagonal_index(alg, bound) == expected


def test_natural_module_index_table():
    for series, value in NATURAL_MODULE_INDEX.items():
        rank = {"A": 3, "B": 3, "C": 3, "D": 4}[series]
        alg = SimpleAlgebra(series, rank)
        assert index_of_irrep(alg, alg.natural_weight) == value


def test_index_monotone_in_dominance_order():
    for alg in (A2, SimpleAlgebra("B", 2)):
        weights = dominant_weights_up_to_dim(alg, 500)
        for lam in weights:
            for mu in weights:
                if lam != mu and all(a <= b for a, b in zip(lam, mu)) and any(lam):
                    assert index_of_irrep(alg, lam) <= index_of_irrep(alg, mu)


def test_restrict_to_factor():
    decomp = decomposition([A1, A2], [(((1,), (1, 0)), 2), (((0,), (0, 1)), 1)])
    left = restrict_to_factor(decomp, 0)
    assert left.algebra.factors == (A1,)
    assert dict((s.weights, s.mult) for s in left.summands) == {(((1,),)): 6, (((0,),)): 3}
    right = restrict_to_factor(decomp, 1)
    assert dict((s.weights, s.mult) for s in right.summands) == {(((1, 0),)): 4, (((0, 1),)): 1}


def test_summands_merge_and_sort():
    d1 = decomposition([A1], [(((1,),), 1), (((1,),), 2), (((0,),), 1)])
    d2 = decomposition([A1], [(((0,),), 1), (((1,),), 3)])
    assert d1 == d2
    assert d1.total_dim == 7
