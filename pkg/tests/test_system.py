import random

import pytest

from conftest import A, graph_from_fixture, random_diagonal_system
from lielimits.errors import DimensionMismatchError, DomainError, NotStabilizedError
from lielimits.index import SemisimpleAlgebra, decomposition
from lielimits.system import (
    EdgeSpec,
    LevelSpec,
    compute_labels,
    decompose,
    extract_refinement,
    level_sums,
    stabilization,
    subdiagram,
)


def test_s1_labels_and_constituent():
    g = graph_from_fixture("s1.json")
    assert all(v == 1 for v in g.alpha.values())
    assert all(v == 1 for v in g.beta.values())
    assert level_sums(g, (1, 0)) == [1, 1, 1, 1, 1]
    assert stabilization(g, (1, 0)) == 1
    cs = decompose(g)
    assert len(cs) == 1 and cs[0].kind == "SlInf" and cs[0].tail_assumed
    assert cs[0].string == ((1, 0), (2, 0), (3, 0), (4, 0), (5, 0))


def test_tensor_fixture_labels():
    g = graph_from_fixture("tensor2.json")
    assert g.alpha == {(1, 0): 2, (1, 1): 2, (2, 0): 1}
    assert g.beta == {(1, 0, 0): 2, (1, 1, 0): 2}
    assert level_sums(g, (1, 0)) == [2, 1]
    # the drop to 1 cannot continue, so the top level counts as stabilized
    assert stabilization(g, (1, 0)) == 2
    cs = decompose(g)
    assert len(cs) == 1


def test_not_stabilized_fixture():
    g = graph_from_fixture("notstab.json")
    assert level_sums(g, (1, 0)) == [4, 2]
    assert stabilization(g, (1, 0)) is None
    with pytest.raises(NotStabilizedError) as err:
        decompose(g)
    assert (1, 0) in err.value.origins


def test_s2_two_strings():
    g = graph_from_fixture("s2.json")
    cs = decompose(g)
    assert [c.kind for c in cs] == ["SlInf", "SlInf"]
    assert level_sums(g, (1, 0)) == [1, 1, 1, 1]


def test_s3_finite_blocks():
    g = graph_from_fixture("s3.json")
    cs = decompose(g)
    assert len(cs) == 4
    assert all(c.kind == "FiniteSimple" and str(c.algebra) == "A1" for c in cs)
    # block j enters at level j+1 and persists
    starts = sorted(c.string[0] for c in cs)
    assert starts == [(1, 0), (2, 1), (3, 2), (4, 3)]


def test_s4_mixed_kinds():
    g = graph_from_fixture("s4.json")
    cs = decompose(g)
    kinds = sorted((c.kind, str(c.algebra)) for c in cs)
    assert kinds == [("FiniteSimple", "A1"), ("SpInf", "None")]


def test_so_chain_kind():
    g = graph_from_fixture("so_chain.json")
    cs = decompose(g)
    assert [c.kind for c in cs] == ["SoInf"]


def test_single_series_class_along_unit_tails():
    # On unit-label growing tails the series stays inside one of {A}, {C}, {B, D}.
    classes = {"A": "A", "B": "BD", "D": "BD", "C": "C"}
    for name in ("s1.json", "s2.json", "so_chain.json"):
        g = graph_from_fixture(name)
        for c in decompose(g):
            if c.kind in ("SlInf", "SoInf", "SpInf"):
                window = c.string[-3:]
                tags = {classes[g.algebra_at(v).series] for v in window}
                assert len(tags) == 1


def test_edge_presence_matches_nontrivial_action():
    g = graph_from_fixture("s3.json")
    # the fresh block at each level has no incoming edges
    for n in range(1, 4):
        new = len(g.components_at(n + 1)) - 1
        assert all((n, j, new) not in g.beta for j in range(len(g.components_at(n))))


def test_eq4_violation_reported():
    a1, a3 = A(1), A(3)
    lv1 = LevelSpec(SemisimpleAlgebra((a1,)), a3, decomposition([a1], [(((1,),), 2)]))
    lv2 = LevelSpec(SemisimpleAlgebra((a3,)), a3, decomposition([a3], [(((1, 0, 0),), 1)]))
    edge = EdgeSpec((decomposition([a1], [(((1,),), 1), (((0,),), 2)]),))
    with pytest.raises(DomainError) as err:
        compute_labels([lv1, lv2], [edge])
    assert "level 1" in str(err.value)


def test_edge_dimension_mismatch_is_spec_error():
    a1, a3 = A(1), A(3)
    lv1 = LevelSpec(
        SemisimpleAlgebra((a1, a1)), a3, decomposition([a1, a1], [(((1,), (1,)), 1)])
    )
    lv2 = LevelSpec(SemisimpleAlgebra((a3,)), a3, decomposition([a3], [(((1, 0, 0),), 1)]))
    bad_edge = EdgeSpec((decomposition([a1, a1], [(((1,), (0,)), 1)]),))
    with pytest.raises(DimensionMismatchError):
        compute_labels([lv1, lv2], [bad_edge])


def test_mixed_ambient_kinds_rejected():
    a1, c2 = A(1), __import__("lielimits").SimpleAlgebra("C", 2)
    lv1 = LevelSpec(SemisimpleAlgebra((a1,)), A(1), decomposition([a1], [(((1,),), 1)]))
    lv2 = LevelSpec(
        SemisimpleAlgebra((c2,)), c2, decomposition([c2], [(((1, 0),), 1)])
    )
    edge = EdgeSpec((decomposition([a1], [(((1,),), 2)]),))
    with pytest.raises(DomainError):
        compute_labels([lv1, lv2], [edge])


def _max_paths(graph, origin):
    paths = [[origin]]
    done = []
    while paths:
        path = paths.pop()
        n, j = path[-1]
        outs = graph.out_edges(n, j)
        if not outs:
            done.append(path)
            continue
        for k, _ in outs:
            paths.append(path + [(n + 1, k)])
    return done


def _beta_product(graph, path):
    value = 1
    for (n, j), (_, k) in zip(path, path[1:]):
        value *= graph.beta[(n, j, k)]
    return value


@pytest.mark.parametrize(
    "name", ["s1.json", "s2.json", "s3.json", "s4.json", "tensor2.json", "so_chain.json"]
)
def test_path_sum_identity(name):
    # alpha at the origin equals the beta-weighted sum over maximal paths.
    g = graph_from_fixture(name)
    for origin in g.vertices():
        total = sum(
            _beta_product(g, p) * g.alpha[p[-1]] for p in _max_paths(g, origin)
        )
        assert total == g.alpha[origin]


def test_random_diagonal_systems_validate(rng):
    for _ in range(25):
        levels, edges = random_diagonal_system(rng)
        g = compute_labels(levels, edges)  # sum law validated inside
        for origin in g.vertices():
            sums = level_sums(g, origin)  # monotone, asserted inside
            m0 = stabilization(g, origin)
            if m0 is not None:
                sub = subdiagram(g, origin)
                for (m, i) in sub:
                    if m0 <= m < g.top:
                        assert len(g.out_edges(m, i)) == 1
                # labels along strings collapse to 1-step transports
                assert len(set(sums[m0 - origin[0]:])) == 1


def test_decompose_partitions_top_level(rng):
    for name in ("s1.json", "s2.json", "s3.json", "s4.json"):
        g = graph_from_fixture(name)
        cs = decompose(g)
        endpoints = [c.string[-1] for c in cs]
        expected = [(g.top, j) for j in range(len(g.components_at(g.top)))]
        assert sorted(endpoints) == expected


def test_refinement_s1():
    g = graph_from_fixture("s1.json")
    rep = extract_refinement(g)
    assert rep.chain == ((1, 0), (2, 0), (3, 0), (4, 0), (5, 0))
    assert all(rep.standard_edges)
    assert rep.n0 == 1


def test_refinement_mixed_edge():
    g = graph_from_fixture("refine_mixed.json")
    rep = extract_refinement(g)
    assert rep.standard_edges == (False, True)
    assert rep.n0 == 2
    assert [str(a) for a in rep.algebras] == ["A2", "D4", "D5"]


def test_refinement_requires_unique_infinite_part():
    with pytest.raises(DomainError):
        extract_refinement(graph_from_fixture("s2.json"))
    with pytest.raises(DomainError):
        extract_refinement(graph_from_fixture("s3.json"))


def test_split_vertex_stabilizes_after_the_split():
    # one component of label 2 splits into two unit strings; the level sums
    # stay constant but stabilization waits for the split to finish
    a1, a3 = A(1), A(3)
    one = SemisimpleAlgebra((a1,))
    two = SemisimpleAlgebra((a1, a1))
    lv1 = LevelSpec(one, a3, decomposition([a1], [(((1,),), 2)]))
    pair_branching = decomposition([a1, a1], [(((1,), (0,)), 1), (((0,), (1,)), 1)])
    lv2 = LevelSpec(two, a3, pair_branching)
    lv3 = LevelSpec(two, a3, pair_branching)
    split_edge = EdgeSpec((
        decomposition([a1], [(((1,),), 1)]),
        decomposition([a1], [(((1,),), 1)]),
    ))
    straight_edge = EdgeSpec((
        decomposition([a1, a1], [(((1,), (0,)), 1)]),
        decomposition([a1, a1], [(((0,), (1,)), 1)]),
    ))
    g = compute_labels([lv1, lv2, lv3], [split_edge, straight_edge])
    assert level_sums(g, (1, 0)) == [2, 2, 2]
    assert stabilization(g, (1, 0)) == 2
    cs = decompose(g)
    assert len(cs) == 2


def test_dimension_shrink_rejected():
    # two sl(2) blocks cannot inject into a single sl(2)
    a1, a3 = A(1), A(3)
    lv1 = LevelSpec(
        SemisimpleAlgebra((a1, a1)), a3,
        decomposition([a1, a1], [(((1,), (0,)), 1), (((0,), (1,)), 1)]),
    )
    lv2 = LevelSpec(SemisimpleAlgebra((a1,)), a3, decomposition([a1], [(((1,),), 2)]))
    merge_edge = EdgeSpec((decomposition([a1, a1], [(((1,), (0,)), 1), (((0,), (1,)), 1)]),))
    with pytest.raises(DomainError):
        compute_labels([lv1, lv2], [merge_edge])


def test_refinement_restricted_to_one_class():
    g = graph_from_fixture("s2.json")
    rep = extract_refinement(g, constituent_id=0)
    assert [v[1] for v in rep.chain] == [0, 0, 0, 0]
    assert all(rep.standard_edges) and rep.n0 == 1
    with pytest.raises(DomainError):
        extract_refinement(g, constituent_id=9)
