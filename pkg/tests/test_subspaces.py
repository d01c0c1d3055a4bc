import random
from fractions import Fraction

import pytest

from lielimits.errors import DomainError
from lielimits.linalg import row_space_basis
from lielimits.subspaces import (
    ALL_ONES,
    COMMUTATOR_TOKEN,
    EvConstFunctional,
    StandardForm,
    SubspaceDescriptor,
    classify_maximal,
    descriptor_intersection,
    descriptor_sum,
    double_perp_closed,
    is_isotropic,
    perp,
    uniqueness_check,
    uniqueness_invariant,
)

SYM = StandardForm("symmetric")
SYMP = StandardForm("symplectic")


def rand_descriptor(rng, space="V"):
    gens = []
    for _ in range(rng.randrange(0, 3)):
        gens.append(
            {rng.randrange(1, 8): Fraction(rng.randrange(-3, 4) or 1) for _ in range(rng.randrange(1, 4))}
        )
    tail = rng.choice([None, None, rng.randrange(1, 6)])
    kers = []
    for _ in range(rng.randrange(0, 3)):
        head = tuple(Fraction(rng.randrange(-2, 3)) for _ in range(rng.randrange(0, 4)))
        kers.append(EvConstFunctional(head, Fraction(rng.choice([0, 0, 1, 2, -1]))))
    return SubspaceDescriptor.build(space, gens, tail, kers)


def test_functional_canonical_form():
    f = EvConstFunctional((1, 2, 1, 1), 1)
    assert f.head == (1, 2)
    assert f.value_at(2) == 2 and f.value_at(3) == 1 and f.value_at(100) == 1
    assert f({1: 1, 5: 2}) == 3
    assert ALL_ONES({2: 5, 9: -5}) == 0


def test_membership_examples():
    t2 = SubspaceDescriptor.tail(2)
    assert t2.contains({2: 1}) and t2.contains({5: 3, 7: -1})
    assert not t2.contains({1: 1, 2: 1})
    k = SubspaceDescriptor.kernel([ALL_ONES])
    assert k.contains({1: 1, 2: -1}) and not k.contains({1: 1})
    w = SubspaceDescriptor.span([{1: 1, 2: 2}])
    assert w.contains({1: 2, 2: 4}) and not w.contains({1: 1})


def test_canonical_equality_of_presentations():
    direct = SubspaceDescriptor.tail(2)
    assembled = SubspaceDescriptor.build("V", generators=[{2: 1}], tail_from=3)
    assert direct == assembled
    # a kernel condition that is implied by the data normalizes away
    redundant = SubspaceDescriptor.build(
        "V", tail_from=2, kernels=[EvConstFunctional((1,), 0)]
    )
    assert redundant == direct


def test_dims_and_codims():
    assert SubspaceDescriptor.zero().dim == 0
    assert SubspaceDescriptor.full().codim == 0
    assert SubspaceDescriptor.tail(3).codim == 2
    assert SubspaceDescriptor.span([{1: 1}, {4: 1}]).dim == 2
    k = SubspaceDescriptor.kernel([ALL_ONES])
    assert k.codim == 1 and k.dim is None


def test_perp_examples():
    # tail perp is the finite coordinate span on the dual side
    p = perp(SubspaceDescriptor.tail(2))
    assert p == SubspaceDescriptor.span([{1: 1}], space="V*")
    # the all-ones kernel annihilates nothing in the restricted dual
    assert perp(SubspaceDescriptor.kernel([ALL_ONES])).is_zero()
    # symplectic perp of the first coordinate line kills the second coordinate
    w = SubspaceDescriptor.span([{1: 1}])
    expected = SubspaceDescriptor.build(
        "V", tail_from=1, kernels=[EvConstFunctional((0, 1), 0)]
    )
    assert perp(w, SYMP) == expected
    assert perp(w, SYM) == expected


def test_double_perp_examples():
    ok, witness = double_perp_closed(SubspaceDescriptor.tail(2))
    assert ok and witness is None
    ok, witness = double_perp_closed(SubspaceDescriptor.kernel([ALL_ONES]))
    assert not ok and witness is not None
    assert not SubspaceDescriptor.kernel([ALL_ONES]).contains(witness)
    ok, _ = double_perp_closed(SubspaceDescriptor.zero())
    assert ok


def test_sum_and_intersection():
    t3 = SubspaceDescriptor.tail(3)
    v2 = SubspaceDescriptor.span([{2: 1}])
    s = descriptor_sum(t3, v2)
    assert s == SubspaceDescriptor.tail(2)
    meet = descriptor_intersection(SubspaceDescriptor.tail(2), SubspaceDescriptor.kernel([ALL_ONES]))
    assert meet.contains({2: 1, 3: -1}) and not meet.contains({2: 1})
    with pytest.raises(DomainError):
        descriptor_sum(t3, SubspaceDescriptor.span([{1: 1}], space="V*"))


def test_galois_properties(rng):
    for _ in range(200):
        space = rng.choice(["V", "V*"])
        w = rand_descriptor(rng, space)
        contexts = ["gl"] if space == "V*" else ["gl", SYM, SYMP]
        for ctx in contexts:
            p = perp(w, ctx)
            closure = perp(p, ctx)
            assert closure.contains_space(w)
            assert perp(closure, ctx) == p
            # perp is inclusion-reversing against a random enlargement
            bigger = descriptor_sum(w, rand_descriptor(rng, space))
            assert p.contains_space(perp(bigger, ctx))


def test_perp_matches_truncated_elimination(rng):
    # On the window of explicit coordinates, the descriptor perp agrees with
    # plain linear algebra against the projected subspace.
    for _ in range(50):
        w = rand_descriptor(rng, "V")
        p = perp(w)
        m = max(w.window, p.window) + 2
        wm, pm = w.at_window(m), p.at_window(m)
        proj = [list(r[:-1]) for r in wm.rows]
        if wm.has_tail:
            for i in range(wm.window - 1, m - 1):
                row = [Fraction(0)] * (m - 1)
                row[i] = Fraction(1)
                proj.append(row)
        proj = row_space_basis(proj)
        for prow in pm.rows:
            assert all(
                sum(a * b for a, b in zip(prow[:-1], wrow)) == 0 for wrow in proj
            )
        assert len(pm.rows) + len(proj) == (m - 1) + (1 if pm.has_tail else 0)


def _box_basis(w, s):
    """Basis of W ∩ span{v_1..v_s} as explicit coordinate rows."""
    from lielimits.linalg import nullspace_basis

    aligned = w.at_window(s + 1)
    rows = [list(r) for r in aligned.rows]
    if aligned.has_tail:
        # model vectors with vanishing tail mass, written out in coordinates
        coeffs = nullspace_basis([[row[-1] for row in rows]], len(rows))
        sols = [
            [sum(c * row[i] for c, row in zip(combo, rows)) for i in range(s)]
            for combo in coeffs
        ]
        return row_space_basis(sols)
    return row_space_basis([row[:-1] for row in rows])


def _brute_perp_box(spanning, s, form):
    """Nullspace of the pairing against explicit spanning vectors in Q^s."""
    from lielimits.linalg import nullspace_basis

    conditions = []
    for vec in spanning:
        if form is None:
            conditions.append(list(vec[:s]))
        else:
            padded = list(vec) + [Fraction(0)] * ((len(vec) + 1) % 2)
            conditions.append(_apply_j(padded, form)[:s])
    return row_space_basis(nullspace_basis(conditions, s))


def _apply_j(row, form):
    out = list(row)
    sign = form.sign
    for i in range(0, len(out) - 1, 2):
        out[i], out[i + 1] = sign * row[i + 1], row[i]
    return out


def test_perp_matches_bruteforce_box(rng):
    # Independent oracle: realize W inside a finite coordinate box, compute
    # the annihilator by plain elimination, and compare with the descriptor
    # perp restricted to the same box.
    for _ in range(60):
        w = rand_descriptor(rng, "V")
        for form in (None, SYM, SYMP):
            p = perp(w, "gl" if form is None else form)
            s = max(w.window, p.window) + 3
            s += s % 2  # close the box under the pairing
            spanning = _box_basis(w, s + 2)
            spanning = [row[: s + 2] for row in spanning]
            brute = _brute_perp_box(spanning, s, form)
            descriptor_box = _box_basis(p, s)
            assert row_space_basis([list(r) for r in brute]) == row_space_basis(
                [list(r) for r in descriptor_box]
            ), (w, form)


def test_isotropic_vs_truncated_gram(rng):
    for _ in range(60):
        vecs = [
            {rng.randrange(1, 7): Fraction(rng.randrange(-2, 3) or 1) for _ in range(rng.randrange(1, 3))}
            for _ in range(rng.randrange(1, 3))
        ]
        w = SubspaceDescriptor.span(vecs)
        for form in (SYM, SYMP):
            direct = is_isotropic(w, form)
            gram_zero = all(
                form.pairing(x, y) == 0 for x in vecs for y in vecs
            )
            assert direct == gram_zero
    assert not is_isotropic(SubspaceDescriptor.tail(3), SYM)


def test_classification_case_table():
    t2 = SubspaceDescriptor.tail(2)
    kernel = SubspaceDescriptor.kernel([ALL_ONES])
    assert classify_maximal("gl", COMMUTATOR_TOKEN).tag == "ia"
    assert classify_maximal("gl", kernel).tag == "ib"
    assert classify_maximal("gl", t2).tag == "ic"
    assert classify_maximal("sl", "so_form").tag == "iia"
    assert classify_maximal("sl", "sp_form").tag == "iia"
    assert classify_maximal("sl", kernel).tag == "iib"
    assert classify_maximal("sl", t2).tag == "iic"
    assert classify_maximal("so", SubspaceDescriptor.tail(5), SYM).tag == "iiia"
    assert classify_maximal("sp", SubspaceDescriptor.tail(3), SYMP).tag == "iiia"
    assert classify_maximal("so", SubspaceDescriptor.kernel([ALL_ONES]), SYM).tag == "iiib"
    assert classify_maximal("sp", SubspaceDescriptor.kernel([ALL_ONES]), SYMP).tag == "iiib"
    assert classify_maximal("so", SubspaceDescriptor.span([{1: 1}]), SYM).tag == "iiic"
    assert classify_maximal("sp", SubspaceDescriptor.span([{1: 1}]), SYMP).tag == "iiic"


def test_dual_side_kernel_is_ib():
    kernel_dual = SubspaceDescriptor.kernel([ALL_ONES], space="V*")
    verdict = classify_maximal("gl", kernel_dual)
    assert verdict.tag == "ib" and verdict.maximal


def test_not_maximal_cases():
    codim2 = SubspaceDescriptor.kernel([ALL_ONES, EvConstFunctional((2,), 1)])
    v = classify_maximal("gl", codim2)
    assert v.tag == "NotMaximal"
    assert v.witness is not None and v.witness.codim == 1
    assert v.witness.contains_space(codim2)
    assert v.witness_vector is not None

    plane = SubspaceDescriptor.span([{1: 1}, {2: 1}])
    v = classify_maximal("so", plane, SYM)
    assert v.tag == "NotMaximal"
    assert v.witness is not None and v.witness.dim == 1
    assert is_isotropic(v.witness, SYM)
    # the same plane is fine symplectically
    assert classify_maximal("sp", plane, SYMP).tag == "iiia"

    open_w = descriptor_intersection(
        SubspaceDescriptor.tail(2), SubspaceDescriptor.kernel([ALL_ONES])
    )
    v = classify_maximal("gl", open_w)
    assert v.tag == "NotMaximal"
    assert v.witness == SubspaceDescriptor.tail(2)

    # so with a 2-dimensional perp is excluded as well
    v = classify_maximal("so", SubspaceDescriptor.tail(3), SYM)
    assert v.tag == "NotMaximal"

    # degenerate, non-isotropic subspace
    v = classify_maximal("so", SubspaceDescriptor.span([{1: 1}, {2: 1}, {3: 1}]), SYM)
    assert v.tag == "NotMaximal"
    assert v.witness == SubspaceDescriptor.span([{3: 1}])


def test_classification_domain_errors():
    with pytest.raises(DomainError):
        classify_maximal("gl", SubspaceDescriptor.zero())
    with pytest.raises(DomainError):
        classify_maximal("gl", SubspaceDescriptor.full())
    with pytest.raises(DomainError):
        classify_maximal("sl", COMMUTATOR_TOKEN)
    with pytest.raises(DomainError):
        classify_maximal("gl", "so_form")
    with pytest.raises(DomainError):
        classify_maximal("so", SubspaceDescriptor.tail(5))
    with pytest.raises(DomainError):
        classify_maximal("so", SubspaceDescriptor.tail(5), SYMP)


def test_cases_mutually_exclusive_and_exhaustive(rng):
    gl_tags = {"ib", "ic", "NotMaximal"}
    form_tags = {"iiia", "iiib", "iiic", "NotMaximal"}
    seen = set()
    for _ in range(150):
        w = rand_descriptor(rng, "V")
        if w.is_zero() or w.is_full():
            continue
        tag = classify_maximal("gl", w).tag
        assert tag in gl_tags
        seen.add(tag)
        for kind, form in (("so", SYM), ("sp", SYMP)):
            tag = classify_maximal(kind, w, form).tag
            assert tag in form_tags
            seen.add(tag)
    assert {"ib", "ic", "NotMaximal", "iiic"} <= seen


def test_uniqueness_checks():
    t2 = SubspaceDescriptor.tail(2)
    rebuilt = SubspaceDescriptor.build("V", generators=[{2: 1}, {3: 1}], tail_from=4)
    a = classify_maximal("gl", t2)
    b = classify_maximal("gl", rebuilt)
    rep = uniqueness_check("gl", a, b)
    assert rep.same_case and rep.same_invariant

    # (iiia): the pair (W, W-perp) is unordered
    w = SubspaceDescriptor.tail(5)
    v1 = classify_maximal("so", w, SYM)
    v2 = classify_maximal("so", v1.perp_space, SYM)
    assert uniqueness_invariant(v1) == uniqueness_invariant(v2)

    # distinct codimension-1 kernels have distinct invariants and a separator
    k1 = classify_maximal("gl", SubspaceDescriptor.kernel([ALL_ONES]))
    k2 = classify_maximal("gl", SubspaceDescriptor.kernel([EvConstFunctional((2,), 1)]))
    rep = uniqueness_check("gl", k1, k2)
    assert rep.same_case and not rep.same_invariant
    assert rep.witness_vector is not None

    with pytest.raises(DomainError):
        uniqueness_invariant(classify_maximal("so", SubspaceDescriptor.span([{1: 1}, {2: 1}]), SYM))
