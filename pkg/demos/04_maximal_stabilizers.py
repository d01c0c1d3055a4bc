# Which subspace stabilizers are maximal?
#
# Subspaces of V (and of the restricted dual V_*) are described by finitely
# supported generators, an optional cofinite tail, and kernels of eventually
# constant functionals.  That class is closed under perp, sum, and
# intersection, with decidable equality, so the classification below is an
# exact computation: each verdict is a case tag or NotMaximal with a witness.

from lielimits.subspaces import (
    ALL_ONES,
    COMMUTATOR_TOKEN,
    EvConstFunctional,
    StandardForm,
    SubspaceDescriptor,
    classify_maximal,
    descriptor_intersection,
    double_perp_closed,
    perp,
)

SYM = StandardForm("symmetric")
SYMP = StandardForm("symplectic")

print("== perps under the gl pairing ==")
tail2 = SubspaceDescriptor.tail(2)          # span{v2, v3, ...}
print("  perp of span{v2, v3, ...}:", perp(tail2), "(the line v1*)")
kernel = SubspaceDescriptor.kernel([ALL_ONES])   # sum of coordinates = 0
print("  perp of ker(all-ones):", perp(kernel), "(nothing in the restricted dual)")
closed, witness = double_perp_closed(kernel)
print("  ker(all-ones) double-perp closed?", closed, " witness:", witness)

print("\n== the gl/sl cases ==")
for label, kind, payload in [
    ("commutator subalgebra", "gl", COMMUTATOR_TOKEN),
    ("closed proper subspace", "gl", tail2),
    ("dense hyperplane", "gl", kernel),
    ("dense hyperplane in sl", "sl", kernel),
    ("a chosen symmetric form", "sl", "so_form"),
]:
    verdict = classify_maximal(kind, payload)
    print(f"  {label} ({kind}): {verdict.tag} - {verdict.description}")

print("\n== the so/sp cases ==")
for label, kind, form, w in [
    ("split summand", "so", SYM, SubspaceDescriptor.tail(5)),
    ("split summand", "sp", SYMP, SubspaceDescriptor.tail(3)),
    ("corank-1 nondegenerate", "so", SYM, kernel),
    ("isotropic line", "sp", SYMP, SubspaceDescriptor.span([{1: 1}])),
]:
    verdict = classify_maximal(kind, w, form)
    print(f"  {label} ({kind}): {verdict.tag}")

print("\n== three ways to fail ==")
codim2 = SubspaceDescriptor.kernel([ALL_ONES, EvConstFunctional((2,), 1)])
verdict = classify_maximal("gl", codim2)
print("  codimension-2 kernel:", verdict.tag, "- witness is the closure", verdict.witness)

plane = SubspaceDescriptor.span([{1: 1}, {2: 1}])
verdict = classify_maximal("so", plane, SYM)
print("  2-dimensional orthogonal summand:", verdict.tag, "- witness", verdict.witness)

open_w = descriptor_intersection(tail2, kernel)
verdict = classify_maximal("gl", open_w)
print("  proper subspace of its closure:", verdict.tag, "- witness", verdict.witness)
