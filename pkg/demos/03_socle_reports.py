# The natural module over a locally semisimple subalgebra.
#
# Along each infinite constituent the ambient naturals eventually branch as
# k copies of the constituent's natural, l copies of its conatural, and a
# trivial rest.  The library counts (k, l) at the top of the prefix,
# cross-checks one level down, and judges the trivial dimensions from a
# three-level window: constant -> finite, strictly growing -> countable.

from lielimits import formats
from lielimits.socle import multiplicities, socle_report, standard_invariants, trivial_dims
from lielimits.system import compute_labels, decompose


def load(name):
    levels, edges = formats.system_from_doc(formats.load_json(formats.fixture_path(name)))
    return compute_labels(levels, edges)


print("== S2: each factor sees the ambient natural once ==")
graph = load("s2.json")
for c in decompose(graph):
    k, l = multiplicities(graph, c)
    dim_n, dim_n_star = trivial_dims(graph, c)
    print(f"  constituent #{c.cid}: k={k} l={l}  dim N={dim_n}  dim N*={dim_n_star}")
report = socle_report(graph)
print("  quotient V/V' =", report.quotient)

# The blocks example keeps one extra line that never lands in any block:
# the trivial mass sits in the quotient, so the socle is a proper submodule.
print("\n== finitely many blocks plus a stray line ==")
report = socle_report(load("example3.json"))
for row in report.finite_part:
    print(f"  finite part #{row.cid}: {row.algebra} weight {row.weight} x{row.mult}")
print("  quotient V/V' =", report.quotient)

# A non-square exhaustion (a Levi chain paired against a smaller restricted
# dual) makes the two trivial parts differ: dim N = 1 against dim N* = 0.
# The fixture carries the dual-side branching as an explicit override.
print("\n== asymmetric trivial parts ==")
graph = load("example4.json")
(constituent,) = decompose(graph)
print("  multiplicities:", multiplicities(graph, constituent))
dim_n, dim_n_star = trivial_dims(graph, constituent)
print(f"  dim N = {dim_n}, dim N* = {dim_n_star}")

print("\n== standard invariants ==")
for name in ("example4.json", "s2.json"):
    graph = load(name)
    inv = standard_invariants(graph)
    print(f"  {name}: pairs {list(inv.multiplicity_pairs)}")
    for row in inv.subsets:
        print(
            f"    J={list(row.ids)}: N^J {row.dim_trivial}, N*^J {row.dim_trivial_dual}, "
            f"V/V'_J {row.quotient}, V*/(V*)'_J {row.quotient_dual}"
        )
