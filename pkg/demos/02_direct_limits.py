# Decomposing a direct system prefix with a labeled Bratteli diagram.
#
# Levels hold semisimple algebras inside a growing ambient chain; vertices
# carry the embedding index alpha, edges the component-to-component index
# beta, and the law alpha_n^j = sum_k beta * alpha_{n+1}^k is validated on
# construction.  Once the level sums stabilize, the diagram is a union of
# strings, and each string witnesses one constituent of the limit.

from lielimits import formats
from lielimits.system import (
    compute_labels,
    decompose,
    extract_refinement,
    level_sums,
    stabilization,
)


def load(name):
    levels, edges = formats.system_from_doc(formats.load_json(formats.fixture_path(name)))
    return compute_labels(levels, edges)


print("== the standard chain A1 < A2 < ... < A5 ==")
graph = load("s1.json")
print("  alpha labels:", dict(sorted(graph.alpha.items())))
print("  level sums from (1,0):", level_sums(graph, (1, 0)))
print("  stabilizes at:", stabilization(graph, (1, 0)))
for c in decompose(graph):
    print(f"  constituent: {c.kind}, string {list(c.string)}, tail assumed: {c.tail_assumed}")

print("\n== two parallel strings (A_n + A_n inside A_{2n+1}) ==")
graph = load("s2.json")
for c in decompose(graph):
    print(f"  constituent #{c.cid}: {c.kind} via {list(c.string)}")

print("\n== infinitely many sl(2) blocks, truncated ==")
graph = load("s3.json")
for c in decompose(graph):
    print(f"  constituent #{c.cid}: {c.kind}({c.algebra}) entering at level {c.string[0][0]}")

print("\n== a tensor-style first level merges into one string ==")
graph = load("tensor2.json")
print("  alpha:", dict(sorted(graph.alpha.items())), " beta:", dict(sorted(graph.beta.items())))
print("  sums from (1,0):", level_sums(graph, (1, 0)), "-> stabilization:", stabilization(graph, (1, 0)))

print("\n== a prefix that is genuinely too short ==")
graph = load("notstab.json")
print("  sums from (1,0):", level_sums(graph, (1, 0)))
print("  stabilization:", stabilization(graph, (1, 0)), " (None: lengthen the prefix)")

# When the limit is simple, the string yields nested simple ideals, and the
# edge branchings say from which level on the injections are standard.
print("\n== refinement along the unique string ==")
graph = load("refine_mixed.json")
report = extract_refinement(graph)
for vertex, alg in zip(report.chain, report.algebras):
    print(f"  {vertex}: {alg}")
print("  standard edges:", list(report.standard_edges), " all standard from level", report.n0)
