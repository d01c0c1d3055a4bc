"""Command-line interface.

Subcommands: index, embed, limit, refine, socle, invariants, maximal,
oracle.  Exit codes: 0 success, 1 domain error, 2 parse error,
3 insufficient prefix.  Structured output (--format json) is stable:
equal reports are byte-identical, and randomized self-checks take an
explicit --seed.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass

from . import formats, oracle, socle, subspaces, system
from .algebras import SimpleAlgebra, dimension
from .errors import (
    DomainError,
    LieLimitsError,
    NotStabilizedError,
    ParseError,
)
from .index import (
    Embedding,
    classify_embedding,
    embedding_index,
    index_of_irrep,
    index_of_module,
)


@dataclass
class RunConfig:
    command: str
    paths: tuple[str, ...] = ()
    output: str = "human"
    seed: int = 0
    dim_bound: int = oracle.DEFAULT_DIM_BOUND
    enum_bound: int = 20

    def __post_init__(self):
        if self.dim_bound < 1 or self.enum_bound < 1:
            raise DomainError("resource bounds must be positive")


def _add_common(parser, suppress: bool):
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument("--format", choices=("human", "json"),
                        default=d if suppress else "human",
                        help="output format (json is stable and re-parseable)")
    parser.add_argument("--seed", type=int, default=d if suppress else 0,
                        help="seed for randomized self-checks")
    parser.add_argument("--dim-bound", type=int,
                        default=d if suppress else oracle.DEFAULT_DIM_BOUND,
                        help="dimension cap for oracle computations")
    parser.add_argument("--enum-bound", type=int, default=d if suppress else 20,
                        help="size cap for enumerative self-checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lielimits",
        description="Dynkin index calculus, direct-limit decomposition, socle "
        "reports, and maximal stabilizer classification for finitary Lie algebras.",
    )
    _add_common(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=argparse.ArgumentParser)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add("index", help="Dynkin index of an irreducible or an embedding")
    p.add_argument("algebra", nargs="?", help="algebra literal, e.g. A3")
    p.add_argument("weight", nargs="?", help="comma-separated Dynkin labels, e.g. 1,0,2")
    p.add_argument("--embedding", metavar="FILE", help="embedding file instead of a weight")

    p = add("embed", help="index vector and classification of an embedding file")
    p.add_argument("path", metavar="FILE")

    p = add("limit", help="decompose a direct system prefix")
    p.add_argument("path", metavar="FILE")

    p = add("refine", help="nested simple ideals when the limit is simple")
    p.add_argument("path", metavar="FILE")
    p.add_argument("--constituent", type=int, default=None,
                   help="restrict to one infinite constituent id")

    p = add("socle", help="socle report of the natural modules")
    p.add_argument("path", metavar="FILE")

    p = add("invariants", help="standard invariants of the system")
    p.add_argument("path", metavar="FILE")
    p.add_argument("--subset", action="append", default=[],
                   help="comma-separated constituent ids; repeatable")

    p = add("maximal", help="maximality classification of a stabilizer")
    p.add_argument("kind", choices=("gl", "sl", "so", "sp"))
    p.add_argument("path", metavar="FILE", help="subspace descriptor file")

    p = add("oracle", help="independent verification values")
    p.add_argument("op", choices=("freudenthal", "trace", "tensor", "selftest"))
    p.add_argument("args", nargs="*", help="algebra and weight(s) for the chosen op")
    return parser


def _emit(cfg: RunConfig, doc: dict, human_lines) -> None:
    if cfg.output == "json":
        sys.stdout.write(formats.dumps(doc))
    else:
        for line in human_lines:
            print(line)


def _parse_weight_arg(alg: SimpleAlgebra, text: str):
    weight = formats.parse_weight(text)
    if len(weight) != alg.rank:
        raise ParseError(f"weight {text!r} has {len(weight)} labels, {alg} has rank {alg.rank}")
    return weight


def cmd_index(cfg: RunConfig, args) -> int:
    if args.embedding:
        emb = formats.embedding_from_doc(formats.load_json(args.embedding))
        return _report_embedding(cfg, emb)
    if not args.algebra or args.weight is None:
        raise ParseError("index needs an algebra and a weight, or --embedding FILE")
    alg = formats.parse_algebra(args.algebra)
    weight = _parse_weight_arg(alg, args.weight)
    value = index_of_irrep(alg, weight)
    dim = dimension(alg, weight)
    doc = formats.index_report(alg, weight, value, dim)
    _emit(cfg, doc, [
        f"algebra   {alg}",
        f"weight    {','.join(map(str, weight))}",
        f"dimension {dim}",
        f"index     {value}",
    ])
    return 0


def _report_embedding(cfg: RunConfig, emb: Embedding) -> int:
    indices = embedding_index(emb)
    if len(emb.source.factors) == 1:
        classification = classify_embedding(emb)
    else:
        classification = "per-factor"
    doc = formats.embedding_report(emb, indices, classification)
    _emit(cfg, doc, [
        f"source          {emb.source}",
        f"target          {emb.target}",
        f"index           {indices}",
        f"classification  {classification}",
    ])
    return 0


def cmd_embed(cfg: RunConfig, args) -> int:
    emb = formats.embedding_from_doc(formats.load_json(args.path))
    return _report_embedding(cfg, emb)


def _load_graph(path):
    levels, edges = formats.system_from_doc(formats.load_json(path))
    return system.compute_labels(levels, edges)


def cmd_limit(cfg: RunConfig, args) -> int:
    graph = _load_graph(args.path)
    constituents = system.decompose(graph)
    sums = [(v, system.level_sums(graph, v)) for v in sorted(graph.vertices())]
    stab = [(v, system.stabilization(graph, v)) for v in sorted(graph.vertices())]
    doc = formats.limit_report(graph, constituents, sums, stab)
    lines = ["vertex labels (level, component): alpha"]
    for (n, j), v in sorted(graph.alpha.items()):
        lines.append(f"  ({n},{j}) {graph.algebra_at((n, j))}  alpha={v}")
    lines.append("edges: beta")
    for (n, j, k), v in sorted(graph.beta.items()):
        lines.append(f"  ({n},{j}) -> ({n + 1},{k})  beta={v}")
    lines.append("level sums and stabilization per origin")
    for (origin, values), (_, m0) in zip(sums, stab):
        lines.append(f"  {origin}: a={values} m0={m0}")
    lines.append("constituents")
    for c in constituents:
        name = f" {c.algebra}" if c.algebra else ""
        flag = " (tail assumed)" if c.tail_assumed else ""
        lines.append(f"  #{c.cid} {c.kind}{name}{flag} string={list(c.string)}")
    _emit(cfg, doc, lines)
    return 0


def cmd_refine(cfg: RunConfig, args) -> int:
    graph = _load_graph(args.path)
    report = system.extract_refinement(graph, constituent_id=args.constituent)
    doc = formats.refinement_report(report)
    lines = ["nested simple ideals"]
    for vertex, alg, in zip(report.chain, report.algebras):
        lines.append(f"  {vertex}: {alg}")
    lines.append(f"standard edges: {list(report.standard_edges)}")
    lines.append(f"all standard from level {report.n0}")
    _emit(cfg, doc, lines)
    return 0


def cmd_socle(cfg: RunConfig, args) -> int:
    graph = _load_graph(args.path)
    report = socle.socle_report(graph)
    doc = formats.socle_report_doc(report)
    lines = []
    for row in report.constituents:
        lines.append(
            f"constituent #{row.cid} {row.kind}: k={row.k} l={row.l} "
            f"dim N={row.dim_trivial} dim N*={row.dim_trivial_dual}"
        )
    for r in report.finite_part:
        lines.append(
            f"finite part #{r.cid} {r.algebra}: weight {','.join(map(str, r.weight))} x{r.mult}"
        )
    lines.append(f"quotient V/V' = {report.quotient}")
    lines.append(f"quotient V*/(V*)' = {report.quotient_dual}")
    _emit(cfg, doc, lines)
    return 0


def cmd_invariants(cfg: RunConfig, args) -> int:
    graph = _load_graph(args.path)
    subsets = None
    if args.subset:
        subsets = []
        for text in args.subset:
            try:
                subsets.append(tuple(int(x) for x in text.split(",")))
            except ValueError as exc:
                raise ParseError(f"bad subset {text!r}; expected e.g. '0,1'") from exc
    report = socle.standard_invariants(graph, subsets=subsets)
    doc = formats.invariants_report_doc(report)
    lines = ["multiplicity pairs (id, k, l)"]
    for cid, k, l in report.multiplicity_pairs:
        lines.append(f"  #{cid}: k={k} l={l}")
    for row in report.subsets:
        lines.append(
            f"J={list(row.ids)}: dim N^J={row.dim_trivial} dim N*^J={row.dim_trivial_dual} "
            f"dim V/V'_J={row.quotient} dim V*/(V*)'_J={row.quotient_dual}"
        )
    _emit(cfg, doc, lines)
    return 0


def cmd_maximal(cfg: RunConfig, args) -> int:
    payload = formats.subspace_input_from_doc(formats.load_json(args.path))
    form = None
    if args.kind == "so":
        form = subspaces.StandardForm("symmetric")
    elif args.kind == "sp":
        form = subspaces.StandardForm("symplectic")
    verdict = subspaces.classify_maximal(args.kind, payload, form)
    doc = formats.verdict_report(verdict)
    lines = [
        f"algebra  {verdict.algebra}",
        f"tag      {verdict.tag}",
        f"maximal  {'yes' if verdict.maximal else 'no'}",
        f"case     {verdict.description}",
    ]
    if verdict.witness is not None:
        lines.append(f"witness subspace: {verdict.witness!r}")
    if verdict.witness_vector:
        coords = ", ".join(f"v{i}: {c}" for i, c in verdict.witness_vector)
        lines.append(f"witness vector: {coords}")
    _emit(cfg, doc, lines)
    return 0


def _oracle_algebra_weight(args, count):
    if len(args.args) != count:
        raise ParseError(f"oracle {args.op} expects {count} arguments")
    alg = formats.parse_algebra(args.args[0])
    weights = [formats.parse_weight(w) for w in args.args[1:]]
    for w in weights:
        if len(w) != alg.rank:
            raise ParseError(f"weight {w} does not match rank of {alg}")
    return alg, weights


def cmd_oracle(cfg: RunConfig, args) -> int:
    if args.op == "freudenthal":
        alg, (weight,) = _oracle_algebra_weight(args, 2)
        ms = oracle.freudenthal(alg, weight, cfg.dim_bound)
        doc = formats.multiset_report(ms)
        lines = [f"{','.join(map(str, w))}: {m}" for w, m in ms.entries]
        lines.append(f"total {ms.total}")
        _emit(cfg, doc, lines)
        return 0
    if args.op == "trace":
        alg, (weight,) = _oracle_algebra_weight(args, 2)
        value = oracle.trace_index(alg, weight, cfg.dim_bound)
        doc = formats._report("oracle-trace", {"algebra": str(alg), "weight": list(weight),
                                               "trace_index": value})
        _emit(cfg, doc, [f"trace index {value}"])
        return 0
    if args.op == "tensor":
        alg, (w1, w2) = _oracle_algebra_weight(args, 3)
        decomp = oracle.tensor_decompose(alg, w1, w2, cfg.dim_bound)
        doc = formats._report(
            "oracle-tensor",
            {"algebra": str(alg), "factors": [list(w1), list(w2)],
             "summands": formats.decomposition_to_doc(decomp)},
        )
        lines = [
            f"{','.join(map(str, s.weights[0]))} x{s.mult}" for s in decomp.summands
        ]
        _emit(cfg, doc, lines)
        return 0
    if args.op == "selftest":
        return _oracle_selftest(cfg)
    raise ParseError(f"unknown oracle op {args.op!r}")


def _oracle_selftest(cfg: RunConfig) -> int:
    """Seeded consistency sweep: tensor-product index via summands equals the
    product rule, and the trace oracle equals the closed form."""
    rng = random.Random(cfg.seed)
    algebras = [SimpleAlgebra("A", 1), SimpleAlgebra("A", 2), SimpleAlgebra("B", 2)]
    checked = []
    for _ in range(cfg.enum_bound):
        alg = rng.choice(algebras)
        lam = tuple(rng.randrange(0, 3) for _ in range(alg.rank))
        mu = tuple(rng.randrange(0, 2) for _ in range(alg.rank))
        if dimension(alg, lam) * dimension(alg, mu) > cfg.dim_bound:
            continue
        product = oracle.tensor_decompose(alg, lam, mu, cfg.dim_bound)
        by_sum = index_of_module(product, 0)
        dl, dm = dimension(alg, lam), dimension(alg, mu)
        by_rule = dm * index_of_irrep(alg, lam) + dl * index_of_irrep(alg, mu)
        trace_ok = oracle.trace_index(alg, lam, cfg.dim_bound) == index_of_irrep(alg, lam)
        if by_sum != by_rule or not trace_ok:
            print(f"FAIL {alg} {lam} {mu}: {by_sum} vs {by_rule}, trace_ok={trace_ok}",
                  file=sys.stderr)
            return 1
        checked.append([str(alg), list(lam), list(mu), by_sum])
    doc = formats._report("oracle-selftest", {"seed": cfg.seed, "checked": checked})
    _emit(cfg, doc, [f"{len(checked)} consistency checks passed (seed {cfg.seed})"])
    return 0


_COMMANDS = {
    "index": cmd_index,
    "embed": cmd_embed,
    "limit": cmd_limit,
    "refine": cmd_refine,
    "socle": cmd_socle,
    "invariants": cmd_invariants,
    "maximal": cmd_maximal,
    "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    paths = tuple(
        p for p in (getattr(args, "path", None), getattr(args, "embedding", None)) if p
    )
    cfg = RunConfig(
        command=args.command,
        paths=paths,
        output=args.format,
        seed=args.seed,
        dim_bound=args.dim_bound,
        enum_bound=args.enum_bound,
    )
    try:
        return _COMMANDS[args.command](cfg, args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except NotStabilizedError as exc:
        print(f"insufficient prefix: {exc}", file=sys.stderr)
        return 3
    except LieLimitsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
