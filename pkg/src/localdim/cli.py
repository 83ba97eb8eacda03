"""``localdim`` command line: generators, exact solvers, constructions and checkers.

Exit codes: 0 success, 1 a certificate check found a violation, 2 an input
file could not be parsed, 3 a solver budget ran out, 4 bad usage.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path
from typing import Sequence

from . import constructions as cons
from .diffgraph import (
    BICLIQUE,
    DIFFERENCE,
    DifferenceGraph,
    format_cover,
    parse_bigraph,
    parse_cover,
    random_bipartite,
    verify_cover,
)
from .errors import BudgetExceeded, IdRangeError, LocalDimError, ParseError, VerificationError
from .poset import generate, parse_poset, posets_up_to_isomorphism, product
from .realizer import (
    format_realizer,
    parse_realizer,
    verify_local_realizer,
    verify_realizer,
)
from .solvers import LBC, LDC, TDC, SolveBudget, exact_cover_number, exact_dim, exact_ldim

EXIT_OK, EXIT_VIOLATION, EXIT_PARSE, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(message)


# -- io helpers ------------------------------------------------------------------


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(args, text: str) -> None:
    """Write the primary artefact to ``--output`` or stdout."""
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _budget(args) -> SolveBudget:
    return SolveBudget(
        max_elements=getattr(args, "max_elements", None),
        max_edges=getattr(args, "max_edges", None),
        node_limit=args.budget_nodes,
        time_limit_ms=args.budget_ms,
    )


def _comments(pairs: Sequence[tuple[str, object]]) -> str:
    return "".join(f"# {k}: {v}\n" for k, v in pairs)


def _table(header: Sequence[str], rows: Sequence[Sequence[object]], tsv: bool) -> str:
    cells = [[str(c) for c in header]] + [[str(c) for c in row] for row in rows]
    if tsv:
        return "".join("\t".join(r) + "\n" for r in cells)
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in cells)


# -- commands --------------------------------------------------------------------


def cmd_gen(args) -> int:
    params = [int(p) for p in args.params]
    P, _ = generate(args.family, *params)
    _emit(args, P.to_text())
    return EXIT_OK


def _solve(args, solver) -> int:
    P = parse_poset(_read(args.poset))
    result = solver(P, _budget(args))
    print(result.value)
    certificate = format_realizer(result.witness)
    if args.output:
        Path(args.output).write_text(certificate)
    if args.emit_certificate:
        sys.stdout.write(certificate)
    return EXIT_OK


def cmd_dim(args) -> int:
    return _solve(args, exact_dim)


def cmd_ldim(args) -> int:
    return _solve(args, lambda P, b: exact_ldim(P, b, method=args.method))


def _report_violation(violation) -> int:
    print(f"violation: {violation}")
    return EXIT_VIOLATION


def cmd_verify(args) -> int:
    try:
        return _verify(args)
    except IdRangeError as exc:
        raise ParseError(f"witness does not fit the host: {exc}") from None


def _verify(args) -> int:
    if args.what == "cover":
        G = parse_bigraph(_read(args.host))
        members = parse_cover(_read(args.witness))
        report = verify_cover(G, members, args.kind)
        if not report:
            return _report_violation(report.violation)
        print(f"ok max_multiplicity={report.max_multiplicity} row_max={report.row_max} "
              f"col_max={report.col_max} total_vertices={report.total_vertices}")
        return EXIT_OK
    P = parse_poset(_read(args.host))
    R = parse_realizer(_read(args.witness))
    report = verify_realizer(P, R.ples) if args.what == "realizer" else verify_local_realizer(P, R)
    if not report:
        return _report_violation(report.violation)
    print(f"ok mu={report.mu} ples={len(R)} total={report.total}")
    return EXIT_OK


def _realizer_out(args, R, summary) -> int:
    _emit(args, _comments(summary) + format_realizer(R))
    return EXIT_OK


def cmd_construct(args) -> int:
    kind = args.construction
    if kind == "height2":
        P = parse_poset(_read(args.poset))
        cert = cons.height2_certificate(P, args.block_size)
        mu = verify_local_realizer(P, cert.realizer).raise_for_violation().mu
        return _realizer_out(args, cert.realizer, [
            ("mu", mu), ("block_size", cert.block_size),
            ("cover_max_multiplicity", cert.cover_report.max_multiplicity),
        ])
    if kind == "split-bound":
        P = parse_poset(_read(args.poset))
        sb = cons.ldim_bound_via_split(P, _budget(args) if args.exact else None)
        summary = [("mu_split", sb.mu_split), ("ldim_upper", sb.upper)]
        if sb.ldim_split is not None:
            summary += [("ldim_split", sb.ldim_split), ("ldim_lower", sb.lower)]
        summary.append(("realizer_of", "split poset"))
        return _realizer_out(args, sb.realizer, summary)
    if kind == "product":
        P = parse_poset(_read(args.left))
        Q = parse_poset(_read(args.right))
        budget = _budget(args)
        RP = parse_realizer(_read(args.left_realizer)) if args.left_realizer else exact_ldim(P, budget).witness
        RQ = parse_realizer(_read(args.right_realizer)) if args.right_realizer else exact_ldim(Q, budget).witness
        R = cons.product_realizer(P, Q, RP, RQ)
        PQ, _ = product(P, Q)
        mu = verify_local_realizer(PQ, R).raise_for_violation().mu
        if args.emit_certificate:
            sys.stdout.write(PQ.to_text())
        return _realizer_out(args, R, [("mu", mu), ("elements", PQ.n)])
    if kind == "bogart":
        P = parse_poset(_read(args.poset))
        L = cons.bogart_extension(P, _ints(args.ca), _ints(args.cb))
        _emit(args, format_realizer([L]))
        return EXIT_OK
    if kind == "young":
        H = DifferenceGraph(_ints(args.partition))
        rc = cons.young_cover(H)
        text = _comments([("rows", H.a), ("max_multiplicity", rc.max_multiplicity),
                          ("bound", math.ceil(math.log2(H.a + 1)))])
        _emit(args, text + format_cover(rc.rectangles))
        return EXIT_OK
    if kind == "staircase":
        sc = cons.staircase_cover(args.k)
        text = _comments([("n", sc.n), ("row_max", sc.row_max), ("col_max", sc.col_max),
                          ("target", sc.target)])
        _emit(args, text + format_cover(sc.cover.rectangles))
        return EXIT_OK
    if kind == "removal":
        return _construct_removal(args)
    raise UsageError(f"unknown construction {kind}")  # pragma: no cover


def _construct_removal(args) -> int:
    P = parse_poset(_read(args.poset))
    rule = args.rule
    if rule == "quadruple":
        q = cons.removable_quadruple(P)
        return _realizer_out(args, q.realizer, [
            ("case", q.case), ("removed", " ".join(map(str, q.elements))),
            ("mu_before", q.mu_before), ("mu_after", q.mu_after),
        ])
    if rule == "pair":
        pr = cons.removable_pair_height2(P, _budget(args) if args.exact else None)
        summary = [("case", pr.case), ("removed", f"{pr.x} {pr.y}"),
                   ("mu_before", pr.construction.mu_before), ("mu_after", pr.construction.mu_after)]
        if pr.certified is not None:
            summary += [("ldim", pr.ldim), ("ldim_reduced", pr.ldim_reduced)]
        return _realizer_out(args, pr.construction.realizer, summary)
    if rule in ("two-chain", "one-chain"):
        if args.c1 is None:
            raise UsageError("--c1 is required")
        c2 = _ints(args.c2) if rule == "two-chain" and args.c2 else ()
        res = cons.two_chain_removal(P, _ints(args.c1), c2)
    elif rule in ("minmax", "special"):
        if args.x is None or args.y is None:
            raise UsageError("--x and --y are required")
        build = cons.minmax_pair if rule == "minmax" else cons.special_pair
        res = build(P, args.x, args.y)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown removal rule {rule}")
    return _realizer_out(args, res.realizer, [
        ("case", res.case), ("removed", " ".join(map(str, res.removed))),
        ("mu_before", res.mu_before), ("mu_after", res.mu_after),
    ])


def cmd_bound(args) -> int:
    sys.stdout.write(cons.boolean_lb_report(args.n).render())
    return EXIT_OK


def _cover_value(G, kind, budget) -> str:
    try:
        return str(exact_cover_number(G, kind, budget).value)
    except BudgetExceeded:
        return "-"


def cmd_experiment(args) -> int:
    budget = _budget(args)
    rows = []
    for t in range(args.trials):
        G = random_bipartite(args.n1, args.n2, args.p, args.seed + t)
        btc = cons.block_trace_cover(G)
        rep = verify_cover(G, btc, BICLIQUE).raise_for_violation()
        rows.append([t, args.seed + t, len(G.edges), rep.max_multiplicity,
                     *(_cover_value(G, k, budget) for k in (LBC, LDC, TDC))])
    header = ["trial", "seed", "edges", "block_trace", LBC, LDC, TDC]
    _emit(args, _table(header, rows, args.tsv))
    return EXIT_OK


def cmd_survey(args) -> int:
    budget = _budget(args)
    counts: dict[tuple[int, int, int], int] = {}
    for n in range(1, args.max_n + 1):
        for P in posets_up_to_isomorphism(n):
            key = (n, exact_dim(P, budget).value, exact_ldim(P, budget).value)
            counts[key] = counts.get(key, 0) + 1
    rows = [[n, d, ld, c, "yes" if ld <= d else "NO"] for (n, d, ld), c in sorted(counts.items())]
    _emit(args, _table(["n", "dim", "ldim", "classes", "ldim<=dim"], rows, args.tsv))
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--output", "-o", help="write the main result to this file")
    common.add_argument("--seed", type=int, default=0, help="base seed for randomized commands")
    common.add_argument("--budget-nodes", type=int, default=20_000_000, help="search node limit")
    common.add_argument("--budget-ms", type=int, default=None, help="wall-clock limit in ms")
    common.add_argument("--emit-certificate", action="store_true",
                        help="also print the witness on stdout")
    common.add_argument("--tsv", action="store_true", help="tab-separated tables")

    parser = _Parser(prog="localdim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="write a generated poset")
    p.add_argument("family", help="chain, antichain, standard_example, boolean_lattice, layers")
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_gen)

    for name, func, help_text in (("dim", cmd_dim, "exact dimension"),
                                  ("ldim", cmd_ldim, "exact local dimension")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("poset", nargs="?", default=None)
        p.add_argument("--input", "-i", dest="input")
        p.add_argument("--max-elements", type=int, default=None)
        if name == "ldim":
            p.add_argument("--method", choices=("incremental", "pool"), default="incremental")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", parents=[common], help="check a certificate")
    p.add_argument("what", choices=("realizer", "local", "cover"))
    p.add_argument("host", help="poset file, or bigraph file for covers")
    p.add_argument("witness", help="realizer or cover file")
    p.add_argument("--kind", choices=(DIFFERENCE, BICLIQUE), default=DIFFERENCE)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="run a construction")
    csub = p.add_subparsers(dest="construction", required=True, parser_class=_Parser)
    c = csub.add_parser("height2", parents=[common])
    c.add_argument("poset")
    c.add_argument("--block-size", type=int, default=None)
    c = csub.add_parser("split-bound", parents=[common])
    c.add_argument("poset")
    c.add_argument("--exact", action="store_true", help="also solve ldim of the split exactly")
    c.add_argument("--max-elements", type=int, default=None)
    c = csub.add_parser("product", parents=[common])
    c.add_argument("left")
    c.add_argument("right")
    c.add_argument("--left-realizer")
    c.add_argument("--right-realizer")
    c = csub.add_parser("bogart", parents=[common])
    c.add_argument("poset")
    c.add_argument("--ca", required=True, help="comma-separated chain placed low")
    c.add_argument("--cb", required=True, help="comma-separated chain placed high")
    c = csub.add_parser("young", parents=[common])
    c.add_argument("partition", help="non-increasing parts, e.g. 5,4,4,2,1")
    c = csub.add_parser("staircase", parents=[common])
    c.add_argument("k", type=int)
    c = csub.add_parser("removal", parents=[common])
    c.add_argument("poset")
    c.add_argument("--rule", default="quadruple",
                   choices=("quadruple", "pair", "two-chain", "one-chain", "minmax", "special"))
    c.add_argument("--c1")
    c.add_argument("--c2")
    c.add_argument("--x", type=int)
    c.add_argument("--y", type=int)
    c.add_argument("--exact", action="store_true", help="certify a removable pair numerically")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bound", parents=[common], help="bound arithmetic")
    p.add_argument("which", choices=("boolean",))
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("experiment", parents=[common], help="random-graph experiments")
    p.add_argument("which", choices=("random-bipartite",))
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--p", type=float, default=1 / math.e)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--max-edges", type=int, default=None)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("survey", parents=[common], help="dim vs ldim over small posets")
    p.add_argument("which", choices=("posets",))
    p.add_argument("--max-n", type=int, default=5)
    p.set_defaults(func=cmd_survey)
    return parser


def _resolve_poset_arg(args) -> None:
    if hasattr(args, "input") and args.command in ("dim", "ldim"):
        args.poset = args.poset or args.input
        if args.poset is None:
            raise UsageError("a poset file (positional or --input) is required")


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        _resolve_poset_arg(args)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except VerificationError as exc:
        print(f"violation: {exc.violation}", file=sys.stderr)
        return EXIT_VIOLATION
    except (LocalDimError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
