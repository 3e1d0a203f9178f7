"""Command-line entry point: ``cmred reduce|classify|aggregate|list-groups``.

stdout carries only the document; diagnostics go to stderr.  Exit codes:
0 success, 1 failed reference check (aggregate), 2 bad spec or input,
3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .catalog import ParseError, build_group, group_label, list_groups, parse_cycles
from .catalog import parse_group_spec, parse_group_spec_list
from .perm import (DEFAULT_ORDER_CAP, DEFAULT_SUBGROUP_SEARCH_CAP, CapacityError,
                   PermutationError, generate_group)
from .pipeline import (NotCMDatumError, RunOptions, aggregate_claim, classification_table,
                       name_piece, outside_claim, run, threads_from_env)
from .report import make_meta, record_to_dict, render_records, render_table
from .words import WordError


class FlagError(Exception):
    def __init__(self, flag, message, code=2):
        super().__init__(f"{flag}: {message}")
        self.code = code


def _load_group(flag, text, order_cap):
    try:
        spec = parse_group_spec(text)
        return build_group(spec, order_cap=order_cap), group_label(spec)
    except (ParseError, PermutationError, OSError, ValueError) as exc:
        raise FlagError(flag, str(exc)) from None
    except CapacityError as exc:
        raise FlagError(flag, f"{exc} (raise --order-cap)", 3) from None


def _options(args):
    try:
        threads = threads_from_env()
    except ValueError as exc:
        raise FlagError("CMRED_THREADS", str(exc)) from None
    return RunOptions(include_imprimitive=args.include_imprimitive,
                      dedup=not args.no_dedup,
                      provenance=args.verbose_provenance,
                      subgroup_cap=args.subgroup_cap,
                      orientation=args.orientation,
                      threads=threads,
                      fast_sigma=args.fast_sigma)


def _run(G, label, g, deltas, options, flag_for_g):
    try:
        return run(G, g=g, deltas=deltas, options=options, label=label)
    except CapacityError as exc:
        raise FlagError("--subgroup-cap", str(exc), 3) from None
    except NotCMDatumError as exc:
        raise FlagError("--group", str(exc)) from None
    except PermutationError as exc:
        raise FlagError(flag_for_g, str(exc)) from None


def _meta_flags(args, options):
    return {"orientation": options.resolved_orientation(),
            "include_imprimitive": options.include_imprimitive,
            "dedup": options.dedup,
            "subgroup_cap": options.subgroup_cap,
            "fast_sigma": options.fast_sigma}


def cmd_reduce(args):
    if args.g is None and args.delta is None:
        raise FlagError("--g/--delta", "give --g, --delta, or both")
    if args.fast_sigma and args.delta is not None:
        raise FlagError("--fast-sigma", "only valid with --g (aggregate over all Delta)")
    G, label = _load_group("--group", args.group, args.order_cap)
    options = _options(args)
    deltas = None
    if args.delta is not None:
        try:
            gens = parse_cycles(args.delta, degree=G.degree)
            if any(p.degree != G.degree for p in gens):
                raise PermutationError(f"generators must have degree {G.degree}")
            deltas = [generate_group(gens, degree=G.degree, order_cap=G.order)]
        except (ParseError, PermutationError, CapacityError) as exc:
            raise FlagError("--delta", str(exc)) from None
        index = G.order // deltas[0].order
        if args.g is not None and index != 2 * args.g:
            raise FlagError("--delta", f"[G:Delta] = {index} but --g {args.g} needs {2 * args.g}")
    elif args.g < 1:
        raise FlagError("--g", "must be a positive integer")
    g = None if deltas else args.g
    records = _run(G, label, g, deltas, options, "--delta" if deltas else "--g")
    if not records:
        print(f"warning: no admissible Delta for {label}", file=sys.stderr)
    meta = make_meta("reduce", group=args.group, label=label, g=args.g,
                     delta=args.delta, **_meta_flags(args, options))
    rows = [record_to_dict(r, args.verbose_provenance) for r in records]
    return render_records(meta, rows, args.format), 0


def cmd_classify(args):
    if args.g < 1:
        raise FlagError("--g", "must be a positive integer")
    rows = []
    for piece, a in classification_table(args.g):
        name = name_piece(piece)
        rows.append((args.g, ", ".join(str(w) for w in piece), name.text(), a))
    meta = make_meta("classify", g=args.g)
    header = ["g", "circular words", "group scheme", "a-number"]
    return render_table(meta, header, rows, args.format,
                        keys=["g", "words", "name", "a"]), 0


def cmd_aggregate(args):
    try:
        specs = parse_group_spec_list(args.groups)
    except ParseError as exc:
        raise FlagError("--groups", str(exc)) from None
    options = _options(args)
    pairs = set()
    for spec in specs:
        G, label = _load_group("--groups", str(spec), args.order_cap)
        pairs |= aggregate_claim(_run(G, label, args.g, None, options, "--g"))
    rows = [(f, a, alpha, beta) for (f, a), (alpha, beta) in sorted(pairs)]
    code = 0
    status = "n/a (reference table covers g <= 5 only)"
    if args.g <= 5:
        bad = outside_claim(pairs)
        status = "PASS" if not bad else "FAIL"
        if bad:
            code = 1
            print(f"pairs outside the reference table: {bad}", file=sys.stderr)
    meta = make_meta("aggregate", g=args.g, groups=args.groups, claim_check=status,
                     **_meta_flags(args, options))
    header = ["p-rank", "a-number", "alpha", "beta"]
    out = render_table(meta, header, rows, args.format, keys=["f", "a", "alpha", "beta"])
    if args.format == "md":
        out += f"\nclaim check: {status}\n"
    return out, code


def cmd_list_groups(args):
    rows = []
    for name, text, order, n_inv, caveat in list_groups():
        rows.append((f"builtin:{name}", text, "" if order is None else order,
                     "" if n_inv is None else n_inv, caveat or "GAP id is a label only"))
    meta = make_meta("list-groups")
    header = ["spec", "construction", "order", "central involutions", "caveat"]
    return render_table(meta, header, rows, args.format,
                        keys=["spec", "construction", "order", "central_involutions",
                              "caveat"]), 0


def _add_run_flags(p):
    p.add_argument("--include-imprimitive", action="store_true",
                   help="keep imprimitive CM types")
    p.add_argument("--no-dedup", action="store_true", help="emit every record")
    p.add_argument("--verbose-provenance", action="store_true",
                   help="attach (iota, Delta, CM type, sigma) to each record")
    p.add_argument("--subgroup-cap", type=int, default=DEFAULT_SUBGROUP_SEARCH_CAP)
    p.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP)
    p.add_argument("--orientation", choices=["forward", "reverse", "auto"], default="auto")
    p.add_argument("--fast-sigma", action="store_true",
                   help="loop over conjugacy class representatives of sigma only")


def build_parser():
    parser = argparse.ArgumentParser(prog="cmred", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="decompositions of A[p] per decomposition type")
    p.add_argument("--group", required=True)
    p.add_argument("--g", type=int)
    p.add_argument("--delta")
    p.add_argument("--format", choices=["md", "csv", "json"], default="md")
    _add_run_flags(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("classify", help="quasi-polarized indecomposable pieces")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--format", choices=["md", "csv", "json"], default="md")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("aggregate", help="(p-rank, a-number) vs decomposition type")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--groups", required=True)
    p.add_argument("--format", choices=["md", "csv", "json"], default="md")
    _add_run_flags(p)
    p.set_defaults(func=cmd_aggregate)

    p = sub.add_parser("list-groups", help="built-in groups")
    p.add_argument("--format", choices=["md", "csv", "json"], default="md")
    p.set_defaults(func=cmd_list_groups)
    return parser


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s",
                        stream=sys.stderr)
    args = build_parser().parse_args(argv)
    try:
        out, code = args.func(args)
    except FlagError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except WordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
