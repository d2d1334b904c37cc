"""Command-line front end.

Exit codes: 0 success / positive verdict, 1 negative verdict, 2 input or
format error, 3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import jsonio
from .assessments import is_consistent, refutation_certificate, settings
from .choice_functions import Assessment, choose, extract_order, is_compatible, represent
from .errors import ChoiceKitError, NotBinary, NotBlunt, ResourceLimit
from .exact_geometry import format_vector, record_feasibility_queries
from .oracle import fm_conic_feasible
from .rules import archimedean_exact, coherent_exact, monotonify

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class Output:
    """Collects text lines or a JSON payload for deterministic printing."""

    def __init__(self, mode):
        self.mode = mode
        self.lines = []

    def verdict(self, word, **extra):
        if self.mode == "json":
            self.lines.append(jsonio.dumps({"verdict": word, **extra}).rstrip("\n"))
        else:
            self.lines.append(word)

    def text(self, line):
        self.lines.append(line)

    def json(self, payload):
        self.lines.append(jsonio.dumps(payload).rstrip("\n"))

    def render(self):
        return "".join(line + "\n" for line in self.lines)


def cmd_check_proper(args, out):
    try:
        jsonio.read(args.cone, jsonio.parse_cone)
    except NotBlunt:
        out.verdict("not-blunt")
        return EXIT_NEGATIVE
    out.verdict("proper")
    return EXIT_OK


def cmd_choose(args, out):
    model = jsonio.read(args.model, jsonio.parse_model)
    options = jsonio.read(args.options, jsonio.parse_vectors)
    chosen = choose(model, options)
    if out.mode == "json":
        out.json({"chosen": [jsonio.encode_vector(u) for u in chosen]})
    else:
        for u in chosen:
            out.text(format_vector(u))
    return EXIT_OK


def cmd_extend(args, out):
    family = jsonio.read(args.assessment, jsonio.parse_assessment)
    query = jsonio.read(args.options, jsonio.parse_optset)
    cert = refutation_certificate(family, query) if query is not None else None
    if query is not None and cert is None:
        out.verdict("member")
        return EXIT_OK
    extra = {}
    if args.certificate and cert is not None:
        extra["certificate"] = jsonio.encode_cone(cert)
    if out.mode == "json":
        out.verdict("non-member", **extra)
    else:
        out.text("non-member")
        if extra:
            out.text(f"certificate: {cert}")
    return EXIT_NEGATIVE


def cmd_consistent(args, out):
    family = jsonio.read(args.assessment, jsonio.parse_assessment)
    ok = is_consistent(family)
    out.verdict("consistent" if ok else "inconsistent")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_represent(args, out):
    family = jsonio.read(args.assessment, jsonio.parse_assessment)
    if not is_consistent(family):
        out.verdict("inconsistent")
        return EXIT_NEGATIVE
    out.json({"cones": [jsonio.encode_cone(D) for D in represent(Assessment(family))]})
    return EXIT_OK


def cmd_check_rules(args, out):
    model = jsonio.read(args.model, jsonio.parse_model)
    rules = jsonio.read(args.rules, jsonio.parse_rules)
    res = is_compatible(model, rules)
    if res.compatible:
        out.verdict("compatible")
        return EXIT_OK
    if out.mode == "json":
        out.verdict("incompatible", witness=res.witness_index)
    else:
        out.text("incompatible")
        out.text(f"witness: {res.witness_index}")
    return EXIT_NEGATIVE


def _boolean(out, value):
    out.verdict("true" if value else "false")
    return EXIT_OK if value else EXIT_NEGATIVE


def cmd_coherent(args, out):
    return _boolean(out, coherent_exact(jsonio.read(args.cone, jsonio.parse_cone), args.variant))


def cmd_archimedean(args, out):
    return _boolean(out, archimedean_exact(jsonio.read(args.cone, jsonio.parse_cone)))


def cmd_monotonify(args, out):
    rules = jsonio.read(args.rules, jsonio.parse_rules)
    sets = jsonio.load(args.set)
    # one set of vectors, or an array of such sets
    if isinstance(sets, list) and sets and isinstance(sets[0], list) and sets[0] \
            and isinstance(sets[0][0], list):
        ms = [jsonio.parse_vectors(s) for s in sets]
    else:
        ms = [jsonio.parse_vectors(sets)]
    out.json(jsonio.encode_rules(monotonify(rules, ms)))
    return EXIT_OK


def cmd_extract_order(args, out):
    model = jsonio.read(args.model, jsonio.parse_model)
    probes = jsonio.read(args.probes, jsonio.parse_vectors)
    try:
        cone = extract_order(model, probes)
    except NotBinary as exc:
        A = "{" + ",".join(format_vector(u) for u in exc.option_set) + "}"
        if out.mode == "json":
            out.verdict("not-binary", counterexample={
                "options": [jsonio.encode_vector(u) for u in exc.option_set],
                "option": jsonio.encode_vector(exc.option)})
        else:
            out.text("not-binary")
            out.text(f"counterexample: A={A} u={format_vector(exc.option)}")
        return EXIT_NEGATIVE
    out.json(jsonio.encode_cone(cone))
    return EXIT_OK


def _global_flags(suppress):
    # subcommands repeat the flags without defaults so they never clobber
    # values given before the subcommand name
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verify", action="store_true", default=default(False),
                        help="re-check every feasibility query with Fourier-Motzkin elimination")
    common.add_argument("--max-selections", type=int, default=default(None),
                        help="limit on selection maps (default: $CHOICEKIT_MAX_SELECTIONS or 10**6)")
    common.add_argument("--output", choices=("text", "json"), default=default("text"))
    common.add_argument("--workers", type=int, default=default(1),
                        help="processes used to enumerate selection cones")
    return common


def build_parser():
    parser = argparse.ArgumentParser(prog="choicekit", parents=[_global_flags(False)],
                                     description="Exact choice functions from sets of strict partial orders.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _global_flags(True)

    def add(name, func, *files, help=None):
        p = sub.add_parser(name, parents=[common], help=help)
        for f in files:
            p.add_argument(f)
        p.set_defaults(func=func)
        return p

    add("check-proper", cmd_check_proper, "cone", help="is the cone blunt?")
    add("choose", cmd_choose, "model", "options", help="choose from a finite option set")
    p = add("extend", cmd_extend, "assessment", "options", help="natural-extension membership")
    p.add_argument("--certificate", action="store_true", default=False)
    add("consistent", cmd_consistent, "assessment")
    add("represent", cmd_represent, "assessment", help="selection cones as JSON")
    add("check-rules", cmd_check_rules, "model", "rules")
    p = add("coherent", cmd_coherent, "cone")
    p.add_argument("--variant", choices=("strict", "weak"), default="strict")
    add("archimedean", cmd_archimedean, "cone")
    add("monotonify", cmd_monotonify, "rules", "set")
    add("extract-order", cmd_extract_order, "model", "probes")
    return parser


def _verify(log):
    bad = [(g, t) for (g, t), res in sorted(log.items()) if fm_conic_feasible(g, t) != res]
    return len(log), bad


def run(argv=None, stdout=None, stderr=None) -> int:
    """Run the CLI and return its exit code."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    out = Output(args.output)
    try:
        with settings(max_selections=args.max_selections, workers=args.workers), \
                record_feasibility_queries() as log:
            code = args.func(args, out)
        if args.verify:
            n, bad = _verify(log)
            if bad:
                stderr.write(f"verification FAILED on {len(bad)} of {n} feasibility queries\n")
                return EXIT_INPUT
            stderr.write(f"verified {n} feasibility queries by Fourier-Motzkin elimination\n")
    except ResourceLimit as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_LIMIT
    except (ChoiceKitError, ValueError, TypeError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    stdout.write(out.render())
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
