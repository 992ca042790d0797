"""Command-line interface: ``biscornu <subcommand> ...``.

Exit status is 0 on success, 1 for bad input and 2 when a search finds
nothing or the solver does not converge.  Errors go to standard error
prefixed with ``error:``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .chart import SeedPair, emit_chart, hitomezashi, parse_chart, random_chart
from .designer import load_sampler, sampler_report, search, write_sampler
from .errors import BiscornuError
from .group_d4d import SUBGROUP_CLASSES, all_elements, classify_subgroup, emit_decoration, parse_decoration, stabilizer
from .svg import chart_svg, decoration_svg
from .symmetry_square import classify_square

EXIT_OK, EXIT_INPUT, EXIT_NOT_FOUND = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write_or_print(text: str, out, stdout):
    if out is None:
        stdout.write(text)
    else:
        try:
            Path(out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot write {out}: {exc.strerror}") from None


def _bits(s: str, name: str, n: int):
    if len(s) != n + 1 or set(s) - {"0", "1"}:
        raise InputError(f"--{name} must be {n + 1} binary digits, got {s!r}")
    return s


# ------------------------------------------------------------- subcommands


def cmd_gen(args, out):
    if args.random:
        if args.rows or args.cols:
            raise InputError("--random cannot be combined with --rows/--cols")
        chart = random_chart(args.n, args.density, args.seed)
    else:
        if args.rows is None or args.cols is None:
            raise InputError("gen needs --rows and --cols, or --random")
        seeds = SeedPair.from_strings(_bits(args.rows, "rows", args.n), _bits(args.cols, "cols", args.n))
        chart = hitomezashi(seeds, args.n)
    _write_or_print(emit_chart(chart), args.out, out)
    return EXIT_OK


def cmd_classify_square(args, out):
    out.write(classify_square(parse_chart(_read(args.chart))) + "\n")
    return EXIT_OK


def cmd_classify_biscornu(args, out):
    d = parse_decoration(_read(args.bis))
    stab = stabilizer(d)
    ordered = [g for g in all_elements() if g in stab]
    out.write(classify_subgroup(stab) + "\n")
    out.write("stabilizer: " + " ".join(str(g) for g in ordered) + "\n")
    return EXIT_OK


def cmd_sampler(args, out):
    entries = load_sampler()
    write_sampler(args.out, [(d, label) for _, d, label in entries])
    lines, matched = sampler_report(entries)
    report = "\n".join(lines) + "\n"
    Path(args.out, "report.txt").write_text(report, encoding="utf-8")
    out.write(report)
    return EXIT_OK if matched == len(entries) else EXIT_NOT_FOUND


def cmd_design(args, out):
    d = search(args.target, args.n, args.space, args.budget, args.seed)
    if d is None:
        print(f"error: NotFound: no {args.target} decoration in {args.budget} candidates", file=sys.stderr)
        return EXIT_NOT_FOUND
    _write_or_print(emit_decoration(d), args.out, out)
    return EXIT_OK


def _pairing_from_args(args):
    from .geometry.boundary import parse_boundary
    from .geometry.seam import make_dform_pairing, make_pita_pairing

    if args.pita is not None:
        if args.b1 or args.b2:
            raise InputError("--pita cannot be combined with --b1/--b2")
        if args.fold is None:
            raise InputError("--pita needs --fold")
        b = parse_boundary(_read(args.pita))
        return [b], make_pita_pairing(b, args.fold)
    if args.b1 is None or args.b2 is None:
        raise InputError("give --b1 and --b2, or --pita")
    if args.offset is None:
        raise InputError("a D-form needs --offset")
    b1 = parse_boundary(_read(args.b1))
    b2 = parse_boundary(_read(args.b2))
    return [b1, b2], make_dform_pairing(b1, b2, args.offset)


def _f(x) -> str:
    s = f"{float(x):.9g}"
    return "0" if s == "-0" else s


def cmd_seam(args, out):
    boundaries, pairing = _pairing_from_args(args)
    P = pairing.perimeter
    out.write(f"mode {pairing.mode}\n")
    out.write(f"perimeter {_f(P)}\n")
    if pairing.mode == "dform":
        out.write(f"offset {_f(pairing.offset)}\n")
    else:
        out.write(f"fold {_f(pairing.fold)}\n")
        out.write("fixed " + " ".join(_f(s) for s in pairing.fixed_points()) + "\n")
    src, dst = boundaries[0], boundaries[-1]
    out.write("# s partner x1 y1 x2 y2\n")
    for k in range(args.samples):
        s = P * k / args.samples
        t = float(pairing.partner(s))
        p, q = src.point_at(s), dst.point_at(t)
        out.write(" ".join(_f(v) for v in (s, t, p[0], p[1], q[0], q[1])) + "\n")
    return EXIT_OK


def cmd_relax(args, out):
    from .geometry.export import write_obj
    from .geometry.hull import convex_hull_check
    from .geometry.relax import RelaxParams, build_sheets, relax

    boundaries, pairing = _pairing_from_args(args)
    h = args.target_edge if args.target_edge else pairing.perimeter / 60.0
    params = RelaxParams(iterations=args.iters, perturbation_seed=args.seed,
                         length_tolerance=args.tolerance)
    sheets = build_sheets(boundaries, pairing, h, args.multiple)
    res = relax(sheets, pairing, params)
    hull = convex_hull_check(res, 2 * h)
    out.write(f"vertices {sum(len(m.vertices) for m in sheets)}\n")
    out.write(f"max_edge_strain {_f(res.max_edge_strain)}\n")
    out.write(f"bending_energy {_f(res.bending_energy)}\n")
    out.write(f"hull_fraction {_f(hull)}\n")
    out.write(f"converged {'yes' if res.converged else 'no'}\n")
    if args.out:
        write_obj(res, args.out)
    if not res.converged:
        print(f"error: not converged: strain {_f(res.max_edge_strain)} exceeds {_f(args.tolerance)}",
              file=sys.stderr)
        return EXIT_NOT_FOUND
    return EXIT_OK


def cmd_svg(args, out):
    text = _read(args.input)
    if args.input.endswith(".bis"):
        svg = decoration_svg(parse_decoration(text))
    else:
        svg = chart_svg(parse_chart(text))
    _write_or_print(svg, args.out, out)
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="biscornu", description="Biscornu symmetry and D-form geometry tools.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate a hitomezashi or random chart")
    g.add_argument("--n", type=int, required=True, help="cells per side")
    g.add_argument("--rows", help="n+1 row seed bits, e.g. 0110")
    g.add_argument("--cols", help="n+1 column seed bits")
    g.add_argument("--random", action="store_true", help="aleatoric chart instead of seeds")
    g.add_argument("--density", type=float, default=0.5, help="segment probability (default 0.5)")
    g.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    g.add_argument("--out", help="output .chart file (default stdout)")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("classify-square", help="symmetry class of a chart")
    c.add_argument("chart")
    c.set_defaults(func=cmd_classify_square)

    c = sub.add_parser("classify-biscornu", help="subgroup class and stabilizer of a decoration")
    c.add_argument("bis")
    c.set_defaults(func=cmd_classify_biscornu)

    s = sub.add_parser("sampler", help="write the eleven exemplar decorations with a manifest")
    s.add_argument("--out", required=True, help="output directory")
    s.set_defaults(func=cmd_sampler)

    d = sub.add_parser("design", help="search for a decoration of a given class")
    d.add_argument("--target", required=True, choices=SUBGROUP_CLASSES)
    d.add_argument("--n", type=int, default=5, help="cells per side (default 5)")
    d.add_argument("--space", choices=("seeds", "random"), default="seeds", help="candidate space (default seeds)")
    d.add_argument("--budget", type=int, default=10000, help="candidates to try (default 10000)")
    d.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    d.add_argument("--out", help="output .bis file (default stdout)")
    d.set_defaults(func=cmd_design)

    for name, helptext, func in (("seam", "report a seam pairing", cmd_seam),
                                 ("relax", "relax a D-form or pita-form and report", cmd_relax)):
        q = sub.add_parser(name, help=helptext)
        q.add_argument("--b1", help="first D-form boundary (.bnd)")
        q.add_argument("--b2", help="second D-form boundary (.bnd)")
        q.add_argument("--offset", type=float, help="seam start offset on the second boundary")
        q.add_argument("--pita", help="pita-form boundary (.bnd)")
        q.add_argument("--fold", type=float, help="pita-form fold point (arclength)")
        if name == "seam":
            q.add_argument("--samples", type=int, default=8, help="pairs to list (default 8)")
        else:
            q.add_argument("--iters", type=int, default=8000, help="solver iterations (default 8000)")
            q.add_argument("--seed", type=int, default=0, help="perturbation seed (default 0)")
            q.add_argument("--target-edge", type=float, help="mesh edge length (default perimeter/60)")
            q.add_argument("--multiple", type=int, default=1,
                           help="boundary vertex count multiple, e.g. 8 for a biscornu (default 1)")
            q.add_argument("--tolerance", type=float, default=0.01, help="strain tolerance (default 0.01)")
            q.add_argument("--out", help="write the relaxed mesh as OBJ")
        q.set_defaults(func=func)

    v = sub.add_parser("svg", help="render a .chart or .bis file")
    v.add_argument("input")
    v.add_argument("--out", help="output .svg file (default stdout)")
    v.set_defaults(func=cmd_svg)
    return p


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, stdout)
    except (InputError, BiscornuError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
