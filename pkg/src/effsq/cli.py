"""Command-line interface: ``effsq <command> [flags]``.

Exit codes: 0 success / effective, 1 checked and not effective (or a suite
property failed), 2 invalid input, 64 usage error, 74 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .classes import parse_class
from .diagram import DiagramBuilder, DiagramError, parse_diagram, serialize_diagram
from .errors import EffsqError
from .generate import GeneratorConfig, InstanceGenerator
from .groups import group_json, hom_json, make_group, pushout
from .higher import DEFAULT_MAX_DIM, is_cube_effective
from .linalg import as_matrix, smith_normal_form
from .squares import is_effective
from .suites import CLASS_SUITES, SUITES, Report, run_properties, replay, suite_properties

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_USAGE, EXIT_IO = 0, 1, 2, 64, 74

GEN_KINDS = ("group", "hom", "mono", "span", "square", "effective-square", "cube", "near-miss-cube")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common(p: argparse.ArgumentParser, seed: bool = False) -> None:
    p.add_argument("--in", dest="infile", default="-", help="input file (default: stdin)")
    p.add_argument("--out", dest="outfile", default="-", help="output file (default: stdout)")
    p.add_argument("--class", dest="cls", default=None, help="all, mono, pure, split or iso")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    if seed:
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--trials", type=int, default=200)
        p.add_argument("--max-dim", type=int, default=3)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="effsq", description="Effective squares over finitely presented abelian groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("snf", help="Smith normal form of a matrix, or of every group in a diagram")
    _common(p)

    p = sub.add_parser("pushout", help="pushout of every span in a diagram")
    _common(p)
    p.add_argument("--name", help="only this span")

    p = sub.add_parser("check-square", help="decide effectiveness of the squares in a diagram")
    _common(p)
    p.add_argument("--name", help="only this square")

    p = sub.add_parser("check-cube", help="decide effectiveness of the cubes in a diagram")
    _common(p)
    p.add_argument("--name", help="only this cube")

    p = sub.add_parser("suite", help="run seeded property suites")
    _common(p, seed=True)
    p.add_argument("suites", nargs="*", metavar="SUITE", help=f"any of {', '.join(SUITES)} (default: all)")
    p.add_argument("--timing", action="store_true", help="record wall-clock time in the report")
    p.add_argument("--replay", type=int, metavar="TRIAL_SEED", help="re-run one failing trial")
    p.add_argument("--property", help="property to replay, as SUITE/NAME")

    p = sub.add_parser("gen", help="write a generated instance as a diagram")
    _common(p, seed=True)
    p.add_argument("kind", choices=GEN_KINDS)
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _class(args, doc=None):
    name = args.cls or (doc.cls if doc is not None else None) or "mono"
    try:
        return parse_class(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _seed(args) -> int:
    env = os.environ.get("EFFSQ_SEED")
    if env is None:
        return args.seed
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"EFFSQ_SEED must be an integer, not {env!r}") from None


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _pick(table: dict, name: Optional[str], what: str) -> list[str]:
    if name is None:
        return sorted(table)
    if name not in table:
        raise DiagramError(f"$.{what}", f"no entry named {name!r}")
    return [name]


def cmd_snf(args) -> int:
    raw = _read(args.infile)
    data = json.loads(raw)
    if isinstance(data, list):
        m = as_matrix(data)
        ncols = len(m[0]) if m else 0
        u, d, v = smith_normal_form(m, ncols)
        if args.json:
            out = _dumps({"U": u, "D": d, "V": v, "canonical": str(make_group(ncols, m))})
        else:
            out = "\n".join(f"{k} = {[list(r) for r in x]}" for k, x in (("U", u), ("D", d), ("V", v)))
        _write(args.outfile, out)
        return EXIT_OK
    doc = parse_diagram(raw)
    rows = {name: group_json(g) for name, g in sorted(doc.groups.items())}
    out = _dumps(rows) if args.json else "\n".join(f"{n}: {r['canonical']}" for n, r in rows.items())
    _write(args.outfile, out)
    return EXIT_OK


def cmd_pushout(args) -> int:
    doc = parse_diagram(_read(args.infile))
    out = {}
    for name in _pick(doc.spans, args.name, "spans"):
        sp = doc.span(name)
        po = pushout(sp.f, sp.g)
        out[name] = {
            "apex": group_json(po.apex),
            "inj_left": hom_json(po.inj_left),
            "inj_right": hom_json(po.inj_right),
        }
    if args.json:
        _write(args.outfile, _dumps(out))
    else:
        _write(args.outfile, "\n".join(f"{n}: {r['apex']['canonical']}" for n, r in out.items()))
    return EXIT_OK


def _check(args, table: str, decide) -> int:
    doc = parse_diagram(_read(args.infile))
    cls = _class(args, doc)
    results = {}
    for name in _pick(getattr(doc, table), args.name, table):
        v = decide(doc, name, cls)
        results[name] = {"effective": v.passed, "witness": v.witness}
    if args.json:
        _write(args.outfile, _dumps({"class": cls.value, table: results}))
    else:
        lines = []
        for name, r in results.items():
            lines.append(f"{name}: {'effective' if r['effective'] else 'NOT effective'} ({cls.value})")
            if not r["effective"]:
                lines.append("  " + _dumps(r["witness"]))
        _write(args.outfile, "\n".join(lines))
    return EXIT_OK if all(r["effective"] for r in results.values()) else EXIT_NEGATIVE


def cmd_check_square(args) -> int:
    return _check(args, "squares", lambda doc, name, cls: is_effective(doc.square(name), cls))


def cmd_check_cube(args) -> int:
    return _check(args, "cubes", lambda doc, name, cls: is_cube_effective(doc.cube(name), cls))


def _suite_names(args) -> list[str]:
    names = args.suites or list(SUITES)
    for n in names:
        if n not in SUITES:
            raise UsageError(f"unknown suite {n!r}; expected one of {', '.join(SUITES)}")
    return names


def cmd_suite(args) -> int:
    cls = _class(args)
    if args.trials <= 0:
        raise UsageError("--trials must be positive")
    if not 2 <= args.max_dim <= DEFAULT_MAX_DIM:
        raise UsageError(f"--max-dim must be between 2 and {DEFAULT_MAX_DIM}")
    cfg = GeneratorConfig(seed=_seed(args), trials=args.trials)
    names = _suite_names(args)
    props = []
    for n in names:
        prefix = f"{n}[{cls.value}]" if n in CLASS_SUITES else n
        for pname, body, trials in suite_properties(n, cls, cfg, args.max_dim):
            props.append((f"{prefix}/{pname}", body, trials))
    if args.replay is not None:
        if not args.property:
            raise UsageError("--replay needs --property SUITE/NAME")
        suite, _, pname = args.property.partition("/")
        suite = suite.split("[")[0]
        v = replay(suite, pname, args.replay, cls, cfg, args.max_dim)
        _write(args.outfile, _dumps({"passed": v.passed, "vacuous": v.vacuous, "witness": v.witness}))
        return EXIT_OK if v.passed else EXIT_NEGATIVE
    label = names[0] if len(names) == 1 else "all"
    report: Report = run_properties(label, cfg, props, timing=args.timing)
    report.config["max_dim"] = args.max_dim
    report.config["class"] = cls.value
    _write(args.outfile, report.dumps() if args.json else report.table())
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_gen(args) -> int:
    cls = _class(args)
    gen = InstanceGenerator(GeneratorConfig(seed=_seed(args)))
    b = DiagramBuilder(cls.value)
    kind = args.kind
    if kind == "group":
        b.group(gen.group(), "G")
    elif kind == "hom":
        a = gen.group()
        b.hom(gen.hom(a, gen.group()), "h")
    elif kind == "mono":
        b.hom(gen.m_map(gen.group(), cls), "m")
    elif kind == "span":
        b.span(gen.span(cls))
    elif kind == "square":
        b.square(gen.square(cls))
    elif kind == "effective-square":
        b.square(gen.effective_square(cls))
    else:
        cube = gen.cube(cls, near_miss=kind == "near-miss-cube")
        b.cube(cube)
    _write(args.outfile, serialize_diagram(b.doc))
    return EXIT_OK


COMMANDS = {
    "snf": cmd_snf,
    "pushout": cmd_pushout,
    "check-square": cmd_check_square,
    "check-cube": cmd_check_cube,
    "suite": cmd_suite,
    "gen": cmd_gen,
}


def main(argv: Optional[list[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"effsq: {exc}", file=sys.stderr)
        return EXIT_IO
    except (EffsqError, json.JSONDecodeError, ValueError) as exc:
        print(f"effsq: invalid input: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
