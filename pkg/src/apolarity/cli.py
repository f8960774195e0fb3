"""Command line interface.

Subcommands::

    apolarity analyze --expr "x0*x3^2+x1*x3*x4+x2*x4^2" [--vars N] [--seed S] [--format json|text]
    apolarity analyze --input forms.txt [--jobs J]
    apolarity loci --which cones|vanishing-hessian|intersection|cone-formula [--n N --d D]
    apolarity jordan --expr ... --element "1,1,1,1,1"

Exit codes: 0 ok, 2 parse/usage error, 3 non-homogeneous input,
4 classification came back ``UNRECOGNIZED`` (the report is still printed).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb

from . import __version__
from .apolar import build_algebra, generic_jordan_type, has_slp, has_vanishing_hessian, is_cone, jordan_type
from .classify import Label, classify
from .polyring import Form, ParseError, parse_polynomial
from .schubert import (
    cone_locus_dimension,
    degree_cone_locus,
    degree_intersection_locus,
    degree_vanishing_hessian_locus,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_HOMOGENEOUS = 3
EXIT_UNRECOGNIZED = 4

NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass
class AnalysisReport:
    input: str
    vars: int
    degree: int
    hilbert: list
    cone: dict
    hessian_vanishes: bool
    slp: dict
    jordan_type: list
    # label is NOT_APPLICABLE unless the input is a cubic in 5 variables
    class_: dict
    seed: int
    version: str = __version__
    timings: dict | None = field(default=None, compare=False)

    def to_dict(self):
        d = asdict(self)
        d["class"] = d.pop("class_")
        if self.timings is None:
            d.pop("timings")
        return {k: d[k] for k in _KEY_ORDER if k in d}

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        d["class_"] = d.pop("class")
        return cls(**d)

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def to_text(self):
        lines = []
        for key, value in self.to_dict().items():
            if isinstance(value, dict):
                for sub, v in value.items():
                    lines.append(f"{key}.{sub}: {json.dumps(v, ensure_ascii=False)}")
            else:
                lines.append(f"{key}: {json.dumps(value, ensure_ascii=False)}")
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text):
        d = {}
        for line in text.splitlines():
            key, _, value = line.partition(": ")
            value = json.loads(value)
            if "." in key:
                head, sub = key.split(".", 1)
                d.setdefault(head, {})[sub] = value
            else:
                d[key] = value
        return cls.from_dict(d)

    @property
    def unrecognized(self):
        return self.class_["label"] == Label.UNRECOGNIZED.value


_KEY_ORDER = ("input", "vars", "degree", "hilbert", "cone", "hessian_vanishes", "slp",
              "jordan_type", "class", "seed", "version", "timings")


class InputError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _infer_nvars(text):
    idx = [int(m) for m in re.findall(r"x_?(\d+)", text)]
    return max(idx) + 1 if idx else 1


def read_form(text, nvars=None):
    if nvars is None:
        nvars = _infer_nvars(text)
    try:
        p = parse_polynomial(text, nvars)
    except ParseError as exc:
        raise InputError(f"parse error: {exc}", EXIT_PARSE) from exc
    if p.is_zero():
        raise InputError("the zero polynomial is not a form", EXIT_NOT_HOMOGENEOUS)
    if not p.is_homogeneous():
        raise InputError(f"{p} is not homogeneous", EXIT_NOT_HOMOGENEOUS)
    return Form.of(p)


def analyze(f, seed=0, timings=False):
    clock = {}

    def timed(name, fn, *args):
        t0 = time.perf_counter()
        out = fn(*args)
        clock[name] = round(time.perf_counter() - t0, 6)
        return out

    algebra = timed("build_algebra", build_algebra, f)
    cone, vdim = timed("is_cone", is_cone, f)
    hv = timed("hessian", has_vanishing_hessian, f)
    holds, witness = timed("slp", has_slp, algebra, seed)
    jt = timed("jordan_type", generic_jordan_type, algebra, seed)
    if f.nvars == 5 and f.degree == 3:
        c = timed("classify", classify, f, seed)
        cls = {"label": c.label.value, "dual_dim": c.dual_dim, "stab_dim": c.stab_dim}
    else:
        cls = {"label": NOT_APPLICABLE, "dual_dim": None, "stab_dim": None}
    return AnalysisReport(
        input=str(f),
        vars=f.nvars,
        degree=f.degree,
        hilbert=list(algebra.hilbert),
        cone={"is_cone": cone, "vertex_dim": vdim},
        hessian_vanishes=hv,
        slp={"holds": holds, "witness": None if witness is None else [str(x) for x in witness]},
        jordan_type=list(jt.parts),
        class_=cls,
        seed=seed,
        timings=clock if timings else None,
    )


def _analyze_job(args):
    f, seed, timings = args
    return analyze(f, seed, timings)


def cmd_analyze(args, out):
    if args.expr is not None:
        texts = [args.expr]
    else:
        with open(args.input, encoding="utf-8") as fh:
            texts = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    forms = [read_form(t, args.vars) for t in texts]
    jobs = [(f, args.seed, args.timings) for f in forms]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_analyze_job, jobs))
    else:
        reports = [_analyze_job(j) for j in jobs]
    if args.format == "json":
        if len(reports) == 1 and args.expr is not None:
            print(reports[0].to_json(), file=out)
        else:
            print(json.dumps([r.to_dict() for r in reports], indent=2, ensure_ascii=False),
                  file=out)
    else:
        print("\n\n".join(r.to_text() for r in reports), file=out)
    return EXIT_UNRECOGNIZED if any(r.unrecognized for r in reports) else EXIT_OK


def _cone_locus_name(n, d):
    return "C_4" if (n, d) == (4, 3) else f"C_{{{d},{n}}}"


def loci_rows(which, n=4, d=3):
    if which == "cones":
        return [{"locus": _cone_locus_name(n, d),
                 "dimension": cone_locus_dimension(n, d), "degree": degree_cone_locus(n, d)}]
    if which == "vanishing-hessian":
        dim, deg = degree_vanishing_hessian_locus()
        return [{"locus": "K", "dimension": dim, "degree": deg}]
    if which == "intersection":
        dim, deg = degree_intersection_locus()
        return [{"locus": "K∩C_4", "dimension": dim, "degree": deg}]
    if which == "cone-formula":
        return [{"locus": _cone_locus_name(n, d), "dimension": cone_locus_dimension(n, d),
                 "segre": degree_cone_locus(n, d), "binomial": comb(comb(n + d - 1, n), n)}]
    raise ValueError(which)


def cmd_loci(args, out):
    rows = loci_rows(args.which, args.n, args.d)
    if args.format == "json":
        print(json.dumps(rows, ensure_ascii=False), file=out)
    else:
        for row in rows:
            print("  ".join(str(v) for v in row.values()), file=out)
    return EXIT_OK


def parse_element(text, nvars):
    try:
        values = [Fraction(x.strip()) for x in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad element {text!r}: {exc}", EXIT_PARSE) from exc
    if len(values) != nvars:
        raise InputError(f"element has {len(values)} coordinates, expected {nvars}", EXIT_PARSE)
    return values


def cmd_jordan(args, out):
    f = read_form(args.expr, args.vars)
    element = parse_element(args.element, f.nvars)
    jt = jordan_type(build_algebra(f), element)
    if args.format == "json":
        print(json.dumps({"jordan_type": list(jt.parts)}), file=out)
    else:
        print(list(jt.parts), file=out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="apolarity", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="Hilbert vector, SLP, Jordan type and class of a form")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--expr")
    src.add_argument("--input", help="file with one form per line")
    p.add_argument("--vars", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--timings", action="store_true", help="include per-step timings")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("loci", help="dimensions and degrees of loci in P^34")
    p.add_argument("--which", required=True,
                   choices=("cones", "vanishing-hessian", "intersection", "cone-formula"))
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_loci)

    p = sub.add_parser("jordan", help="Jordan type of multiplication by a given linear form")
    p.add_argument("--expr", required=True)
    p.add_argument("--vars", type=int, default=None)
    p.add_argument("--element", required=True, help='comma separated, e.g. "1,0,0,0,0"')
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_jordan)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
