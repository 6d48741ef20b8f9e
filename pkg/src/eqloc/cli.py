"""Command-line interface.

Groups are given as a preset name (``C2``, ``S3``, ``Q8``, ...) or inline as
``DEGREE:GEN,GEN,...`` with generators in 1-based cycle notation, e.g.
``3:(1 2 3),(1 2)``. Elements are coefficient vectors in canonical class
order, e.g. ``[1, 2]`` for 2+ρ over C2.

Structured output is one JSON object per line; see README.md for the schema.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass
from typing import TextIO

from . import __version__
from .burnside import BurnsideElement, burnside_ring, format_rho, format_vector
from .errors import EqlocError, ParseError
from .groups import (DEFAULT_ORDER_BOUND, FiniteGroup, Subgroup, format_cycles,
                     group_from_generators)
from .localization import (DEFAULT_MAX_POWER, DEFAULT_MAX_WORD,
                           LocalizationProblem, Unknown, Unsafe,
                           check_criterion, closure_enumerate,
                           invert_integer_report)
from .norms import SubgroupContext, norm
from .presets import PRESETS, preset

EXIT_SAFE, EXIT_ERROR, EXIT_UNKNOWN, EXIT_UNSAFE = 0, 1, 2, 3
EXIT_FOR = {"Safe": EXIT_SAFE, "Unknown": EXIT_UNKNOWN, "Unsafe": EXIT_UNSAFE}


@dataclass(frozen=True)
class RunConfig:
    format: str = "text"
    max_power: int = DEFAULT_MAX_POWER
    max_word: int = DEFAULT_MAX_WORD
    order_bound: int = DEFAULT_ORDER_BOUND
    verbose: bool = False


def split_generators(text: str) -> list[str]:
    """Split on commas that are not inside parentheses."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [g.strip() for g in out if g.strip()]


def parse_group(spec: str, order_bound: int = DEFAULT_ORDER_BOUND) -> FiniteGroup:
    spec = spec.strip()
    if spec in PRESETS:
        return preset(spec, order_bound)
    m = re.fullmatch(r"(\d+)\s*:(.*)", spec, re.S)
    if not m:
        raise ParseError(
            f"unknown group {spec!r}: use a preset ({', '.join(PRESETS)}) "
            "or DEGREE:GEN,GEN with cycle notation")
    try:
        return group_from_generators(int(m.group(1)), split_generators(m.group(2)),
                                     order_bound=order_bound)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def subgroup_generators(G: FiniteGroup, H: Subgroup) -> list[int]:
    gens: list[int] = []
    span = {G.identity_index}
    for a in H.members:
        if a not in span:
            gens.append(a)
            span = G.closure(gens).member_set
    return gens


def display(x: BurnsideElement) -> str:
    s = format_vector(x)
    if x.ring.rank == 2:
        s += f"  ({format_rho(x)})"
    return s


def emit(out: TextIO, obj: dict) -> None:
    out.write(json.dumps(obj, ensure_ascii=False) + "\n")


# -- subcommands ----------------------------------------------------------

def cmd_group_info(args, cfg: RunConfig, out: TextIO) -> int:
    G = parse_group(args.group, cfg.order_bound)
    R = burnside_ring(G)
    classes = []
    for i, c in enumerate(R.classes):
        gens = subgroup_generators(G, c.representative)
        classes.append({
            "index": i, "order": c.order, "size": c.size,
            "normalizer_index": c.normalizer_order // c.order,
            "generators": [format_cycles(G.elements[g]) for g in gens]})
    marks = [list(r) for r in R.table.m]
    if cfg.format == "structured":
        emit(out, {"type": "group-info", "group": args.group, "order": G.order,
                   "degree": G.degree, "classes": classes, "marks": marks})
        return 0
    out.write(f"group {args.group}  order {G.order}  degree {G.degree}\n")
    out.write(f"subgroup classes ({len(classes)}, canonical order):\n")
    for c in classes:
        gens = ", ".join(c["generators"]) or "()"
        out.write(f"  {c['index']:>3}  order {c['order']:>3}  conjugates {c['size']:>3}"
                  f"  |N/H| {c['normalizer_index']:>3}  generated by {gens}\n")
    out.write("table of marks (row i = G/H_i, column j = fixed points of K_j):\n")
    width = max(len(str(v)) for r in marks for v in r)
    for r in marks:
        out.write("  " + " ".join(f"{v:>{width}}" for v in r) + "\n")
    return 0


def _elements(args, G: FiniteGroup) -> list[BurnsideElement]:
    if not args.elt:
        raise ParseError("at least one --elt is required")
    R = burnside_ring(G)
    return [R.parse(t) for t in args.elt]


def cmd_marks(args, cfg: RunConfig, out: TextIO) -> int:
    G = parse_group(args.group, cfg.order_bound)
    for x in _elements(args, G):
        if cfg.format == "structured":
            emit(out, {"type": "marks", "group": args.group,
                       "element": list(x.coeffs), "marks": list(x.marks())})
        else:
            out.write(f"{display(x)}  marks {list(x.marks())}\n")
    return 0


def cmd_mul(args, cfg: RunConfig, out: TextIO) -> int:
    G = parse_group(args.group, cfg.order_bound)
    xs = _elements(args, G)
    p = xs[0]
    for x in xs[1:]:
        p = p * x
    if cfg.format == "structured":
        emit(out, {"type": "product", "group": args.group,
                   "factors": [list(x.coeffs) for x in xs],
                   "product": list(p.coeffs), "marks": list(p.marks())})
    else:
        out.write(f"{display(p)}  marks {list(p.marks())}\n")
    return 0


def cmd_norm(args, cfg: RunConfig, out: TextIO) -> int:
    G = parse_group(args.group, cfg.order_bound)
    ncls = len(G.subgroup_classes)
    if not 0 <= args.cls < ncls:
        raise ParseError(f"class index {args.cls} out of range 0..{ncls - 1}")
    ctx = SubgroupContext.for_class(G, args.cls)
    RH = burnside_ring(ctx.subgroup_as_group)
    if args.elt is None or len(args.elt) != 1:
        raise ParseError("norm takes exactly one --elt")
    x = RH.parse(args.elt[0])
    y = norm(ctx, x)
    if cfg.format == "structured":
        emit(out, {"type": "norm", "group": args.group, "class": args.cls,
                   "element": list(x.coeffs), "norm": list(y.coeffs),
                   "marks": list(y.marks())})
    else:
        out.write(f"N_H^G {format_vector(x)} = {display(y)}  marks {list(y.marks())}\n")
    return 0


def _problem_line(spec: str, problem: LocalizationProblem) -> dict:
    return {"type": "problem", "group": spec,
            "generators": [list(s.coeffs) for s in problem.generators],
            "max_power": problem.max_power, "max_word": problem.max_word}


def _witness_line(spec: str, w) -> dict:
    return {"type": "witness", "group": spec, "class": w.subgroup_class,
            "generator": w.generator_index, "norm": list(w.normed.coeffs),
            "product_exponents": list(w.product_exponents),
            "cofactor": list(w.cofactor.coeffs)}


def _emit_verdict(spec: str, problem: LocalizationProblem, verdict, out: TextIO) -> None:
    emit(out, _problem_line(spec, problem))
    for w in getattr(verdict, "witnesses", ()):
        emit(out, _witness_line(spec, w))
    if isinstance(verdict, Unsafe):
        emit(out, {"type": "obstruction", "group": spec,
                   "class": verdict.subgroup_class,
                   "generator": verdict.generator_index,
                   "norm": list(verdict.normed.coeffs),
                   "coordinate": verdict.coordinate})
    elif isinstance(verdict, Unknown):
        for i, j in verdict.pending:
            emit(out, {"type": "pending", "group": spec, "class": i,
                       "generator": j, "bound": verdict.bound})
    emit(out, {"type": "verdict", "group": spec, "status": verdict.status})


def _text_verdict(verdict, out: TextIO) -> None:
    if isinstance(verdict, Unsafe):
        out.write(f"verdict: Unsafe  (class {verdict.subgroup_class}, generator "
                  f"{verdict.generator_index}: norm {display(verdict.normed)} has "
                  f"mark 0 at class {verdict.coordinate} where every generator "
                  "is nonzero)\n")
    elif isinstance(verdict, Unknown):
        pend = ", ".join(f"(class {i}, generator {j})" for i, j in verdict.pending)
        out.write(f"verdict: Unknown  (no divisor found up to degree "
                  f"{verdict.bound} for {pend})\n")
    else:
        out.write("verdict: Safe\n")


def cmd_check_invert(args, cfg: RunConfig, out: TextIO) -> int:
    G = parse_group(args.group, cfg.order_bound)
    if args.n is None or args.n < 2:
        raise ParseError("--n must be an integer >= 2")
    verdict, rows = invert_integer_report(G, args.n, cfg.max_power)
    problem = LocalizationProblem(G, (burnside_ring(G).integer(args.n),),
                                  max_power=cfg.max_power, max_word=cfg.max_word)
    if cfg.format == "structured":
        _emit_verdict(args.group, problem, verdict, out)
    else:
        out.write(f"group {args.group}  inverting n = {args.n}  "
                  f"(max power {cfg.max_power})\n")
        out.write("class  order    k  cofactor\n")
        classes = G.subgroup_classes
        for r in rows:
            k = "-" if r.k is None else str(r.k)
            cof = "-" if r.cofactor is None else display(r.cofactor)
            out.write(f"{r.subgroup_class:>5}  {classes[r.subgroup_class].order:>5}"
                      f"  {k:>3}  {cof}\n")
        _text_verdict(verdict, out)
    return EXIT_FOR[verdict.status]


def cmd_check_set(args, cfg: RunConfig, out: TextIO) -> int:
    G = parse_group(args.group, cfg.order_bound)
    problem = LocalizationProblem(G, tuple(_elements(args, G)),
                                  max_power=cfg.max_power, max_word=cfg.max_word)
    verdict = check_criterion(problem)
    if cfg.format == "structured":
        _emit_verdict(args.group, problem, verdict, out)
    else:
        out.write(f"group {args.group}  S = {{"
                  + ", ".join(format_vector(s) for s in problem.generators) + "}\n")
        for w in getattr(verdict, "witnesses", ()):
            out.write(f"  class {w.subgroup_class:>2}  generator {w.generator_index}:"
                      f"  {display(w.normed)} divides S^{list(w.product_exponents)}"
                      f"  cofactor {display(w.cofactor)}\n")
        _text_verdict(verdict, out)
    return EXIT_FOR[verdict.status]


def cmd_closure(args, cfg: RunConfig, out: TextIO) -> int:
    G = parse_group(args.group, cfg.order_bound)
    problem = LocalizationProblem(G, tuple(_elements(args, G)))
    elems = closure_enumerate(problem, args.depth, cap=args.cap)
    for x in elems:
        if cfg.format == "structured":
            emit(out, {"type": "element", "group": args.group,
                       "element": list(x.coeffs)})
        else:
            out.write(display(x) + "\n")
    return 0


def verify_certificate(lines: list[str]) -> tuple[bool, str]:
    """Re-check a structured check-invert/check-set output.

    Uses only Burnside-ring arithmetic: parsing the group, multiplying
    elements, reading marks.
    """
    records = [json.loads(s) for s in lines if s.strip()]
    probs = [r for r in records if r.get("type") == "problem"]
    verdicts = [r for r in records if r.get("type") == "verdict"]
    if len(probs) != 1 or len(verdicts) != 1:
        return False, "certificate needs exactly one problem and one verdict line"
    prob, verdict = probs[0], verdicts[0]
    G = parse_group(prob["group"])
    R = burnside_ring(G)
    gens = [R.element(v) for v in prob["generators"]]
    status = verdict["status"]
    if status == "Safe":
        seen = set()
        for r in records:
            if r.get("type") != "witness":
                continue
            d, x = R.element(r["norm"]), R.element(r["cofactor"])
            exps = r["product_exponents"]
            if len(exps) != len(gens) or min(exps) < 0:
                return False, f"bad exponent vector {exps}"
            p = R.one
            for s, e in zip(gens, exps):
                p = p * s ** e
            if d * x != p:
                return False, (f"class {r['class']}, generator {r['generator']}: "
                               "norm * cofactor != product")
            seen.add((r["class"], r["generator"]))
        expected = {(i, j) for i in range(R.rank) for j in range(len(gens))}
        if seen != expected:
            return False, f"witnesses missing for {sorted(expected - seen)}"
        return True, f"Safe: {len(seen)} witnesses verified"
    if status == "Unsafe":
        obs = [r for r in records if r.get("type") == "obstruction"]
        if len(obs) != 1:
            return False, "Unsafe certificate needs one obstruction line"
        d, k = R.element(obs[0]["norm"]), obs[0]["coordinate"]
        if d.marks()[k] != 0 or any(s.marks()[k] == 0 for s in gens):
            return False, "obstruction coordinate does not separate"
        return True, f"Unsafe: obstruction at class {k} verified"
    return False, f"nothing to verify for status {status}"


def cmd_verify(args, cfg: RunConfig, out: TextIO) -> int:
    if args.cert in (None, "-"):
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.cert, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    try:
        ok, msg = verify_certificate(lines)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        ok, msg = False, f"malformed certificate: {exc}"
    if cfg.format == "structured":
        emit(out, {"type": "verify", "ok": ok, "message": msg})
    else:
        out.write(("OK " if ok else "FAILED ") + msg + "\n")
    return 0 if ok else EXIT_ERROR


# -- argument parsing -----------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--order-bound", type=int, default=DEFAULT_ORDER_BOUND)
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="eqloc", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help, group=True):
        sp = sub.add_parser(name, parents=[common], help=help)
        if group:
            sp.add_argument("--group", required=True,
                            help="preset name or DEGREE:GEN,GEN in cycle notation")
        sp.set_defaults(func=func)
        return sp

    add("group-info", cmd_group_info, "subgroup classes and table of marks")
    add("marks", cmd_marks, "marks of elements").add_argument(
        "--elt", action="append")
    add("mul", cmd_mul, "product of elements").add_argument("--elt", action="append")
    sp = add("norm", cmd_norm, "norm from a subgroup class to G")
    sp.add_argument("--class", dest="cls", type=int, required=True)
    sp.add_argument("--elt", action="append")
    for name, func, help in (("check-invert", cmd_check_invert, "check inverting an integer n"),
                             ("check-set", cmd_check_set, "check inverting a set S")):
        sp = add(name, func, help)
        if name == "check-invert":
            sp.add_argument("--n", type=int, required=True)
        else:
            sp.add_argument("--elt", action="append")
        sp.add_argument("--kmax", type=int, default=DEFAULT_MAX_POWER,
                        help="largest power searched when S has one element")
        sp.add_argument("--max-word", type=int, default=DEFAULT_MAX_WORD,
                        help="largest product length searched otherwise")
    sp = add("closure", cmd_closure, "enumerate the multiplicative closure")
    sp.add_argument("--elt", action="append")
    sp.add_argument("--depth", type=int, default=1)
    sp.add_argument("--cap", type=int, default=10**5)
    sp = add("verify", cmd_verify, "re-check a structured certificate", group=False)
    sp.add_argument("cert", nargs="?", default="-")
    return p


def main(argv=None, out: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    cfg = RunConfig(format=args.format,
                    max_power=getattr(args, "kmax", DEFAULT_MAX_POWER),
                    max_word=getattr(args, "max_word", DEFAULT_MAX_WORD),
                    order_bound=args.order_bound, verbose=args.verbose)
    if cfg.max_power < 1 or cfg.max_word < 1:
        print("eqloc: error: search bounds must be positive", file=sys.stderr)
        return EXIT_ERROR
    start = time.perf_counter()
    try:
        status = args.func(args, cfg, out)
    except (EqlocError, KeyError) as exc:
        print(f"eqloc: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if cfg.verbose:
        print(f"eqloc: {args.command} finished in "
              f"{time.perf_counter() - start:.3f}s", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
