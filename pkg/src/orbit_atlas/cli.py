"""orbit-atlas command line.

n is always the ambient dimension: ``--family B --n 5`` means so(5).
Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .exact_algebra import DomainError, InternalInvariantError, QSqrt2, VerificationError
from .group_model import build_context
from .order_graphs import all_korbits, build_graph, export, korbit_count_formula
from .orbit_engine import SAMPLES, get_engine
from .pil_spil import count_orbits, enumerate_pil, enumerate_spil
from .standard_flags import enumerate_standard, korbit_symbolic
from .verify import SUITES, run_suites


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _size(family: str, n: int) -> int:
    if family == "A":
        if n < 1:
            raise DomainError("type A needs n >= 1")
        return n
    if family == "D":
        if n < 4 or n % 2:
            raise DomainError("family D needs an even n >= 4")
        return n // 2
    if n < 3 or n % 2 == 0:
        raise DomainError("family B needs an odd n >= 3")
    return n // 2


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="orbit-atlas", description="B_{n-1}-orbits on flag varieties of gl(n), so(n)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fam(sp):
        sp.add_argument("--family", required=True, choices=["A", "B", "D"])
        sp.add_argument("--n", required=True, type=int, help="ambient dimension")

    c = sub.add_parser("count", help="number of orbits")
    fam(c)
    c.add_argument("--per-korbit", action="store_true")
    c.add_argument("--method", default="formula",
                   choices=["formula", "enumerate", "recursion", "egf"])

    e = sub.add_parser("enumerate", help="list PILs, SPILs or standard flags")
    fam(e)
    e.add_argument("--what", default="flags", choices=["pils", "spils", "flags"])
    e.add_argument("--format", default="json", choices=["json", "text"])

    g = sub.add_parser("graph", help="weak or standard order graph")
    fam(g)
    g.add_argument("--order", default="standard", choices=["weak", "standard"])
    g.add_argument("--format", default="dot", choices=["dot", "json"])
    g.add_argument("--samples", type=int, default=8)
    g.add_argument("--output")

    k = sub.add_parser("canonicalize", help="standard form of a matrix flag")
    fam(k)
    k.add_argument("--flag-file", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all", choices=("all",) + SUITES)
    v.add_argument("--max-n", type=int, default=5)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=8)
    return p


def _samples(k: int):
    if not 4 <= k <= len(SAMPLES):
        raise DomainError(f"--samples must be between 4 and {len(SAMPLES)}")
    return SAMPLES[:k]


def _count(args, out) -> int:
    size = _size(args.family, args.n)
    total = count_orbits(args.family, size, args.method)
    if not args.per_korbit:
        print(total, file=out)
        return 0
    if args.method == "enumerate":
        got = {}
        for F in enumerate_standard(args.family, size):
            q = korbit_symbolic(F)
            got[q] = got.get(q, 0) + 1
    for q in all_korbits(args.family, size):
        c = got.get(q, 0) if args.method == "enumerate" else korbit_count_formula(args.family, size, q)
        print(f"{q}\t{c}", file=out)
    print(f"total\t{total}", file=out)
    return 0


def _enumerate(args, out) -> int:
    size = _size(args.family, args.n)
    if args.what == "pils":
        if args.family != "A":
            raise DomainError("PILs belong to family A")
        items = enumerate_pil(range(1, size + 1))
    elif args.what == "spils":
        if args.family == "A":
            raise DomainError("SPILs belong to families B and D")
        items = enumerate_spil(size, args.family == "B")
    else:
        items = enumerate_standard(args.family, size)
    if args.format == "json":
        print(json.dumps([x.to_json() for x in items], sort_keys=True), file=out)
    else:
        for x in items:
            print(x.ascii() if args.what == "flags" else str(x), file=out)
    return 0


def _graph(args, out) -> int:
    _size(args.family, args.n)
    eng = get_engine(args.family, args.n, _samples(args.samples))
    text = export(build_graph(eng, args.order), args.format, args.order)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def _canonicalize(args, out) -> int:
    _size(args.family, args.n)
    try:
        with open(args.flag_file) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise DomainError(f"cannot read flag file: {e}") from None
    if data.get("family", args.family) != args.family or data.get("n", args.n) != args.n:
        raise DomainError("flag file does not match --family/--n")
    cols = [tuple(QSqrt2.from_json(x) for x in col) for col in data["columns"]]
    ctx = build_context(args.family, args.n)
    if any(len(c) != ctx.n for c in cols) or len(cols) != ctx.flag_length:
        raise DomainError(f"expected {ctx.flag_length} columns of length {ctx.n}")
    eng = get_engine(args.family, args.n)
    F = eng.canonicalize(cols)
    Q = eng.orbits[F]
    print(json.dumps({"flag": F.ascii(), "standard": F.to_json(), "dim": Q.dim,
                      "korbit": str(Q.korbit)}, sort_keys=True), file=out)
    return 0


def _verify(args, out) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    _samples(args.samples)
    failed = 0
    for name, ok, detail in run_suites(names, args.max_n, args.seed, args.samples):
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name}" + (f"  [{detail}]" if detail else ""), file=out)
    print(f"{'FAILED' if failed else 'OK'}: {failed} failing checks", file=out)
    return 1 if failed else 0


def run(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = make_parser().parse_args(argv)
        handler = {"count": _count, "enumerate": _enumerate, "graph": _graph,
                   "canonicalize": _canonicalize, "verify": _verify}[args.command]
        return handler(args, out)
    except UsageError as e:
        print(f"orbit-atlas: error: {e}", file=sys.stderr)
        return 2
    except DomainError as e:
        print(f"orbit-atlas: error: {e}", file=sys.stderr)
        return 2
    except (VerificationError, InternalInvariantError) as e:
        print(f"orbit-atlas: verification failed: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
