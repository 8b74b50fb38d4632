"""Command-line front end.

Exit codes: 0 success, 1 failed precondition or inapplicable/failed check,
2 parse or configuration error.
"""
from __future__ import annotations

import argparse
import csv
import itertools
import json
import sys
from dataclasses import asdict
from typing import List, Optional

from . import roots
from .cyclofield import FieldSpec
from .errors import DomainError, PreconditionError
from .fieldexpr import (FieldExprError, evaluate, parse_field_expr, required_order,
                        root_of_unity_label)
from .freealg import Braiding2
from .nichols import hilbert_table
from .qlaurent import identity_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SWEEP_HEADER = ["q11", "q12", "q21", "q22", "m", "mprime", "jcount", "multiplicity", "method"]


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _braiding_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("braiding")
    g.add_argument("--q11", help="field expression, e.g. 2, -1/3, zeta(6)^2")
    g.add_argument("--q12")
    g.add_argument("--q21", default="1")
    g.add_argument("--q22")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="nichols-roots",
                             description="Root multiplicities of degree m*alpha1 + 2*alpha2 "
                                         "for rank-two Nichols algebras of diagonal type.")
    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cyclotomic-order", type=int, default=None,
                        help="work in Q(zeta_N) instead of the inferred field")
    common.add_argument("--char-p", type=int, default=None, help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("jset", parents=[common], help="the J-set up to m")
    _braiding_flags(p)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("mult", parents=[common], help="multiplicity of m*alpha1 + 2*alpha2")
    _braiding_flags(p)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("rootvec", parents=[common], help="is [x1^k x2 x1^l x2] a root vector?")
    _braiding_flags(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--brute", action="store_true", help="also run the relation search")

    p = sub.add_parser("hilbert", parents=[common], help="graded dimensions of the Nichols algebra")
    _braiding_flags(p)
    p.add_argument("--amax", type=int, required=True)
    p.add_argument("--bmax", type=int, required=True)

    sub.add_parser("identities", parents=[common], help="check the q-identity suite")

    p = sub.add_parser("table1", parents=[common], help="tabulated non-root condition vs computation")
    _braiding_flags(p)
    p.add_argument("--m", type=int, required=True, choices=sorted(roots.NONROOT_CONDITIONS))

    p = sub.add_parser("verify", parents=[common], help="cross-check formula and oracles on a suite")
    p.add_argument("--suite", choices=("default",), default="default")
    p.add_argument("--mmax", type=int, default=8)

    p = sub.add_parser("sweep", parents=[common], help="CSV of multiplicities over roots of unity")
    p.add_argument("--mmax", type=int, required=True)
    p.add_argument("--output", default=None, help="CSV path (default: stdout)")
    return parser


def braiding_from_args(args) -> Braiding2:
    names = ("q11", "q12", "q21", "q22")
    nodes = []
    for name in names:
        text = getattr(args, name)
        if text is None:
            raise UsageError(f"--{name} is required")
        try:
            nodes.append(parse_field_expr(text))
        except FieldExprError as exc:
            raise UsageError(f"--{name}: {exc}") from None
    order = args.cyclotomic_order or required_order(*nodes)
    try:
        field = FieldSpec(order)
        return Braiding2(*(evaluate(n, field) for n in nodes))
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, out, payload: dict, lines: List[str]) -> None:
    if args.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def _cmd_jset(args, out) -> int:
    br = braiding_from_args(args)
    res = roots.jset(br, args.m)
    payload = {"braiding": str(br), "bound": res.bound, "j_set": res.members,
               "j_count": len(res.members), "witnesses": [asdict(w) for w in res.witnesses]}
    lines = [f"braiding {br}", f"J ∩ [0,{res.bound}] = {{{', '.join(map(str, res.members))}}}"]
    for w in res.witnesses:
        checked = ", ".join(f"{c['monomial']} != 1" for c in w.inequalities) or "no earlier members"
        lines.append(f"  j={w.j}: {w.equality}; {checked}")
    _emit(args, out, payload, lines)
    return EXIT_OK


def _cmd_mult(args, out) -> int:
    br = braiding_from_args(args)
    rep = roots.multiplicity_extended(br, args.m)
    payload = {"braiding": str(br), **rep.to_dict()}
    lines = [f"braiding {br}", f"degree {args.m}*alpha1 + 2*alpha2", f"method {rep.method}"]
    if rep.multiplicity is not None:
        lines += [f"m' = {rep.m_prime}", f"|J| = {rep.jcount}  J = {rep.j_set}",
                  f"multiplicity {rep.multiplicity}"]
    if rep.reflection:
        r = rep.reflection
        lines.append(f"reflected at k={r['k']} to degree {tuple(r['reflected_degree'])}")
    _emit(args, out, payload, lines)
    return EXIT_OK if rep.method != "inapplicable" else EXIT_FAIL


def _cmd_rootvec(args, out) -> int:
    br = braiding_from_args(args)
    formula = roots.is_root_vector_kl(br, args.k, args.l)
    payload = {"braiding": str(br), "k": args.k, "l": args.l, "formula": formula,
               "j_count": roots.jset(br, args.k + args.l).count()}
    lines = [f"braiding {br}", f"candidate (k, l) = ({args.k}, {args.l})",
             f"formula: {'root vector' if formula else 'not a root vector'}"]
    code = EXIT_OK
    if args.brute:
        brute = roots.brute_force_is_root_vector(br, args.k, args.l)
        payload["brute_force"] = brute
        payload["agree"] = brute == formula
        lines.append(f"brute force: {'root vector' if brute else 'not a root vector'}")
        if brute != formula:
            code = EXIT_FAIL
    _emit(args, out, payload, lines)
    return code


def _cmd_hilbert(args, out) -> int:
    br = braiding_from_args(args)
    table = hilbert_table(br, args.amax, args.bmax)
    payload = {"braiding": str(br),
               "dimensions": [{"degree": [a, b], "dim": d} for (a, b), d in table.items()]}
    width = max(len(str(d)) for d in table.values()) + 1
    lines = [f"braiding {br}", "b\\a " + "".join(f"{a:>{width}}" for a in range(args.amax + 1))]
    for b in range(args.bmax + 1):
        lines.append(f"{b:>3} " + "".join(f"{table[(a, b)]:>{width}}" for a in range(args.amax + 1)))
    _emit(args, out, payload, lines)
    return EXIT_OK


def _cmd_identities(args, out) -> int:
    counts = {}
    failures = []
    for name, params, ok in identity_suite():
        c = counts.setdefault(name, [0, 0])
        c[0] += 1
        c[1] += ok
        if not ok:
            failures.append({"identity": name, "params": params})
    payload = {"identities": {k: {"checked": v[0], "passed": v[1]} for k, v in counts.items()},
               "failures": failures}
    lines = [f"{k}: {v[1]}/{v[0]} passed" for k, v in counts.items()]
    lines += [f"FAILED {f['identity']} {f['params']}" for f in failures]
    _emit(args, out, payload, lines)
    return EXIT_OK if not failures else EXIT_FAIL


def _cmd_table1(args, out) -> int:
    br = braiding_from_args(args)
    cond = roots.nonroot_condition(br, args.m)
    rep = roots.multiplicity_m2(br, args.m)
    brute = roots.brute_force_multiplicity(br, args.m)
    consistent = cond == (rep.multiplicity == 0) == (brute == 0)
    payload = {"braiding": str(br), "m": args.m, "condition": roots.NONROOT_CONDITIONS[args.m],
               "condition_holds": cond, "multiplicity": rep.multiplicity,
               "brute_force_multiplicity": brute, "consistent": consistent}
    lines = [f"braiding {br}", f"condition {roots.NONROOT_CONDITIONS[args.m]}: {cond}",
             f"multiplicity (formula) {rep.multiplicity}, (brute force) {brute}",
             "consistent" if consistent else "INCONSISTENT"]
    _emit(args, out, payload, lines)
    return EXIT_OK if consistent else EXIT_FAIL


def verify_suite(mmax: int) -> List[dict]:
    """Formula vs oracles on the reference braidings; one record per braiding and degree."""
    records = []
    for label, br in roots.default_suite().items():
        hilbert = roots.hilbert_multiplicities(br, mmax)
        for m in range(mmax + 1):
            rep = roots.multiplicity_extended(br, m)
            rec = {"braiding": label, "m": m, "method": rep.method,
                   "multiplicity": rep.multiplicity, "hilbert": hilbert[m]}
            ok = rep.multiplicity == hilbert[m]
            if rep.method == "direct":
                thm = roots.verify_theorem_main(br, m)
                rec["theorem"] = thm.passed
                rec["kernel_dim"] = thm.kernel_dim
                rec["brute_force"] = roots.brute_force_multiplicity(br, m)
                ok = ok and thm.passed and rec["brute_force"] == rep.multiplicity
            rec["ok"] = ok
            records.append(rec)
    return records


def _cmd_verify(args, out) -> int:
    records = verify_suite(args.mmax)
    passed = all(r["ok"] for r in records)
    payload = {"suite": args.suite, "mmax": args.mmax, "passed": passed, "records": records}
    lines = []
    for r in records:
        extra = ""
        if "theorem" in r:
            extra = f" theorem={'pass' if r['theorem'] else 'FAIL'} ker∩U_m={r['kernel_dim']} brute={r['brute_force']}"
        lines.append(f"{'ok  ' if r['ok'] else 'FAIL'} {r['braiding']} m={r['m']} {r['method']}"
                     f" mult={r['multiplicity']} hilbert={r['hilbert']}{extra}")
    lines.append("all checks passed" if passed else "SOME CHECKS FAILED")
    _emit(args, out, payload, lines)
    return EXIT_OK if passed else EXIT_FAIL


def sweep_rows(order: int, mmax: int):
    """Yield CSV rows for every braiding with entries among +-zeta_order^j."""
    field = FieldSpec(order)
    gen = field.zeta()
    values = []
    for negative in (False, True):
        for j in range(order):
            x = gen ** j
            x = -x if negative else x
            if all(x != v for v, _ in values):
                values.append((x, root_of_unity_label(field, j, negative)))
    for entries in itertools.product(values, repeat=4):
        br = Braiding2(*(v for v, _ in entries))
        labels = [lab for _, lab in entries]
        for m in range(mmax + 1):
            rep = roots.multiplicity_extended(br, m)
            vals = [rep.m_prime, rep.jcount, rep.multiplicity]
            yield labels + [m] + ["" if v is None else v for v in vals] + [rep.method]


def _cmd_sweep(args, out) -> int:
    order = args.cyclotomic_order
    if order is None:
        raise UsageError("sweep requires --cyclotomic-order")
    try:
        FieldSpec(order)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    handle = open(args.output, "w", newline="") if args.output else out
    try:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(SWEEP_HEADER)
        inapplicable = 0
        for row in sweep_rows(order, args.mmax):
            inapplicable += row[-1] == "inapplicable"
            writer.writerow(row)
    finally:
        if args.output:
            handle.close()
    return EXIT_OK if not inapplicable else EXIT_FAIL


COMMANDS = {
    "jset": _cmd_jset, "mult": _cmd_mult, "rootvec": _cmd_rootvec, "hilbert": _cmd_hilbert,
    "identities": _cmd_identities, "table1": _cmd_table1, "verify": _cmd_verify,
    "sweep": _cmd_sweep,
}


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    """Parse ``argv``, run the subcommand and return the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.char_p is not None:
            raise UsageError("only characteristic 0 is supported; --char-p is not available")
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except PreconditionError as exc:
        err.write(f"precondition failed: {exc}\n")
        return EXIT_FAIL
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
