"""Command-line entry point: ``wreathfoulkes <subcommand> [flags]``.

Exit codes: 0 success (for ``verify``: no FAIL entries), 1 when ``verify``
reports a FAIL, 2 for usage errors, 3 when a computation exceeds ``--budget``.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import chartable as ct
from . import coinvariant as cv
from . import foulkes as fk
from . import tensor as tn
from . import verify as vf
from . import wreath as wr
from .combinatorics import BoundaryConvention, StandardTableau, multipartitions
from .exact import BudgetExceeded, UniPoly, cyclotomic_to_json, format_rational

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- output -----------------------------------------------------------------------------------

def _cyc(z) -> list[str]:
    return cyclotomic_to_json(z)


def _poly(p: UniPoly) -> list[list[str]]:
    return [_cyc(c) for c in p.coeffs]


def _class_function(f: ct.ClassFunction) -> dict:
    return {str(mu): _cyc(f(mu)) for mu in multipartitions(f.r, f.n)}


def _csv_text(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _flat(z) -> str:
    # a cyclotomic in one CSV cell: coefficients joined by ';'
    return ";".join(_cyc(z))


class Output:
    def __init__(self, payload, csv_rows: list | None = None):
        self.payload = payload
        self.csv_rows = csv_rows

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            if self.csv_rows is None:
                raise UsageError("this subcommand has no CSV form; use --format json")
            return _csv_text(self.csv_rows)
        return json.dumps(self.payload, indent=2) + "\n"


# -- subcommands --------------------------------------------------------------------------------

def _rn(args, r: int = 2, n: int = 3) -> tuple[int, int]:
    rr = args.r if args.r is not None else r
    nn = args.n if args.n is not None else n
    if rr < 1 or nn < 0:
        raise UsageError("need --r >= 1 and --n >= 0")
    return rr, nn


def _check_size(r: int, n: int, budget: int | None, what: str):
    if budget is not None and wr.group_order(r, n) > budget:
        raise BudgetExceeded(f"{what}: |W({r},{n})| = {wr.group_order(r, n)} exceeds budget {budget}")


def cmd_eulerian(args) -> Output:
    r, n = _rn(args, 2, 2)
    row = wr.eulerian_row(r, n)
    if args.brute_force:
        _check_size(r, n, args.budget, "eulerian --brute-force")
        row = wr.eulerian_bruteforce(r, n)
    return Output({"r": r, "n": n, "eulerian": row}, [row])


def cmd_foulkes_table(args) -> Output:
    r, n = _rn(args)
    classes = multipartitions(r, n)
    phis = [phi.to_class_function() for phi in fk.foulkes_all(r, n)]
    payload = {"r": r, "n": n, "classes": [str(mu) for mu in classes],
               "phi": {str(k): [_cyc(phi(mu)) for mu in classes] for k, phi in enumerate(phis)}}
    rows = [["k"] + [str(mu) for mu in classes]]
    rows += [[k] + [_flat(phi(mu)) for mu in classes] for k, phi in enumerate(phis)]
    return Output(payload, rows)


def cmd_char_table(args) -> Output:
    r, n = _rn(args)
    table = ct.irreducible_table(r, n, args.labeling)
    classes = table.classes
    payload = {"r": r, "n": n, "labeling": args.labeling, "classes": [str(mu) for mu in classes],
               "class_sizes": [wr.class_size(mu) for mu in classes],
               "rows": {str(lam): [_cyc(chi(mu)) for mu in classes] for lam, chi in table.rows.items()}}
    rows = [["lambda"] + [str(mu) for mu in classes], ["class_size"] + [wr.class_size(mu) for mu in classes]]
    rows += [[str(lam)] + [_flat(chi(mu)) for mu in classes] for lam, chi in table.rows.items()]
    return Output(payload, rows)


def _character(args, r: int, n: int) -> ct.ClassFunction:
    kind, k = args.character, args.k
    if kind == "block":
        return fk.chi_block(r, n, Fraction(args.q if args.q is not None else k)).to_class_function()
    if kind == "foulkes":
        if not 0 <= k <= n:
            raise UsageError("foulkes needs 0 <= --k <= --n")
        return fk.foulkes(r, n, k).to_class_function()
    if kind == "signed-foulkes":
        conv = BoundaryConvention(args.boundary)
        return fk.signed_foulkes_combinatorial(r, n, k, conv, args.labeling)
    if kind == "tensor":
        return tn.tensor_character(r, n, k, tn.ALL_EVEN)
    if kind == "signed-tensor":
        return tn.tensor_character(r, n, k, args.parity)
    raise UsageError(f"unknown character {kind!r}")


def cmd_decompose(args) -> Output:
    r, n = _rn(args)
    f = _character(args, r, n)
    coeffs = ct.decompose(f, args.labeling)
    payload = {"r": r, "n": n, "character": args.character, "k": args.k, "labeling": args.labeling,
               "multiplicities": {str(lam): _cyc(c) for lam, c in coeffs.items()}}
    rows = [["lambda", "multiplicity"]] + [[str(lam), _flat(c)] for lam, c in coeffs.items()]
    return Output(payload, rows)


def _word(args, r: int) -> wr.ColoredPermutation:
    if not args.w:
        raise UsageError("--w is required, e.g. --w \"2^1 1^0\"")
    try:
        return wr.ColoredPermutation.parse(args.w, r)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_rsk(args) -> Output:
    if args.inverse:
        if not (args.S and args.T):
            raise UsageError("--inverse needs --S and --T as tableau JSON")
        S = StandardTableau.from_json(json.loads(args.S))
        T = StandardTableau.from_json(json.loads(args.T))
        w = wr.rsk_inverse(S, T)
        return Output({"w": str(w), "r": w.r, "n": w.n}, [[str(w)]])
    r = args.r if args.r is not None else 2
    w = _word(args, r)
    if args.n is not None and args.n != w.n:
        raise UsageError(f"--n {args.n} does not match the word length {w.n}")
    S, T = wr.rsk(w)
    payload = {"r": r, "n": w.n, "w": str(w), "shape": str(S.shape), "S": S.to_json(), "T": T.to_json(),
               "descents": sorted(wr.descent_set(w))}
    return Output(payload, [["w", "shape", "S", "T"], [str(w), str(S.shape), str(S), str(T)]])


def cmd_tensor_trace(args) -> Output:
    r, n = _rn(args)
    parity = args.parity if args.signed else tn.ALL_EVEN
    if args.naive:
        dim = (r * args.k + 1) ** n
        budget = args.budget if args.budget is not None else tn.DEFAULT_BUDGET
        if dim > budget:
            raise BudgetExceeded(f"(rk+1)^n = {dim} exceeds budget {budget}")
    traces = {}
    for mu in multipartitions(r, n):
        w = wr.class_representative(mu)
        t = tn.naive_trace(w, args.k, parity, args.budget or tn.DEFAULT_BUDGET) if args.naive \
            else tn.trace(w, args.k, parity)
        traces[str(mu)] = _cyc(t)
    payload = {"r": r, "n": n, "k": args.k, "parity": list(tn.parity_vector(r, parity)), "traces": traces}
    rows = [["class", "trace"]] + [[mu, ";".join(v)] for mu, v in traces.items()]
    return Output(payload, rows)


def _variant(args) -> cv.FlagVariant:
    return cv.FlagVariant(args.variant)


def cmd_coinvariant(args) -> Output:
    r, n = _rn(args, 2, 2)
    budget = args.budget if args.budget is not None else cv.DEFAULT_BUDGET
    variant = _variant(args)
    if args.action == "basis":
        basis = cv.descent_basis(r, n, variant, budget)
        report = cv.descent_basis_check(r, n, variant, budget)
        payload = {"r": r, "n": n, "variant": variant.value, "report": report,
                   "monomials": [{"w": str(g), "f": list(cv.flag_statistics(g, variant).f), "exponents": list(m)}
                                 for g, m in zip(basis.group, basis.monomials)]}
        rows = [["w", "f", "exponents"]] + [[str(g), " ".join(map(str, cv.flag_statistics(g, variant).f)),
                                              " ".join(map(str, m))] for g, m in zip(basis.group, basis.monomials)]
        return Output(payload, rows)
    if args.action == "trace":
        w = _word(args, r)
        if w.n != n and args.n is not None:
            raise UsageError(f"--n {n} does not match the word length {w.n}")
        _check_size(w.r, w.n, budget, "coinvariant trace")
        P = cv.graded_trace(w, variant, budget)
        Q = cv.tableau_side_trace(w, variant, args.labeling)
        payload = {"r": w.r, "n": w.n, "w": str(w), "variant": variant.value,
                   "P": _poly(P), "Q": _poly(Q), "equal": P == Q}
        return Output(payload)
    rep = cv.filtration_characters(r, n, variant, args.statistic, budget)
    payload = {"r": r, "n": n, "variant": variant.value, "statistic": args.statistic,
               "levels": rep["levels"], "invariant": rep["invariant"], "grouping": rep["grouping"],
               "characters": {str(t): _class_function(rep["characters"][t]) for t in rep["levels"]}}
    return Output(payload)


def cmd_ewens(args) -> Output:
    r, n = _rn(args)
    q = Fraction(args.q if args.q is not None else "1")
    payload = {"r": r, "n": n, "q": format_rational(q),
               "normalizer": format_rational(wr.ewens_normalizer(r, n, q)),
               "closed_form": format_rational(wr.ewens_closed_form(r, n, q)),
               "printed_normalizer": format_rational(wr.ewens_printed_normalizer(r, n, q))}
    if args.w:
        w = _word(args, r)
        payload["w"] = str(w)
        payload["probability"] = format_rational(wr.ewens_probability(w, q))
    rows = [list(payload.keys()), list(payload.values())]
    return Output(payload, rows)


def cmd_verify(args) -> Output:
    r, n = _rn(args, 3, 4)
    budget = args.budget if args.budget is not None else cv.DEFAULT_BUDGET
    suites = args.suite or ["all"]
    try:
        report = vf.run(r, n, suites, seed=args.seed, budget=budget)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rows = [["suite", "identity", "locus", "domain", "status", "witness"]]
    rows += [[e.suite, e.identity, e.locus, e.domain, e.status,
              json.dumps(e.witness, sort_keys=True) if e.witness else ""] for e in report.entries]
    out = Output(report.to_json(), rows)
    out.failed = bool(report.failures)
    return out


# -- parser -------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int, help="number of colors")
    common.add_argument("--n", type=int, help="rank")
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--out", help="write output to this path instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized sampling")
    common.add_argument("--budget", type=int, default=None, help="cap on enumeration size")
    common.add_argument("--labeling", choices=ct.LABELINGS, default="direct")

    parser = argparse.ArgumentParser(prog="wreathfoulkes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eulerian", parents=[common], help="colored Eulerian numbers")
    p.add_argument("--brute-force", action="store_true", help="count descents over the whole group")
    p.set_defaults(func=cmd_eulerian, default_format="csv")

    p = sub.add_parser("foulkes-table", parents=[common], help="Foulkes character values by class")
    p.set_defaults(func=cmd_foulkes_table)

    p = sub.add_parser("char-table", parents=[common], help="irreducible character table")
    p.set_defaults(func=cmd_char_table)

    p = sub.add_parser("decompose", parents=[common], help="multiplicities of irreducibles in a character")
    p.add_argument("--character", default="foulkes",
                   choices=("foulkes", "signed-foulkes", "block", "tensor", "signed-tensor"))
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--q", help="rational parameter for --character block (overrides --k)")
    p.add_argument("--parity", default=tn.ALL_ODD, choices=(tn.ALL_ODD, tn.SUPER, tn.ALL_EVEN))
    p.add_argument("--boundary", default=BoundaryConvention.COMPLEMENT.value,
                   choices=[c.value for c in BoundaryConvention])
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("rsk", parents=[common], help="colored RSK and its inverse")
    p.add_argument("--w", help='one-line word such as "3^0 2^0 1^0 4^2 6^2 5^1"')
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--S", help="insertion tableau JSON for --inverse")
    p.add_argument("--T", help="recording tableau JSON for --inverse")
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("tensor-trace", parents=[common], help="traces on tensor powers, per class")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--signed", action="store_true")
    p.add_argument("--parity", default=tn.ALL_ODD, choices=(tn.ALL_ODD, tn.SUPER, tn.ALL_EVEN))
    p.add_argument("--naive", action="store_true", help="enumerate basis tensors instead of the cycle formula")
    p.set_defaults(func=cmd_tensor_trace)

    p = sub.add_parser("coinvariant", parents=[common], help="descent basis, graded traces, filtration")
    p.add_argument("action", choices=("basis", "trace", "filtration"))
    p.add_argument("--variant", default=cv.FlagVariant.INTERIOR_COLOR.value,
                   choices=[v.value for v in cv.FlagVariant])
    p.add_argument("--w", help="element for the trace action")
    p.add_argument("--statistic", default="des", choices=("des", "f1"))
    p.set_defaults(func=cmd_coinvariant)

    p = sub.add_parser("ewens", parents=[common], help="Ewens-type normalizers and probabilities")
    p.add_argument("--q", help="rational parameter, default 1")
    p.add_argument("--w", help="element whose probability to report")
    p.set_defaults(func=cmd_ewens)

    p = sub.add_parser("verify", parents=[common], help="run the identity suites")
    p.add_argument("--suite", action="append", choices=vf.SUITES + ("all",),
                   help="suite to run (repeatable; default all)")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    fmt = args.format or getattr(args, "default_format", "json")
    try:
        out = args.func(args)
        text = out.render(fmt)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=stderr)
        return EXIT_BUDGET
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_FAIL if getattr(out, "failed", False) else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
