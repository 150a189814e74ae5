"""Command-line front end: ``charvar {compute,verify,interpolate,table,report}``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import fforacle, genus_pipelines as gp, strata_catalog as catalog
from .polyq import EPoly, InterpolationError, NotDivisible, interpolate

DEFAULT_PRIMES = (3, 5, 7, 11, 13)
SCHEMA = "charvar.report/1"


class UsageError(Exception):
    pass


def _primes(text: Optional[str]) -> list[int]:
    if not text:
        return list(DEFAULT_PRIMES)
    try:
        out = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--primes expects comma-separated integers, got {text!r}") from None
    for p in out:
        try:
            fforacle.PrimeField(p)
        except fforacle.InvalidPrime as exc:
            raise UsageError(str(exc)) from None
        if p > fforacle.DEFAULT_BOUND:
            raise UsageError(f"prime {p} exceeds the bound {fforacle.DEFAULT_BOUND}")
    return out


def _holonomy(text: Optional[str]) -> gp.Holonomy:
    if text is None:
        raise UsageError("--holonomy is required")
    try:
        return gp.Holonomy.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


class Outcome:
    """Collects rendered lines, a JSON payload and pass/fail state."""

    def __init__(self, acknowledge: bool):
        self.acknowledge = acknowledge
        self.lines: list[str] = []
        self.payload: dict = {"schema": SCHEMA}
        self.failed = False

    def line(self, text: str = "") -> None:
        self.lines.append(text)

    def check(self, ok: bool) -> None:
        if not ok:
            self.failed = True

    def discrepancies(self, items: Sequence[gp.Discrepancy]) -> None:
        for d in items:
            if not (d.known and self.acknowledge):
                self.failed = True


def _cmd_compute(args, out: Outcome) -> None:
    if args.genus is None:
        raise UsageError("--genus is required")
    h = _holonomy(args.holonomy)
    res = gp.compute(args.genus, h)
    out.payload["result"] = res.to_dict()
    out.line(f"e(M_{h.value}), genus {args.genus}:")
    out.line(f"  {res.epoly}")
    if res.intermediates:
        out.line("intermediates:")
        width = max(len(k) for k in res.intermediates)
        for k, v in res.intermediates.items():
            out.line(f"  {k:<{width}}  {v}")
    if res.fiber is not None and res.stabilizer is not None:
        out.line(f"fiber / ({res.stabilizer})")
    for d in res.discrepancies:
        out.line(f"DISCREPANCY {d.name}: computed {d.computed}; stated {d.stated}")
        out.line(f"  {d.note}")
    out.discrepancies(res.discrepancies)


def _cmd_table(args, out: Outcome) -> None:
    genera = [args.genus] if args.genus else [1, 2]
    rows = []
    for g in genera:
        stated = gp.THEOREM_GENUS1 if g == 1 else gp.THEOREM_GENUS2
        out.line(f"genus {g}")
        for h in gp.Holonomy:
            res = gp.compute(g, h)
            ok = res.epoly == stated[h]
            flag = "ok" if ok else "DISCREPANCY"
            rows.append({"genus": g, "holonomy": h.value, "stated": str(stated[h]),
                         "computed": str(res.epoly), "match": ok})
            out.line(f"  {h.cli_name:<5} stated   {stated[h]}")
            out.line(f"  {'':<5} computed {res.epoly}  [{flag}]")
            out.discrepancies(res.discrepancies)
    out.payload["table"] = rows


def _cmd_verify(args, out: Outcome) -> None:
    if not args.space:
        raise UsageError("--space is required")
    primes = _primes(args.primes)
    lambdas = [args.lam] if args.lam is not None else None
    try:
        rep = fforacle.verify_space(args.space, primes, workers=args.threads, lambdas=lambdas)
    except catalog.UnknownSpace as exc:
        raise UsageError(f"{exc}; choose from {', '.join(fforacle.SPACES)}") from None
    out.payload["verification"] = rep.to_dict()
    out.line(f"{args.space}: expected {rep.expected_poly}")
    for r in rep.rows:
        lam = f" lambda={r.lam}" if r.lam is not None else ""
        mark = "match" if r.match else "MISMATCH"
        out.line(f"  p={r.prime}{lam}: expected {r.expected}, observed {r.observed}  [{mark}]")
    for p, same in rep.lambda_independent.items():
        if not same:
            out.line(f"  p={p}: counts depend on lambda")
    if rep.interpolation is not None:
        it = rep.interpolation
        if it.coefficients is not None:
            out.line(f"  interpolation: {EPoly(it.coefficients)}  "
                     f"[{'matches' if it.matches_catalog else 'DIFFERS'}]")
        else:
            out.line(f"  interpolation failed: {it.error}")
    out.check(rep.all_match)


def _cmd_interpolate(args, out: Outcome) -> None:
    if args.points:
        pts = []
        for item in args.points.split(","):
            x, _, y = item.partition(":")
            pts.append((int(x), int(y)))
        expected = None
        label = "points"
    else:
        if not args.space:
            raise UsageError("give --space or --points")
        spec = fforacle.SPACES.get(args.space)
        if spec is None:
            raise UsageError(f"unknown space {args.space!r}")
        primes = _primes(args.primes)
        expected = spec.expected()
        pts = []
        for p in primes:
            lam = None
            if spec.holonomy is gp.Holonomy.DIAG:
                lam = args.lam if args.lam is not None else 2
            pts.append((p, fforacle.count_space(spec, p, lam, args.threads)))
        label = args.space
    degree = args.degree if args.degree is not None else len(pts) - 1
    block = {"space": label, "points": pts, "degree_bound": degree}
    try:
        fit = interpolate(pts, degree)
    except InterpolationError as exc:
        block["error"] = str(exc)
        out.line(f"{label}: interpolation failed: {exc}")
        out.check(False)
    else:
        block["coefficients"] = list(fit.coeffs)
        block["polynomial"] = str(fit)
        out.line(f"{label}: {fit}")
        if expected is not None:
            ok = fit == expected
            block["matches_catalog"] = ok
            out.line(f"  catalog: {expected}  [{'matches' if ok else 'DIFFERS'}]")
            out.check(ok)
    out.payload["interpolation"] = block


def _report_checks() -> list[tuple[str, bool, str]]:
    checks = [(c.name, c.passed, f"{c.lhs} = {c.rhs}" if c.passed else f"{c.lhs} != {c.rhs}")
              for c in catalog.consistency_report()]
    for g in (1, 2):
        lhs, rhs, ok = gp.hausel_identity(g)
        checks.append((f"hausel_identity_genus{g}", ok, f"{lhs} vs {rhs}"))
    for h in gp.Holonomy:
        m = gp.genus1_mixed_hodge(h)
        tables = m.alternatives or (m.hodge_numbers,)
        e = gp.genus1(h).epoly
        ok = all(gp.MixedHodgeData.e_from_numbers(t) == e for t in tables)
        checks.append((f"hodge_numbers_genus1_{h.value}", ok, str(e)))
    for h in (gp.Holonomy.MINUS_ID, gp.Holonomy.DIAG):
        m = gp.genus2_mixed_hodge(h)
        chi = gp.genus2(h).epoly(1)
        checks.append((f"euler_characteristic_genus2_{h.value}",
                       m.euler_characteristic == chi, f"{m.euler_characteristic} vs e(1) = {chi}"))
        checks.append((f"poincare_duality_genus2_{h.value}", bool(m.duality_holds()), ""))
    return checks


def _cmd_report(args, out: Outcome) -> None:
    try:
        checks = _report_checks()
    except (NotDivisible, InterpolationError) as exc:
        checks = [("pipeline_arithmetic", False, str(exc))]
    discrepancies = []
    for g in (1, 2):
        for h in gp.Holonomy:
            discrepancies.extend(gp.compute(g, h).discrepancies)
    discrepancies.extend(gp.genus2_Y().discrepancies)
    for name, ok, detail in checks:
        out.line(f"[{'pass' if ok else 'FAIL'}] {name}  {detail}".rstrip())
        out.check(ok)
    for d in discrepancies:
        state = "known" if d.known else "NEW"
        out.line(f"[{state} discrepancy] {d.name}: computed {d.computed}; stated {d.stated}")
    out.discrepancies(discrepancies)
    out.payload["checks"] = [{"name": n, "passed": ok, "detail": det} for n, ok, det in checks]
    out.payload["discrepancies"] = [d.to_dict() for d in discrepancies]
    if args.primes:
        rows = []
        for space in ("X0", "X1", "X2bar", "X3bar", "X4bar_lambda"):
            prs = [p for p in _primes(args.primes) if space != "X4bar_lambda" or p >= 5]
            rep = fforacle.verify_space(space, prs, workers=args.threads)
            rows.append(rep.to_dict())
            out.line(f"[{'pass' if rep.all_match else 'FAIL'}] oracle {space} at {prs}")
            out.check(rep.all_match)
        out.payload["oracle"] = rows
        adj = fforacle.adjudicate_identity([p for p in _primes(args.primes) if p <= 7])
        out.line(f"[info] irreducible commuting quadruples mod PGL2 at {list(adj.primes)}: "
                 f"{list(adj.counts)}")
        out.line(f"  component sum predicts {list(adj.component_irreducible)}, "
                 f"stated table predicts {list(adj.theorem_irreducible)}")
        out.line(f"  evidence supports: {adj.supports} ({adj.supported_value})")
        out.payload["identity_adjudication"] = adj.to_dict()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charvar",
        description="E-polynomials of SL2 character varieties and finite-field checks.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--genus", type=int, choices=(1, 2))
    common.add_argument("--holonomy", help="id, -id, j+, j- or diag")
    common.add_argument("--lambda", dest="lam", type=int, help="eigenvalue for diag holonomy")
    common.add_argument("--space", help="oracle space id, e.g. X3bar or Y")
    common.add_argument("--primes", help="comma-separated odd primes (default 3,5,7,11,13)")
    common.add_argument("--threads", type=int, default=1, help="worker processes for the sweep")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--acknowledge-known-discrepancies", action="store_true",
                        help="do not fail on discrepancies already on record")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("compute", parents=[common], help="print an E-polynomial with intermediates")
    sub.add_parser("table", parents=[common], help="stated versus computed main tables")
    sub.add_parser("verify", parents=[common], help="finite-field point counts")
    p_int = sub.add_parser("interpolate", parents=[common], help="polynomial from counts")
    p_int.add_argument("--degree", type=int)
    p_int.add_argument("--points", help="x:y pairs, comma-separated")
    sub.add_parser("report", parents=[common], help="run every internal consistency check")
    return parser


_COMMANDS = {
    "compute": _cmd_compute,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "interpolate": _cmd_interpolate,
    "report": _cmd_report,
}


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        print("charvar: --threads must be at least 1", file=stderr)
        return 2
    out = Outcome(args.acknowledge_known_discrepancies)
    try:
        _COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"charvar: {exc}", file=stderr)
        return 2
    except (fforacle.InvalidLambda, fforacle.InvalidPrime) as exc:
        print(f"charvar: {exc}", file=stderr)
        return 2
    except (NotDivisible, InterpolationError) as exc:
        print(f"charvar: failed check: {exc}", file=stderr)
        return 1
    out.payload["passed"] = not out.failed
    if args.format == "json":
        json.dump(out.payload, stdout, indent=2, ensure_ascii=False)
        stdout.write("\n")
    else:
        stdout.write("\n".join(out.lines) + "\n")
    return 1 if out.failed else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
