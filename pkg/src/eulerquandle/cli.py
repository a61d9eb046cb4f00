"""Command-line front end.

Exit status: 0 success, 1 falsified claim or failed self-check, 2 usage or
domain error, 3 a guard or budget refused the work.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys

from . import alexander as alx
from . import connectivity as conn
from . import cycles
from . import numtheory as nt
from . import selftest
from .errors import ConsistencyError, DomainError, ResourceError
from .quandle import TableQuandle, validate_axioms

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
DEFAULT_GUARD = 10**6
DEFAULT_BUDGET = 10**5
BATCH_COLUMNS = ["n", "p", "k", "modulus", "holds", "method"]
# wider moduli are written as the expression n^(p^k)-1
BATCH_MODULUS_BITS = 4096


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def parse_int_set(text: str) -> list[int]:
    """``"2..10"``, ``"3,5"``, ``"1..3,7"`` or ``""`` (empty)."""
    out = set()
    for part in filter(None, (s.strip() for s in text.split(","))):
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.update(range(int(lo), int(hi) + 1))
        else:
            out.add(int(part))
    return sorted(out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="text")
    common.add_argument("--guard", type=_positive, default=DEFAULT_GUARD,
                        help="largest carrier the command may enumerate")

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--n", type=int)
    family.add_argument("--p", type=int)
    family.add_argument("--k", type=int)

    parser = argparse.ArgumentParser(prog="eulerquandle", description=__doc__.splitlines()[0])
    visible = "axioms,profile,proper-solutions,verify-prime-power,verify-euler,orbit,certificate,batch"
    sub = parser.add_subparsers(dest="command", required=True, metavar="{" + visible + "}")

    p = sub.add_parser("axioms", parents=[common, family], help="check the quandle axioms")
    p.add_argument("--table", help="JSON file {\"size\": N, \"table\": [[...]]}, or - for stdin")
    p.add_argument("--max-witnesses", type=_positive, default=16)

    p = sub.add_parser("profile", parents=[common, family], help="cycle pattern of the right translations")
    p.add_argument("--mode", choices=["formula", "enumerate"], default="formula")
    p.add_argument("--b", type=int, help="enumerate a single translation R_b")

    p = sub.add_parser("proper-solutions", parents=[common, family], help="proper solution counts per level")
    p.add_argument("--mode", choices=["formula", "enumerate"], default="formula")
    p.add_argument("--level", type=int)
    p.add_argument("--b", type=int, default=0)

    sub.add_parser("verify-prime-power", parents=[common, family], help="p^k | n^(p^k - p^(k-1)) - 1")

    p = sub.add_parser("verify-euler", parents=[common], help="m | n^phi(m) - 1, both routes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("orbit", parents=[common, family], help="orbit of an element under right multiplication")
    p.add_argument("--x", type=int, default=0, help="seed element")
    p.add_argument("--table")

    sub.add_parser("certificate", parents=[common, family], help="disconnectedness certificate")

    p = sub.add_parser("batch", help="CSV sweep of verify-prime-power over a parameter grid")
    p.add_argument("--n", required=True, help="set such as 2..10 or 1,3,5")
    p.add_argument("--p", required=True)
    p.add_argument("--k", required=True)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="maximum number of rows")

    p = sub.add_parser("selftest")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=_positive, default=200)
    return parser


def _family(args) -> alx.EulerFamilyQuandle:
    missing = [f"--{name}" for name in "npk" if getattr(args, name) is None]
    if missing:
        raise DomainError(f"missing {' '.join(missing)}")
    return alx.euler_family(args.n, args.p, args.k)


def _load_table(path):
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON in {path}: {exc}") from None
    return TableQuandle.from_json(obj, validate=False)


def _emit(obj: dict, fmt: str, text: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    elif fmt == "csv":
        flat = {k: (json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v)
                for k, v in obj.items()}
        w = csv.DictWriter(out, fieldnames=list(flat), lineterminator="\n")
        w.writeheader()
        w.writerow(flat)
    else:
        out.write(text.rstrip("\n") + "\n")


def cmd_axioms(args, out):
    if args.table:
        q = _load_table(args.table)
        desc = {"size": q.size}
    else:
        fam = _family(args)
        q = fam.as_quandle(args.guard)
        desc = fam.to_json()
    report = validate_axioms(q, max_witnesses=args.max_witnesses)
    obj = {"quandle": desc, "ok": report.ok, **report.to_dict()}
    lines = [f"idempotency          {'ok' if report.idempotency_ok else 'FAILS'}",
             f"right invertibility  {'ok' if report.right_invertibility_ok else 'FAILS'}",
             f"self-distributivity  {'ok' if report.self_distributivity_ok else 'FAILS'}"]
    lines += [f"  {v.axiom}: {v.elements}" for v in report.violations]
    _emit(obj, args.format, "\n".join(lines), out)
    return EXIT_OK if report.ok else EXIT_FALSIFIED


def cmd_profile(args, out):
    q = _family(args)
    if args.mode == "formula":
        pat = alx.profile_formula(q)
        obj = {"quandle": q.to_json(), "mode": "formula", "singleton": True,
               "pattern": pat.to_grouped_json()}
        _emit(obj, args.format, pat.to_text(), out)
        return EXIT_OK
    lq = q.as_quandle(args.guard)
    if args.b is not None:
        pat = cycles.pattern(lq.right_translation(args.b))
        obj = {"quandle": q.to_json(), "mode": "enumerate", "b": str(args.b),
               "pattern": pat.to_grouped_json()}
        _emit(obj, args.format, pat.to_text(), out)
        return EXIT_OK
    prof = cycles.profile(lq, guard=args.guard)
    obj = {"quandle": q.to_json(), "mode": "enumerate", **prof.to_grouped_json()}
    if prof.singleton:
        obj["pattern"] = prof.distinct[0].to_grouped_json()
    text = "\n".join(f"{p.to_text()}  (x{mult})" for p, mult in prof.patterns)
    _emit(obj, args.format, text, out)
    agrees = prof.singleton and prof.distinct[0] == alx.profile_formula(q)
    return EXIT_OK if agrees else EXIT_FALSIFIED


def cmd_proper(args, out):
    q = _family(args)
    levels = range(q.k + 1) if args.level is None else [args.level]
    counts = [alx.proper_count_formula(q, i) for i in levels]
    if args.mode == "enumerate":
        every = alx.proper_counts_enumerate(q, args.b, guard=args.guard)
        counts = [every[i] for i in levels]
    obj = {"quandle": q.to_json(), "counts": [c.to_dict() for c in counts]}
    if args.mode == "enumerate":
        obj["b"] = str(args.b)
    text = "\n".join(f"level {c.level} (cycle length {q.p ** c.level}): {c.count}" for c in counts)
    _emit(obj, args.format, text, out)
    if args.mode == "enumerate":
        formula = [alx.proper_count_formula(q, c.level).count for c in counts]
        if formula != [c.count for c in counts]:
            return EXIT_FALSIFIED
    return EXIT_OK


def _report_out(report, args, out):
    text = f"{report.claim}: {'holds' if report.holds else 'FAILS'}"
    if report.quotient is not None:
        text += f" (quotient {report.quotient})"
    _emit(report.to_dict(), args.format, text, out)
    return EXIT_OK if report.holds else EXIT_FALSIFIED


def cmd_verify_prime_power(args, out):
    missing = [f"--{name}" for name in "npk" if getattr(args, name) is None]
    if missing:
        raise DomainError(f"missing {' '.join(missing)}")
    return _report_out(nt.verify_prime_power(args.n, args.p, args.k), args, out)


def cmd_verify_euler(args, out):
    report = nt.verify_euler(args.n, args.m)
    if args.m <= args.guard:
        oracle = nt.classical_units_oracle(args.n, args.m, guard=args.guard)
        if oracle.holds != report.holds:
            raise ConsistencyError("quandle route and units oracle disagree")
    return _report_out(report, args, out)


def cmd_orbit(args, out):
    if args.table:
        q = _load_table(args.table)
        desc = {"size": q.size}
    else:
        q = _family(args)
        desc = q.to_json()
    orb = conn.orbit(q, args.x, guard=args.guard)
    obj = {"quandle": desc, "seed": str(orb.seed), "size": len(orb), "members": orb.to_json()}
    _emit(obj, args.format, " ".join(obj["members"]), out)
    return EXIT_OK


def cmd_certificate(args, out):
    q = _family(args)
    cert = conn.zero_orbit_certificate(q, guard=args.guard)
    if cert.connected is None:
        verdict = "undecided"
    else:
        verdict = "connected" if cert.connected else "not connected"
    text = f"{verdict}; witness {cert.witness}: {cert.reason}"
    _emit(cert.to_json(), args.format, text, out)
    return EXIT_OK if cert.decided else EXIT_RESOURCE


def _batch_modulus(n, p, k):
    if p**k * max(n.bit_length(), 1) <= BATCH_MODULUS_BITS:
        return str(n ** (p**k) - 1)
    return f"{n}^({p}^{k})-1"


def cmd_batch(args, out):
    ns, ps, ks = parse_int_set(args.n), parse_int_set(args.p), parse_int_set(args.k)
    for p in ps:
        if not nt.is_prime(p):
            raise DomainError(f"{p} is not prime")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(BATCH_COLUMNS)
    rows = 0
    for n in ns:
        for p in ps:
            for k in ks:
                if nt.gcd(n, p) != 1:
                    continue
                if rows >= args.budget:
                    out.flush()
                    raise ResourceError(f"row budget {args.budget} exhausted")
                report = nt.verify_prime_power(n, p, k)
                writer.writerow([n, p, k, _batch_modulus(n, p, k),
                                 "true" if report.holds else "false", report.method])
                rows += 1
                if not report.holds:
                    out.flush()
                    return EXIT_FALSIFIED
    return EXIT_OK


def cmd_selftest(args, out):
    ok = selftest.run(args.seed, args.samples, out=lambda line: out.write(line + "\n"))
    return EXIT_OK if ok else EXIT_FALSIFIED


COMMANDS = {
    "axioms": cmd_axioms,
    "profile": cmd_profile,
    "proper-solutions": cmd_proper,
    "verify-prime-power": cmd_verify_prime_power,
    "verify-euler": cmd_verify_euler,
    "orbit": cmd_orbit,
    "certificate": cmd_certificate,
    "batch": cmd_batch,
    "selftest": cmd_selftest,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except ResourceError as exc:
        err.write(f"eulerquandle: {exc}\n")
        return EXIT_RESOURCE
    except DomainError as exc:
        err.write(f"eulerquandle: {exc}\n")
        return EXIT_USAGE
    except ConsistencyError as exc:
        err.write(f"eulerquandle: internal check failed: {exc}\n")
        return EXIT_FALSIFIED
    except OSError as exc:
        err.write(f"eulerquandle: {exc}\n")
        return EXIT_USAGE


def run_captured(argv) -> tuple[int, str, str]:
    """Run the CLI in-process and return ``(status, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    status = run(argv, out, err)
    return status, out.getvalue(), err.getvalue()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
