"""
Command-line interface.

    schubsupp expand --perm 1432
    schubsupp expand --comp 2,1 --format json
    schubsupp verify thm12 --grid 4
    schubsupp verify thm11 --n 7 --workers 4 --checkpoint thm11.state
    schubsupp tables alphabeta --n 6
    schubsupp tables cd --m 5
    schubsupp conjectures --n 6

Exit codes: 0 clean, 1 a theorem violation was found, 2 usage error,
3 a resource cap was hit.  Conjecture findings never change the exit code.

Every command accepts ``--format tsv|json``.  JSON output carries
``"schema_version"``; output contains no timings, so identical inputs give
identical bytes regardless of ``--workers``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import bounds
from .diagram import rothe, skyline
from .permcore import MAX_N, Composition, Permutation
from .poly import SchubertCache, key_polynomial
from .weylchar import ResourceCapExceeded, theta_D

SCHEMA_VERSION = 1

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

# beyond these sizes a sweep needs --long
_SHORT_N = {"perm": 7, "cd": 6}

SCOPES = ("thm11", "thm12", "thm14", "keyres", "witness", "macdonald",
          "prop21", "patterns")


class UsageError(Exception):
    pass


def _emit(obj: dict, fmt: str, tsv: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps({"schema_version": SCHEMA_VERSION, **obj},
                             sort_keys=True) + "\n")
    else:
        out.write(tsv)


def _exps(e) -> str:
    return ",".join(map(str, e))


# ---------------------------------------------------------------------------
# expand
# ---------------------------------------------------------------------------

def cmd_expand(args, out) -> int:
    try:
        if args.perm is not None:
            subject = Permutation.parse(args.perm)
            f = SchubertCache().get(subject)
            theta = theta_D(rothe(subject))
            kind = "permutation"
        else:
            subject = Composition.parse(args.comp)
            f = key_polynomial(subject)
            theta = theta_D(skyline(subject, max(len(subject), max(subject.parts))))
            kind = "composition"
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    nu = f.specialize_ones()
    terms = f.sorted_terms()
    lines = [f"# {kind}\t{subject}", f"# terms\t{len(terms)}",
             f"# nu\t{nu}", f"# theta\t{theta}", "exponents\tcoefficient"]
    lines += [f"{_exps(e)}\t{c}" for e, c in terms]
    _emit({"command": "expand", kind: str(subject), "nu": nu, "theta": theta,
           "polynomial": f.to_dict()}, args.format, "\n".join(lines) + "\n", out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _progress(enabled: bool):
    if not enabled:
        return None

    def report(done: int, total: int) -> None:
        print(f"{done}/{total}", file=sys.stderr, flush=True)
    return report


def _need_long(n: int, limit: int, args) -> None:
    if n > limit and not args.long:
        raise UsageError(f"n={n} is a long-running sweep; pass --long")


def _run_scope(args) -> list[bounds.SweepResult]:
    s = args.scope
    prog = _progress(args.progress)
    if s in ("thm11", "macdonald", "prop21", "patterns"):
        default = {"thm11": 7, "macdonald": 6, "prop21": 6, "patterns": 6}[s]
        n = args.n or default
        if not 1 <= n <= MAX_N:
            raise UsageError(f"--n must be in 1..{MAX_N}")
        if not args.samples:
            _need_long(n, _SHORT_N["perm"], args)
    if s == "thm11":
        return [bounds.verify_thm11(n, args.workers, args.checkpoint, prog)]
    if s == "macdonald":
        return [bounds.verify_macdonald(n, args.workers)]
    if s == "prop21":
        res = [bounds.verify_prop21(n, args.workers, args.samples, args.seed)]
        if args.count:
            res.append(bounds.verify_prop21_keys(args.count, seed=args.seed))
        return res
    if s == "patterns":
        return [bounds.verify_pattern_witnesses(n)]
    if s in ("thm12", "witness"):
        grid = args.grid or 4
        if not 1 <= grid <= MAX_N:
            raise UsageError(f"--grid must be in 1..{MAX_N}")
        if not args.samples and grid > 5:
            raise UsageError("exhaustive diagram sweeps stop at grid 5; pass --samples")
        fn = bounds.verify_thm12 if s == "thm12" else bounds.verify_witness
        return [fn(grid, args.samples, args.seed)]
    if s == "keyres":
        return [bounds.verify_keyres(args.count or 1000, seed=args.seed)]
    if s == "thm14":
        return [bounds.verify_thm14(args.count or 500, seed=args.seed)]
    raise UsageError(f"unknown scope {s!r}")  # pragma: no cover


def cmd_verify(args, out) -> int:
    results = _run_scope(args)
    lines = []
    for r in results:
        d = r.to_dict()
        lines.append(f"scope\t{r.scope}")
        lines.append(f"checked\t{r.checked}")
        lines.append(f"violations\t{len(r.violations)}")
        for k in sorted(set(d) - {"scope", "checked", "violations", "ok"}):
            lines.append(f"{k}\t{d[k]}")
        lines += ["violation\t" + json.dumps(v, sort_keys=True) for v in r.violations]
    ok = all(r.ok for r in results)
    lines.append(f"status\t{'ok' if ok else 'VIOLATION'}")
    _emit({"command": "verify", "ok": ok, "results": [r.to_dict() for r in results]},
          args.format, "\n".join(lines) + "\n", out)
    return EXIT_OK if ok else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

def cmd_tables(args, out) -> int:
    if args.which == "alphabeta":
        n = args.n or 7
        if not 1 <= n <= MAX_N:
            raise UsageError(f"--n must be in 1..{MAX_N}")
        _need_long(n, _SHORT_N["perm"], args)
        rows = []
        for m in range(1, n + 1):
            ck = f"{args.checkpoint}.{m}" if args.checkpoint else None
            rows.append(bounds.extremal_search(m, args.workers, ck, _progress(args.progress)))
        lines = ["n\talpha_n\tw\tbeta_n\tw"]
        lines += [f"{r.n}\t{r.alpha}\t{', '.join(r.alpha_set)}\t{r.beta}\t{', '.join(r.beta_set)}"
                  for r in rows]
        _emit({"command": "tables", "table": "alphabeta",
               "rows": [r.to_dict() for r in rows]},
              args.format, "\n".join(lines) + "\n", out)
        return EXIT_OK
    m = args.m or 5
    if not 1 <= m <= MAX_N:
        raise UsageError(f"--m must be in 1..{MAX_N}")
    _need_long(m, _SHORT_N["cd"], args)
    table = bounds.coefficient_tables(m)
    rows = table.nonzero()
    _emit({"command": "tables", "table": "cd", "m": m,
           "rows": [{"u": u, "c": c, "d": d} for u, c, d in rows]},
          args.format, table.to_tsv(), out)
    return EXIT_OK


def cmd_conjectures(args, out) -> int:
    n = args.n or 6
    if not 1 <= n <= MAX_N:
        raise UsageError(f"--n must be in 1..{MAX_N}")
    _need_long(n, _SHORT_N["cd"], args)
    rep = bounds.conjecture_sweep(n, args.workers)
    d = rep.to_dict()
    lines = [f"n\t{n}"]
    for key in ("non_layered_beta_attainers", "negative_d", "negative_c",
                "d_exceeds_c", "d_zero_c_positive"):
        vals = d[key]
        lines.append(f"{key}\t{len(vals)}")
        lines += [f"  \t{json.dumps(v)}" for v in vals]
    _emit({"command": "conjectures", **d}, args.format, "\n".join(lines) + "\n", out)
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("tsv", "json"), default="tsv")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--long", action="store_true",
                        help="allow sweeps beyond the default size limits")
    common.add_argument("--checkpoint", help="resumable state file for long sweeps")
    common.add_argument("--progress", action="store_true", help="chunk progress on stderr")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="schubsupp", description=__doc__.split("\n\n")[0].strip())
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("expand", parents=[common], help="Schubert or key polynomial")
    g = e.add_mutually_exclusive_group(required=True)
    g.add_argument("--perm", help="one-line notation, e.g. 1432 or 10,1,2,...")
    g.add_argument("--comp", help="weak composition, e.g. 2,1 or 0,2,1")

    v = sub.add_parser("verify", parents=[common], help="exhaustive / sampled checks")
    v.add_argument("scope", choices=SCOPES)
    v.add_argument("--n", type=int)
    v.add_argument("--grid", type=int)
    v.add_argument("--samples", type=int, default=0)
    v.add_argument("--count", type=int, default=0)
    v.add_argument("--seed", type=int, default=0)

    t = sub.add_parser("tables", parents=[common], help="alpha/beta or c/d tables")
    t.add_argument("which", choices=("alphabeta", "cd"))
    t.add_argument("--n", type=int)
    t.add_argument("--m", type=int)

    c = sub.add_parser("conjectures", parents=[common], help="conjecture evidence")
    c.add_argument("--n", type=int)
    return p


_COMMANDS = {"expand": cmd_expand, "verify": cmd_verify,
             "tables": cmd_tables, "conjectures": cmd_conjectures}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.workers < 1:
        print("error: --workers must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
