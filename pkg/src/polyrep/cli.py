"""Command-line front end: certificates, gap reports, sweeps and witnesses."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .constructive import (
    ShapedRepresentation,
    represent_r1,
    represent_repeat_large,
    represent_repeat_small,
    small_domain_ok,
)
from .errors import DomainError, InvariantError, ResourceLimitError
from .gonal import RepeatShape, WeightedForm, eval_pm
from .minimality import (
    cross_check,
    default_bound,
    ell_repeat_theorem,
    gamma_witness,
)
from .oracle import empirical_min_len, find_representation, first_gap

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3

SWEEP_FIELDS = ["m", "r", "ell1", "theorem", "empirical", "bound", "witness", "status", "ms"]


class UsageError(Exception):
    pass


def _span(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected A..B") from None
    if b < a:
        raise UsageError(f"empty range {text!r}")
    return range(a, b + 1)


def _emit(rows: list[dict], fmt: str, out=None, fields: list[str] | None = None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        payload = rows[0] if len(rows) == 1 and fields is None else rows
        out.write(json.dumps(payload, indent=2) + "\n")
    elif fmt == "csv":
        fields = fields or list(rows[0])
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n", extrasaction="ignore")
        w.writeheader()
        for row in rows:
            w.writerow({k: _flat(v) for k, v in row.items()})
        out.write(buf.getvalue())
    else:
        for i, row in enumerate(rows):
            if i:
                out.write("\n")
            for k, v in row.items():
                out.write(f"{k}: {_flat(v)}\n")


def _flat(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return str(v)


# decompose


def _oracle_certificate(m: int, r: int, n: int, bound: int) -> tuple[WeightedForm, tuple[int, ...]]:
    ell1 = 0 if r == 1 else r - 1
    tv = ell_repeat_theorem(m, r, ell1)
    ell = tv.value
    if ell is None:
        found = empirical_min_len(m, r, ell1, max(bound, n), max(ell1 + 1, 64))
        if found.ell is None:
            raise UsageError(f"no universal (1^{ell1}, {r}^*) form found up to 64 slots")
        ell = found.ell
    form = RepeatShape(r, ell1, ell - ell1).form(m) if r > 1 else WeightedForm(m, (1,) * ell)
    rep = find_representation(form, n)
    if rep is None:
        raise UsageError(f"{n} is not represented by {form}")
    return form, rep.args


def _certificate(m: int, r: int, n: int, bound: int) -> dict:
    if r == 1 and m >= 10:
        rep = represent_r1(m, n)
        form, args, method, regime = rep.form, rep.args, "r=1 ladder", "proved"
    elif r >= 7 and r < m - 3:
        srep = represent_repeat_large(m, r, n)
        form, args, method, regime = srep.form, srep.args, srep.method, srep.regime
    elif 2 <= r <= 6 and small_domain_ok(m, r):
        srep = represent_repeat_small(m, r, n)
        form, args, method, regime = srep.form, srep.args, srep.method, srep.regime
    else:
        form, args = _oracle_certificate(m, r, n, bound)
        method, regime = "oracle search", "empirical"
    parts = [(a, eval_pm(m, x)) for a, x in zip(form.weights, args)]
    total = sum(a * v for a, v in parts)
    if total != n or form(args) != n:
        raise InvariantError(f"certificate for n={n} sums to {total}")
    return {
        "m": m,
        "r": r,
        "n": n,
        "form": str(form),
        "regime": regime,
        "method": method,
        "args": list(args),
        "parts": [a * v for a, v in parts if v],
        "weighted_parts": [f"{a}*{v}" if a != 1 else str(v) for a, v in parts if v],
        "check": total,
    }


def cmd_decompose(ns) -> int:
    if ns.n < 1:
        raise UsageError("--n must be positive")
    if ns.r < 1:
        raise UsageError("--r must be positive")
    cert = _certificate(ns.m, ns.r, ns.n, ns.bound)
    if ns.format == "text":
        if cert["regime"] == "empirical":
            print("EMPIRICAL: outside the proved range, found by exhaustive search")
        print(f"{cert['n']} = " + " + ".join(cert["weighted_parts"] or ["0"]))
        for k in ("m", "r", "form", "regime", "method", "args", "check"):
            print(f"{k}: {_flat(cert[k])}")
    else:
        cert["weighted_parts"] = " + ".join(cert["weighted_parts"])
        _emit([cert], ns.format)
    return EXIT_OK


def cmd_eval(ns) -> int:
    v = eval_pm(ns.m, ns.x)
    if ns.format == "text":
        print(v)
    else:
        _emit([{"m": ns.m, "x": ns.x, "value": v}], ns.format)
    return EXIT_OK


def _weights(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(w) for w in text.split(","))
    except ValueError:
        raise UsageError(f"bad weight list {text!r}") from None


def cmd_check(ns) -> int:
    form = WeightedForm(ns.m, _weights(ns.weights))
    rep = first_gap(form, ns.bound)
    row = {
        "m": ns.m,
        "weights": ",".join(map(str, form.weights)),
        "bound": ns.bound,
        "first_gap": rep.first_gap,
        "gap_count": rep.gap_count,
        "universal_to_bound": rep.universal_to_bound,
    }
    _emit([row], ns.format)
    return EXIT_OK


def _check_row(res, ms: int = 0) -> dict:
    return {
        "m": res.m,
        "r": res.r,
        "ell1": res.ell1,
        "theorem": res.theorem,
        "empirical": res.empirical,
        "bound": res.bound,
        "witness": res.first_gap,
        "status": res.status,
        "ms": ms,
    }


def cmd_min_ell(ns) -> int:
    res = cross_check(ns.m, ns.r, bound=ns.bound)
    row = _check_row(res)
    del row["ms"]
    row["expected_witness"] = res.witness
    row["witness_unrepresented"] = res.witness_unrepresented
    row["label"] = f"empirical up to {res.bound}"
    _emit([row], ns.format)
    return EXIT_FAIL if res.status == "FAIL" else EXIT_OK


def _sweep_cell(cell: tuple[int, int, int | None, bool]) -> dict:
    m, r, bound, timing = cell
    t0 = time.perf_counter()
    res = cross_check(m, r, bound=bound if bound is not None else default_bound(m))
    ms = round(1000 * (time.perf_counter() - t0)) if timing else 0
    return _check_row(res, ms)


def sweep_rows(cells: list[tuple[int, int]], bound: int | None, jobs: int, timing: bool) -> list[dict]:
    work = [(m, r, bound, timing) for m, r in sorted(cells)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_cell, work))
    else:
        rows = [_sweep_cell(c) for c in work]
    return sorted(rows, key=lambda row: (row["m"], row["r"]))


def _grid(ns, in_domain_only: bool) -> list[tuple[int, int]]:
    cells = []
    for m in _span(ns.m_range):
        if m < 3:
            raise UsageError("m must be >= 3")
        for r in _span(ns.r_range):
            if r < 1:
                raise UsageError("r must be >= 1")
            if in_domain_only and not ell_repeat_theorem(m, r, 0 if r == 1 else r - 1).domain_ok:
                continue
            cells.append((m, r))
    return cells


def cmd_sweep(ns) -> int:
    rows = sweep_rows(_grid(ns, False), ns.bound, ns.jobs, ns.timing)
    fmt = ns.format if ns.format != "text" else "csv"
    if ns.out:
        with open(ns.out, "w", encoding="utf-8", newline="") as fh:
            _emit(rows, fmt, fh, SWEEP_FIELDS)
    else:
        _emit(rows, fmt, fields=SWEEP_FIELDS)
    return EXIT_FAIL if any(row["status"] == "FAIL" for row in rows) else EXIT_OK


def cmd_tables(ns) -> int:
    rows = sweep_rows(_grid(ns, True), ns.bound, ns.jobs, False)
    if not rows:
        raise UsageError("no (m, r) in the range has a closed-form value")
    for row in rows:
        del row["ms"]
    if ns.format == "text":
        print(f"{'m':>4} {'r':>3} {'theorem':>8} {'empirical':>10} {'witness':>8}  status")
        for row in rows:
            print(
                f"{row['m']:>4} {row['r']:>3} {row['theorem']:>8} "
                f"{_flat(row['empirical']):>10} {_flat(row['witness']):>8}  {row['status']}"
            )
    else:
        _emit(rows, ns.format, fields=list(rows[0]))
    return EXIT_FAIL if any(row["status"] == "FAIL" for row in rows) else EXIT_OK


def cmd_gamma(ns) -> int:
    rep = gamma_witness(ns.m, ns.bound, ns.target)
    row = {
        "m": rep.m,
        "shape": f"1^{rep.shape.ell1} {rep.shape.r}^{rep.shape.ell2}",
        "target": rep.target,
        "represented_below": rep.represented_below,
        "target_unrepresented": rep.target_unrepresented,
        "bound": rep.bound,
        "first_gap": rep.first_gap,
        "valid": rep.valid,
    }
    _emit([row], ns.format)
    return EXIT_OK if rep.valid else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polyrep", description=__doc__)
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("eval", parents=[fmt], help="print P_m(x)")
    s.add_argument("m", type=int)
    s.add_argument("x", type=int)
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("decompose", parents=[fmt], help="certificate for n")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--bound", type=int, default=2000, help="search bound off the proved range")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("check", parents=[fmt], help="first gap of a weighted form")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--weights", required=True)
    s.add_argument("--bound", type=int, required=True)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("min-ell", parents=[fmt], help="empirical vs closed-form minimum")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--bound", type=int)
    s.set_defaults(func=cmd_min_ell)

    for name, func, r_default in (("sweep", cmd_sweep, None), ("tables", cmd_tables, "1..10")):
        s = sub.add_parser(name, parents=[fmt], help=f"{name} over an (m, r) grid")
        s.add_argument("--m-range", required=True)
        s.add_argument("--r-range", required=r_default is None, default=r_default)
        s.add_argument("--bound", type=int)
        s.add_argument("--jobs", type=int, default=1)
        if name == "sweep":
            s.add_argument("--out")
            s.add_argument("--timing", action="store_true", help="fill the ms column")
        s.set_defaults(func=func)

    s = sub.add_parser("gamma", parents=[fmt], help="lower-bound witness for gamma_m")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--bound", type=int)
    s.add_argument("--target", type=int)
    s.set_defaults(func=cmd_gamma)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return ns.func(ns)
    except InvariantError as exc:
        print(f"internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
