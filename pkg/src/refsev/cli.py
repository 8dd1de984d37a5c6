"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 cross-check mismatch, 3 guard hit.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .combinatorics import divergence_profiles, parse_mult_list
from .errors import DomainError, GuardExceeded
from .polygon import PRESET_FAMILIES, parse_polygon, preset
from .ring import LaurentY
from .severi import (genfun_verify, grading_cap, irreducible_degrees, refined_relative,
                     refined_severi)

EXIT_OK, EXIT_DOMAIN, EXIT_MISMATCH, EXIT_GUARD = 0, 1, 2, 3


class Mismatch(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors are invalid input, not a cross-check mismatch
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def _specialisations(poly: LaurentY) -> dict:
    out = {}
    for key, point in (("y1", 1), ("ym1", -1)):
        g = poly.evaluate(point)
        out[key] = str(g.real) if not g.imag else str(g)
    return out


def _payload(poly: LaurentY, which: str | None) -> dict:
    vals = _specialisations(poly)
    full = {"poly": poly.to_json(), **vals}
    if which is None:
        return full
    return {which: full[which]}


def _text(poly: LaurentY, which: str | None) -> str:
    vals = _specialisations(poly)
    lines = {"poly": f"N(y) = {poly}", "y1": f"y=1: {vals['y1']}", "ym1": f"y=-1: {vals['ym1']}"}
    if which:
        return lines[which]
    return "\n".join(lines.values())


def _emit(args, poly: LaurentY) -> str:
    if args.format == "json":
        return json.dumps(_payload(poly, args.eval))
    return _text(poly, args.eval)


def _partitions(args):
    return parse_mult_list(args.alpha), parse_mult_list(args.beta)


def _compute_by(method: str, p, delta: int, threads: int, alpha=None, beta=None) -> LaurentY:
    from .oracle import floor_relative, floor_severi, wick_severi
    relative = alpha is not None
    if method == "fock":
        if relative:
            return refined_relative(p, delta, alpha, beta, threads)
        return refined_severi(p, delta, threads)
    if method == "floor":
        return floor_relative(p, delta, alpha, beta) if relative else floor_severi(p, delta)
    if method == "wick":
        return wick_severi(p, delta, alpha, beta)
    raise DomainError(f"unknown method {method!r}")


def cmd_compute(args) -> str:
    p = parse_polygon(args.polygon)
    return _emit(args, _compute_by(args.method, p, args.delta, args.threads))


def cmd_relative(args) -> str:
    p = parse_polygon(args.polygon)
    alpha, beta = _partitions(args)
    return _emit(args, _compute_by(args.method, p, args.delta, args.threads, alpha, beta))


def first_difference(a: LaurentY, b: LaurentY):
    """Smallest half-exponent where the coefficients differ, with both values."""
    ta, tb = a.terms, b.terms
    for e in sorted(set(ta) | set(tb)):
        if ta.get(e, 0) != tb.get(e, 0):
            return e, ta.get(e, 0), tb.get(e, 0)
    return None


def _power(e2: int) -> str:
    return f"y^{e2 // 2}" if e2 % 2 == 0 else f"y^({e2}/2)"


def cmd_crosscheck(args) -> str:
    p = parse_polygon(args.polygon)
    relative = args.alpha is not None or args.beta is not None
    alpha, beta = _partitions(args) if relative else (None, None)
    methods = ["floor", "wick"] if args.method == "all" else [args.method]
    methods = [m for m in methods if m != "fock"]
    if not methods:
        raise DomainError("crosscheck needs a method other than fock")
    ref = _compute_by("fock", p, args.delta, args.threads, alpha, beta)
    agreed, notes = ["fock"], []
    for m in methods:
        try:
            val = _compute_by(m, p, args.delta, args.threads, alpha, beta)
        except GuardExceeded as exc:
            if args.method != "all":
                raise
            notes.append(f"{m} skipped: {exc}")
            continue
        diff = first_difference(ref, val)
        if diff:
            e, x, y = diff
            raise Mismatch(f"fock != {m}: coefficient of {_power(e)} is {x} (fock) vs {y} ({m})\n"
                           f"fock: {ref}\n{m}: {val}")
        agreed.append(m)
    report = "=".join(agreed)
    if args.format == "json":
        return json.dumps({"report": report, "agreed": agreed, "notes": notes,
                           **_payload(ref, None)})
    return "\n".join([report, f"N(y) = {ref}", *notes])


def _classes(args):
    if args.family == "sigma":
        return [(c, d) for c in range(args.max_c + 1) for d in range(args.min_d, args.max_d + 1)]
    return [(d,) for d in range(args.min_d, args.max_d + 1)]


def _family_params(args) -> dict:
    names = PRESET_FAMILIES[args.family][1] if args.family in PRESET_FAMILIES else None
    if names is None:
        raise DomainError(f"unknown polygon family {args.family!r}")
    if "m" in names and args.m is None:
        raise DomainError(f"family {args.family} needs --m")
    return {"m": args.m} if "m" in names else {}


def _class_polygon(args, cls):
    kw = _family_params(args)
    if args.family == "sigma":
        return preset("sigma", c=cls[0], d=cls[1], **kw)
    return preset(args.family, d=cls[0], **kw)


def _rows_out(args, rows: list[dict]) -> str:
    if args.format == "json":
        return "\n".join(json.dumps(r) for r in rows)
    if not rows:
        return ""
    cols = list(rows[0])
    cells = [[str(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    fmt = lambda vals: "  ".join(v.ljust(w) for v, w in zip(vals, widths)).rstrip()  # noqa: E731
    return "\n".join([fmt(cols), *(fmt(row) for row in cells)])


def cmd_table(args, out) -> int:
    _family_params(args)
    rows, status = [], EXIT_OK
    try:
        for cls in _classes(args):
            p = _class_polygon(args, cls)
            for delta in range(args.max_delta + 1):
                poly = refined_severi(p, delta, args.threads)
                vals = _specialisations(poly)
                row = {"class": ",".join(map(str, cls)), "delta": delta, "poly": str(poly),
                       "y1": vals["y1"], "ym1": vals["ym1"]}
                if args.verify:
                    from .oracle import floor_severi
                    row["floor"] = "ok" if floor_severi(p, delta) == poly else "MISMATCH"
                    if row["floor"] != "ok":
                        status = EXIT_MISMATCH
                rows.append(row)
    except GuardExceeded as exc:
        print(f"warning: table truncated: {exc}", file=sys.stderr)
        status = EXIT_GUARD
    text = _rows_out(args, rows)
    if text:
        print(text, file=out)
    return status


def cmd_irreducible(args) -> str:
    kw = _family_params(args)
    max_class = (args.max_c, args.max_d) if args.family == "sigma" else args.max_d
    table = irreducible_degrees(args.family, max_class, args.max_delta, threads=args.threads, **kw)
    rows = []
    for (cls, delta), poly in sorted(table.items()):
        if cls[-1] < args.min_d:
            continue
        vals = _specialisations(poly)
        rows.append({"class": ",".join(map(str, cls)), "delta": delta, "poly": str(poly),
                     "y1": vals["y1"], "ym1": vals["ym1"]})
    return _rows_out(args, rows)


def cmd_genfun(args) -> str:
    orders = {"q": args.q, "t": args.t}
    if args.family == "sigma":
        orders["s"] = args.s
    kw = _family_params(args)
    report = genfun_verify(args.family, orders, **kw)
    if not report.ok:
        raise Mismatch(report.summary())
    if args.format == "json":
        return json.dumps({"family": report.family, "orders": report.orders,
                           "checked": report.checked, "ok": True, "notes": report.notes})
    return "\n".join([report.summary(), *report.notes])


def cmd_polygon_info(args) -> str:
    p = parse_polygon(args.polygon)
    info = p.describe()
    info["dim"] = p.dim
    info["divergence_profiles"] = len(divergence_profiles(p.right, p.left))
    info["grading_cap"] = grading_cap(p)
    if args.format == "json":
        return json.dumps(info)
    return "\n".join(f"{k}: {v}" for k, v in info.items())


def cmd_render(args) -> str:
    from .oracle.floor import enumerate_floor_diagrams
    from .oracle.render import example_marking, render_many, _caption
    if not args.out:
        raise DomainError("render needs --out PATH")
    p = parse_polygon(args.polygon)
    items = []
    for D in enumerate_floor_diagrams(p, args.delta):
        word = None if args.unmarked else example_marking(D)
        if word is None and not args.unmarked:
            continue
        items.append((D, word, _caption(D)))
    svg = render_many(items)
    Path(args.out).write_text(svg)
    return f"wrote {len(items)} diagram(s) to {args.out}"


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="refsev",
                 description="Refined Severi degrees of h-transverse polygons.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, polygon=True, delta=True):
        if polygon:
            sp.add_argument("--polygon", required=True,
                            help='"p2:d=3", "sigma:m=1,c=0,d=2" or "dt=0;db=3;r=1^3;l=0^3"')
        if delta:
            sp.add_argument("--delta", type=int, required=True, help="cogenus")
        sp.add_argument("--format", choices=["text", "json"], default="text")
        sp.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    def family(sp):
        sp.add_argument("--family", required=True, choices=sorted(PRESET_FAMILIES))
        sp.add_argument("--m", type=int)
        sp.add_argument("--max-c", type=int, default=0, help="sigma only")
        sp.add_argument("--min-d", type=int, default=1)
        sp.add_argument("--max-d", type=int, required=True)
        sp.add_argument("--max-delta", type=int, required=True)
        sp.add_argument("--format", choices=["text", "json"], default="text")
        sp.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    sp = sub.add_parser("compute", help="refined Severi degree")
    common(sp)
    sp.add_argument("--method", choices=["fock", "floor", "wick"], default="fock")
    sp.add_argument("--eval", choices=["poly", "y1", "ym1"])

    sp = sub.add_parser("relative", help="refined relative Severi degree")
    common(sp)
    sp.add_argument("--alpha", default="", help="multiplicity list a1,a2,...")
    sp.add_argument("--beta", default="", help="multiplicity list b1,b2,...")
    sp.add_argument("--method", choices=["fock", "floor", "wick"], default="fock")
    sp.add_argument("--eval", choices=["poly", "y1", "ym1"])

    sp = sub.add_parser("crosscheck", help="compare the Fock engine with the oracles")
    common(sp)
    sp.add_argument("--method", choices=["floor", "wick", "all"], default="all")
    sp.add_argument("--alpha")
    sp.add_argument("--beta")

    sp = sub.add_parser("table", help="refined degrees over a range of classes")
    family(sp)
    sp.add_argument("--verify", action="store_true", help="add a floor-oracle column")

    sp = sub.add_parser("irreducible", help="irreducible refined degrees via the formal log")
    family(sp)

    sp = sub.add_parser("genfun-check", help="verify the generating-function identity")
    sp.add_argument("--family", required=True, choices=sorted(PRESET_FAMILIES))
    sp.add_argument("--m", type=int)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--s", type=int, default=0)
    sp.add_argument("--format", choices=["text", "json"], default="text")

    sp = sub.add_parser("polygon-info", help="describe a polygon")
    common(sp, delta=False)

    sp = sub.add_parser("render", help="SVG of floor diagrams with one marking each")
    common(sp)
    sp.add_argument("--out", help="output path")
    sp.add_argument("--unmarked", action="store_true")
    return ap


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_DOMAIN
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return EXIT_DOMAIN
    handlers = {
        "compute": cmd_compute,
        "relative": cmd_relative,
        "crosscheck": cmd_crosscheck,
        "irreducible": cmd_irreducible,
        "genfun-check": cmd_genfun,
        "polygon-info": cmd_polygon_info,
        "render": cmd_render,
    }
    try:
        if args.command == "table":
            return cmd_table(args, out)
        text = handlers[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except Mismatch as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except GuardExceeded as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    if text:
        print(text, file=out)
    return EXIT_OK


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
