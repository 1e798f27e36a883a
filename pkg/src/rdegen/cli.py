"""``rdegen`` command line.

Exit codes: 0 healthy, 1 usage or parameter error, 2 falsification (the full
witness goes to stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import survey as sv
from .combinatorics import enumerate_subsets, interval as make_interval, parse_subset, richardson_pairs
from .errors import CapabilityError, RdegenError
from .ideal_core import (
    classify_richardson,
    is_monomial_free,
    kernel_deg2_classes,
    quadratic_generators,
    restrict_generators,
)
from .matching_field import weight_matrix, weight_vector
from .oracle import verify_theorem_main
from .tableaux_smt import enumerate_ssyt, gamma_ell

EXIT_OK, EXIT_USAGE, EXIT_FALSIFIED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common() -> argparse.ArgumentParser:
    # SUPPRESS keeps a flag given before the subcommand from being reset after it
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "csv", "text"), default=argparse.SUPPRESS,
                   help="output format (default json)")
    p.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes (default 1)")
    p.add_argument("--deg", type=int, default=argparse.SUPPRESS, help="oracle degree bound (default 3)")
    p.add_argument("--allow-deg4", action="store_true", default=argparse.SUPPRESS,
                   help="permit degree 4 on intervals with at most 10 variables")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="rdegen", parents=[common], description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def kn(p, ell=True):
        p.add_argument("k", type=int)
        p.add_argument("n", type=int)
        if ell:
            p.add_argument("ell", type=int)

    p = sub.add_parser("weights", parents=[common], help="weight matrix M_ell and induced Plucker weights")
    kn(p)

    p = sub.add_parser("classify", parents=[common], help="closed-form monomial-free classifier")
    kn(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--all", action="store_true", help="every pair v <= w")
    g.add_argument("--v")
    p.add_argument("--w")
    p.add_argument("--cross-check", action="store_true", help="compare with the generator scan")
    p.add_argument("--keep-going", action="store_true", help="do not stop at the first mismatch")

    p = sub.add_parser("generators", parents=[common], help="quadratic binomial generators")
    kn(p)
    p.add_argument("--v")
    p.add_argument("--w")

    p = sub.add_parser("ssyt", parents=[common], help="semi-standard tableaux with columns in [v, w]")
    kn(p, ell=False)
    p.add_argument("--v", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--gamma", type=int, metavar="ELL", help="also show Gamma_ELL images (d = 2 only)")

    p = sub.add_parser("verify", parents=[common], help="oracle comparison of the three ideals")
    kn(p)
    p.add_argument("--v", required=True)
    p.add_argument("--w", required=True)

    p = sub.add_parser("survey", parents=[common], help="sweep all v <= w and block parameters")
    kn(p, ell=False)
    p.add_argument("--ell", help="block parameters, e.g. '0-3' or '0,2' (default 0..n; '' for none)")
    p.add_argument("--verify", action="store_true", help="run the oracle on every tuple")
    p.add_argument("--keep-going", action="store_true", help="emit every record even after a falsification")
    p.add_argument("--timings", metavar="PATH", help="write per-record runtime_ms as JSON lines")
    return parser


def _opts(ns):
    return (
        getattr(ns, "format", "json"),
        getattr(ns, "jobs", 1),
        getattr(ns, "deg", 3),
        getattr(ns, "allow_deg4", False),
    )


def _pair(ns):
    if ns.v is None or ns.w is None:
        raise UsageError("both --v and --w are required")
    return parse_subset(ns.v, ns.n, ns.k), parse_subset(ns.w, ns.n, ns.k)


def _dump(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=False) + "\n")


def _csv_cell(x):
    if isinstance(x, (dict, list)):
        return json.dumps(x, separators=(",", ":"))
    if x is None:
        return ""
    return x


def _csv_rows(header, rows, out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_csv_cell(r[h]) for h in header])


# -- subcommands ----------------------------------------------------------------

def cmd_weights(ns, out, err) -> int:
    fmt = _opts(ns)[0]
    M = weight_matrix(ns.k, ns.n, ns.ell)
    wv = weight_vector(ns.k, ns.n, ns.ell)
    rows = [{"subset": str(J), "w": x} for J, x in wv.ordered()]
    if fmt == "json":
        _dump({"k": ns.k, "n": ns.n, "ell": ns.ell, "matrix": [list(r) for r in M.entries], "weights": rows}, out)
    elif fmt == "csv":
        _csv_rows(("subset", "w"), rows, out)
    else:
        out.write(f"M_{ns.ell} for Gr({ns.k},{ns.n}):\n")
        for r in M.entries:
            out.write("  " + " ".join(f"{x:3d}" for x in r) + "\n")
        for J, x in wv.ordered():
            out.write(f"{J.label():>14}  {x}\n")
    return EXIT_OK


def cmd_classify(ns, out, err) -> int:
    fmt = _opts(ns)[0]
    k, n, ell = ns.k, ns.n, ns.ell
    if ns.all:
        if ns.w is not None:
            raise UsageError("--w makes no sense with --all")
        pairs = list(richardson_pairs(k, n))
    else:
        pairs = [_pair(ns)]
    recs = []
    status = EXIT_OK
    for v, w in pairs:
        cl = classify_richardson(v, w, k, n, ell)
        mf = is_monomial_free(k, n, ell, v, w)
        rec = {"v": str(v), "w": str(w), "ell": ell, "classifier": cl,
               "witness": mf.witness.label() if mf.witness else None}
        if ns.cross_check:
            rec["class_test"] = mf.free
        recs.append(rec)
        if ns.cross_check and cl != mf.free:
            status = EXIT_FALSIFIED
            err.write(
                f"falsified: k={k} n={n} ell={ell} v={v} w={w}: classifier={cl} "
                f"class_test={mf.free} witness={rec['witness']}\n"
            )
            if not ns.keep_going:
                break
    if fmt == "json":
        for r in recs:
            _dump(r, out)
    elif fmt == "csv":
        header = ["v", "w", "ell", "classifier", "witness"] + (["class_test"] if ns.cross_check else [])
        _csv_rows(header, recs, out)
    else:
        for r in recs:
            extra = f" class_test={r['class_test']}" if ns.cross_check else ""
            out.write(f"v={r['v']} w={r['w']} ell={ell} classifier={r['classifier']}{extra}"
                      f" witness={r['witness'] or '-'}\n")
    return status


def cmd_generators(ns, out, err) -> int:
    fmt = _opts(ns)[0]
    k, n, ell = ns.k, ns.n, ns.ell
    gens = quadratic_generators(k, n, ell)
    if ns.v is None and ns.w is None:
        subs = enumerate_subsets(k, n)
        iv = make_interval(subs[0], subs[-1])
    else:
        iv = make_interval(*_pair(ns))
    rg = restrict_generators(gens, kernel_deg2_classes(k, n, ell), iv)
    binoms = [{"plus": b.plus.label(), "minus": b.minus.label()} for b in rg.binomials]
    monos = [m.label() for m in rg.monomials]
    if fmt == "json":
        _dump({"k": k, "n": n, "ell": ell, "v": str(iv.v), "w": str(iv.w),
               "binomials": binoms, "monomials": monos}, out)
    elif fmt == "csv":
        rows = [{"kind": "binomial", "plus": b["plus"], "minus": b["minus"]} for b in binoms]
        rows += [{"kind": "monomial", "plus": m, "minus": ""} for m in monos]
        _csv_rows(("kind", "plus", "minus"), rows, out)
    else:
        for b in rg.binomials:
            out.write(b.label() + "\n")
        for m in rg.monomials:
            out.write(m.label() + "\n")
    return EXIT_OK


def cmd_ssyt(ns, out, err) -> int:
    fmt = _opts(ns)[0]
    v, w = _pair(ns)
    tabs = enumerate_ssyt(v, w, ns.d)
    gam = None
    if ns.gamma is not None:
        if ns.d != 2:
            raise UsageError("--gamma needs --d 2")
        gam = [gamma_ell(ns.gamma, T, ns.n).text() for T in tabs]
    if fmt == "json":
        obj = {"v": str(v), "w": str(w), "d": ns.d, "count": len(tabs), "tableaux": [T.text() for T in tabs]}
        if gam is not None:
            obj["gamma"] = gam
        _dump(obj, out)
    elif fmt == "csv":
        rows = [{"tableau": T.text(), "gamma": gam[i] if gam else ""} for i, T in enumerate(tabs)]
        _csv_rows(("tableau", "gamma") if gam else ("tableau",), rows, out)
    else:
        for i, T in enumerate(tabs):
            out.write(T.text() + (f"  ->  {gam[i]}" if gam else "") + "\n")
        out.write(f"{len(tabs)} tableaux\n")
    return EXIT_OK


def cmd_verify(ns, out, err) -> int:
    fmt, _, deg, allow4 = _opts(ns)
    v, w = _pair(ns)
    rep = verify_theorem_main(v, w, ns.ell, deg, allow_deg4=allow4)
    obj = rep.to_json()
    if fmt == "json":
        _dump(obj, out)
    elif fmt == "csv":
        rows = [{"degree": d, **dims, "equal": rep.degrees[int(d)].equal} for d, dims in obj["dims"].items()]
        _csv_rows(("degree", "gens", "kernel", "initial", "equal"), rows, out)
    else:
        for d, dims in obj["dims"].items():
            out.write(f"d={d}: gens={dims['gens']} kernel={dims['kernel']} initial={dims['initial']}"
                      f" equal={rep.degrees[int(d)].equal}\n")
        out.write(f"equal={rep.equal} quad_gen={rep.quad_gen} monomial_free={rep.monomial_free}\n")
    if rep.monomial_free and (not rep.equal or rep.quad_gen is False):
        err.write(f"falsified: {json.dumps(obj)}\n")
        return EXIT_FALSIFIED
    return EXIT_OK


def cmd_survey(ns, out, err) -> int:
    fmt, jobs, deg, allow4 = _opts(ns)
    ells = sv.parse_ell_range(ns.ell, ns.n)
    summary = sv.SurveySummary()
    timings = []
    status = EXIT_OK
    writer = None
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(sv.FIELDS)
    for rec in sv.iter_survey(ns.k, ns.n, ells, deg, ns.verify, jobs, allow_deg4=allow4):
        summary.add(rec)
        timings.append(rec.timing())
        row = rec.data()
        if fmt == "json":
            out.write(json.dumps(row) + "\n")
        elif fmt == "csv":
            writer.writerow([_csv_cell(row[f]) for f in sv.FIELDS])
        else:
            out.write(" ".join(f"{f}={_csv_cell(row[f])}" for f in sv.FIELDS) + "\n")
        if rec.falsified:
            status = EXIT_FALSIFIED
            err.write(f"falsified: {rec.describe()}\n")
            if not ns.keep_going:
                break
    if ns.timings:
        with open(ns.timings, "w") as fh:
            for t in timings:
                fh.write(json.dumps(t) + "\n")
    err.write("summary: " + json.dumps(summary.as_dict()) + "\n")
    return status


COMMANDS = {
    "weights": cmd_weights,
    "classify": cmd_classify,
    "generators": cmd_generators,
    "ssyt": cmd_ssyt,
    "verify": cmd_verify,
    "survey": cmd_survey,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        ns = build_parser().parse_args(argv)
        return COMMANDS[ns.command](ns, out, err)
    except UsageError as e:
        err.write(f"{e}\n")
        return EXIT_USAGE
    except CapabilityError as e:
        err.write(f"capability: {e}\n")
        return EXIT_USAGE
    except (RdegenError, ValueError) as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
