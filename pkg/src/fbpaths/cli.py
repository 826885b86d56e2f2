"""Command-line driver: model tables, generating functions, transforms,
mn-system solving, and the identity verification sweep.

Exit codes: 0 success / verified, 1 verification failure, 2 usage error.
All polynomial output is JSON with decimal string keys (integer exponents,
ascending) and decimal string coefficients, so runs are byte-reproducible.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from math import gcd
from multiprocessing import Pool

from .model import Model, continued_fraction, format_model_tables
from .paths import (
    Path, PostSeg, Wings, chi, chi_tilde, chi_tilde_restricted, path_from_json,
    path_to_json, striking_sequence, weight_wt, weight_wtilde,
)
from .qpoly import QPoly
from .transforms import (
    TransformError, b1, b2, b3, b_transform, bd_transform, d_transform, decompose,
)
from .characters import (
    bosonic, build_system, c_from_b, c_from_b_info, fermionic_classical,
    fermionic_modified, mn_solutions,
)

FIG_FIXTURE = {
    "p": 3,
    "pp": 8,
    "heights": [2, 3, 4, 5, 4, 5, 6, 7, 6, 5, 6, 5, 4, 3, 4],
    "boundary": {"c": 3},
    "_derivation": (
        "Heights forced by the 45-degree coordinates (0,0),(0,1),(0,2),(0,3),"
        "(1,3),(1,4),(1,5),(1,6),(2,6),... together with the striking columns "
        "(2/1,0/1,1/2,1/1,1/0,2/1,0/1): line widths 3,1,3,2,1,3,1 from start "
        "height 2, first line ascending.  Weight 24, scoring vertices at "
        "i=3,4,5,7,8,13,14."
    ),
}


def _print_poly(poly: QPoly, fmt: str) -> None:
    if fmt == "text":
        print(poly)
    else:
        print(json.dumps(poly.to_json_dict()))


def _coprime_pairs(ppmax: int):
    for pp in range(3, ppmax + 1):
        for p in range(1, pp):
            if gcd(p, pp) == 1:
                yield p, pp


# -- verification sweep --------------------------------------------------------

ALL_FORMS = ("enumerate", "bosonic", "fermionic-classical", "fermionic-modified")


def _identity_record(task) -> dict:
    p, pp, a, b, c, L, forms = task
    values = {}
    if "enumerate" in forms:
        values["enumerate"] = chi(Model(p, pp), a, b, c, L)
    if "bosonic" in forms:
        values["bosonic"] = bosonic(p, pp, a, b, c, L)
    if "fermionic-classical" in forms:
        values["fermionic-classical"] = fermionic_classical(p, pp, a, b, L)
    if "fermionic-modified" in forms:
        values["fermionic-modified"] = fermionic_modified(p, pp, a, b, L)
    names = sorted(values)
    ref_name = names[0]
    ref = values[ref_name]
    mismatch = None
    equal = True
    for name in names[1:]:
        other = values[name]
        if other != ref:
            equal = False
            exps = sorted(set(ref.terms) | set(other.terms))
            bad = next(e for e in exps if ref.terms.get(e, 0) != other.terms.get(e, 0))
            mismatch = {
                "forms": [ref_name, name],
                "quarter_exponent": bad,
                ref_name: ref.terms.get(bad, 0),
                name: other.terms.get(bad, 0),
            }
            break
    return {"p": p, "pp": pp, "a": a, "b": b, "c": c, "L": L,
            "forms": names, "equal": equal, "mismatch": mismatch}


def iter_identity_tasks(ppmax: int, lmax: int, forms):
    """Sweep tuples: all (a,b,c) for the enumeration/bosonic pair, Takahashi
    endpoints with the canonical c for the fermionic forms."""
    boson_side = [f for f in forms if f in ("enumerate", "bosonic")]
    fermi_side = [f for f in forms if f.startswith("fermionic")]
    for p, pp in _coprime_pairs(ppmax):
        tak = continued_fraction(p, pp)
        members = sorted(tak.T | tak.T_prime)
        for a in range(1, pp):
            for b in range(1, pp):
                for c in (b - 1, b + 1):
                    if not 1 <= c <= pp - 1:
                        continue
                    for L in range((a + b) % 2, lmax + 1, 2):
                        fc = fermi_side and a in members and b in members \
                            and c == c_from_b(p, pp, b)
                        use = list(boson_side) + (list(fermi_side) if fc else [])
                        if len(use) >= 2:
                            yield (p, pp, a, b, c, L, tuple(use))


def run_verify_identity(ppmax: int, lmax: int, jobs: int, forms, out) -> int:
    t0 = time.time()
    tasks = list(iter_identity_tasks(ppmax, lmax, forms))
    if jobs > 1:
        with Pool(jobs) as pool:
            records = pool.map(_identity_record, tasks, chunksize=16)
    else:
        records = [_identity_record(t) for t in tasks]
    records.sort(key=lambda r: (r["pp"], r["p"], r["a"], r["b"], r["c"], r["L"]))
    failures = 0
    for rec in records:
        if not rec["equal"]:
            failures += 1
        out.write(json.dumps(rec) + "\n")
    summary = {"records": len(records), "failures": failures,
               "wall_time_s": round(time.time() - t0, 3)}
    out.write(json.dumps({"summary": summary}) + "\n")
    return 0 if failures == 0 else 1


# -- argument parsing ------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fbpaths")
    ap.add_argument("--seed-fixtures", metavar="DIR",
                    help="write the canonical path fixtures into DIR and exit")
    sub = ap.add_subparsers(dest="cmd")

    mp = sub.add_parser("model", help="band model inspection")
    msub = mp.add_subparsers(dest="subcmd", required=True)
    mshow = msub.add_parser("show")
    mshow.add_argument("--p", type=int, required=True)
    mshow.add_argument("--pp", type=int, required=True)
    mshow.add_argument("--format", choices=["json", "text"], default="text")

    cp = sub.add_parser("chi", help="generating functions")
    csub = cp.add_subparsers(dest="subcmd", required=True)
    for name in ("enumerate", "bosonic", "fermionic"):
        c = csub.add_parser(name)
        c.add_argument("--p", type=int, required=True)
        c.add_argument("--pp", type=int, required=True)
        c.add_argument("--a", type=int, required=True)
        c.add_argument("--b", type=int, required=True)
        c.add_argument("--L", type=int, required=True)
        c.add_argument("--c", type=int, default=None)
        c.add_argument("--format", choices=["json", "text"], default="json")
        if name == "enumerate":
            c.add_argument("--e", type=int, choices=[0, 1], default=None)
            c.add_argument("--f", type=int, choices=[0, 1], default=None)
            c.add_argument("--m", type=int, default=None)
            c.add_argument("--with-heights", dest="with_heights", default=None,
                           help="comma-separated heights every path must attain")
        if name == "fermionic":
            c.add_argument("--form", choices=["classical", "modified"], default="classical")
            c.add_argument("--tprime", action="store_true",
                           help="prefer the complemented Takahashi reading (n = 0 models)")

    pp_ = sub.add_parser("path", help="weights and striking sequences")
    psub = pp_.add_subparsers(dest="subcmd", required=True)
    pw = psub.add_parser("weight")
    pw.add_argument("--variant", choices=["wt", "wtilde"], required=True)
    pw.add_argument("--input", required=True)
    ps = psub.add_parser("striking")
    ps.add_argument("--input", required=True)

    tp = sub.add_parser("transform", help="path transforms")
    tp.add_argument("kind", choices=["b1", "b2", "b3", "d", "bd", "decompose"])
    tp.add_argument("--input", required=True)
    tp.add_argument("--k", type=int, default=0)
    tp.add_argument("--lambda", dest="lam", default="",
                    help="comma-separated partition, e.g. 3,2,1")
    tp.add_argument("--direction", choices=["B", "BD"], default="B",
                    help="decomposition direction")

    mn = sub.add_parser("mn", help="the mn-system")
    mnsub = mn.add_subparsers(dest="subcmd", required=True)
    mns = mnsub.add_parser("solve")
    mns.add_argument("--p", type=int, required=True)
    mns.add_argument("--pp", type=int, required=True)
    mns.add_argument("--a", type=int, required=True)
    mns.add_argument("--b", type=int, required=True)
    mns.add_argument("--L", type=int, required=True)
    mns.add_argument("--tprime", action="store_true")

    vp = sub.add_parser("verify", help="identity sweeps")
    vsub = vp.add_subparsers(dest="subcmd", required=True)
    vi = vsub.add_parser("identity")
    vi.add_argument("--ppmax", type=int, default=8)
    vi.add_argument("--Lmax", type=int, default=12)
    vi.add_argument("--jobs", type=int, default=1)
    vi.add_argument("--forms", default=",".join(ALL_FORMS),
                    help="comma list from: " + ",".join(ALL_FORMS))
    vi.add_argument("--output", default=None, help="report file (default stdout)")
    return ap


def _load_path(fname: str) -> Path:
    with open(fname) as fh:
        return path_from_json(json.load(fh))


def _parse_lambda(text: str) -> tuple[int, ...]:
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def _cmd_chi(args) -> int:
    model = Model(args.p, args.pp)
    if args.subcmd == "enumerate":
        if args.e is not None or args.f is not None:
            if args.e is None or args.f is None:
                raise ValueError("winged enumeration needs both --e and --f")
            S = None
            if args.with_heights:
                S = {int(x) for x in args.with_heights.split(",")}
            if S:
                poly = chi_tilde_restricted(model, args.a, args.b, args.e, args.f,
                                            args.L, m=args.m, S=S)
            else:
                poly = chi_tilde(model, args.a, args.b, args.e, args.f, args.L, m=args.m)
        else:
            if args.m is not None:
                raise ValueError("--m restricts winged enumeration; give --e and --f")
            c = args.c if args.c is not None else c_from_b(args.p, args.pp, args.b)
            S = {int(x) for x in args.with_heights.split(",")} if args.with_heights else None
            poly = chi(model, args.a, args.b, c, args.L, attain=S)
    elif args.subcmd == "bosonic":
        c = args.c if args.c is not None else c_from_b(args.p, args.pp, args.b)
        poly = bosonic(args.p, args.pp, args.a, args.b, c, args.L)
    else:
        c, ambiguous = c_from_b_info(args.p, args.pp, args.b)
        if args.c is not None and args.c != c and not ambiguous:
            raise ValueError(f"the fermionic forms fix c = {c} for b = {args.b}")
        fn = fermionic_classical if args.form == "classical" else fermionic_modified
        poly = fn(args.p, args.pp, args.a, args.b, args.L, prefer_t_prime=args.tprime)
    _print_poly(poly, args.format)
    return 0


def _cmd_path(args) -> int:
    path = _load_path(args.input)
    if args.subcmd == "weight":
        w = weight_wt(path) if args.variant == "wt" else weight_wtilde(path)
        print(json.dumps({"weight": w}))
    else:
        ss = striking_sequence(path)
        print(json.dumps({"columns": [list(col) for col in ss.columns],
                          "e": ss.e, "f": ss.f, "d": ss.d}))
    return 0


def _cmd_transform(args) -> int:
    path = _load_path(args.input)
    lam = _parse_lambda(args.lam)
    trace: list = []
    if args.kind == "b1":
        out = b1(path)
    elif args.kind == "b2":
        out = b2(path, args.k)
    elif args.kind == "b3":
        out = b3(path, lam, k=args.k or None, trace=trace)
    elif args.kind == "d":
        out = d_transform(path)
    elif args.kind == "bd":
        out = bd_transform(path, args.k, lam, trace=trace)
    elif args.kind == "decompose":
        base, k, lam_found = decompose(path, args.direction)
        print(json.dumps({"path": path_to_json(base), "k": k,
                          "lambda": list(lam_found)}))
        return 0
    else:  # pragma: no cover
        raise AssertionError(args.kind)
    print(json.dumps({"path": path_to_json(out), "trace": trace}))
    return 0


def _cmd_mn(args) -> int:
    system = build_system(args.p, args.pp, args.a, args.b,
                          prefer_t_prime=args.tprime)
    sols = mn_solutions(system, args.L)
    print(json.dumps({
        "t": system.t,
        "Q": list(system.Q),
        "solutions": [{"m": list(s.m_hat), "n": list(s.n)} for s in sols],
    }))
    return 0


def _seed_fixtures(dirname: str) -> int:
    import os
    os.makedirs(dirname, exist_ok=True)
    with open(os.path.join(dirname, "fig1.json"), "w") as fh:
        json.dump(FIG_FIXTURE, fh, indent=2)
        fh.write("\n")
    print(f"wrote fig1.json to {dirname}")
    return 0


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    if args.seed_fixtures:
        return _seed_fixtures(args.seed_fixtures)
    if not args.cmd:
        ap.print_usage(sys.stderr)
        return 2
    try:
        if args.cmd == "model":
            if args.format == "text":
                print(format_model_tables(args.p, args.pp))
            else:
                tak = continued_fraction(args.p, args.pp)
                model = Model(args.p, args.pp)
                print(json.dumps({
                    "p": args.p, "pp": args.pp, "cf": list(tak.cf),
                    "n": tak.n, "t": tak.t,
                    "t_bounds": list(tak.t_bounds),
                    "y": [tak.y_of(k) for k in range(-1, tak.n + 2)],
                    "z": [tak.z_of(k) for k in range(-1, tak.n + 2)],
                    "kappa": list(tak.kappa),
                    "kappa_tilde": list(tak.kappa_tilde),
                    "string_lengths": list(tak.ell),
                    "T": sorted(tak.T), "T_prime": sorted(tak.T_prime),
                    "band_parities": list(model.band_parities()),
                    "interfacial": list(model.interfacial_heights()),
                }))
            return 0
        if args.cmd == "chi":
            return _cmd_chi(args)
        if args.cmd == "path":
            return _cmd_path(args)
        if args.cmd == "transform":
            return _cmd_transform(args)
        if args.cmd == "mn":
            return _cmd_mn(args)
        if args.cmd == "verify":
            forms = tuple(f.strip() for f in args.forms.split(",") if f.strip())
            for f in forms:
                if f not in ALL_FORMS:
                    raise ValueError(f"unknown form {f!r}")
            if args.output:
                with open(args.output, "w") as fh:
                    return run_verify_identity(args.ppmax, args.Lmax, args.jobs, forms, fh)
            return run_verify_identity(args.ppmax, args.Lmax, args.jobs, forms, sys.stdout)
        raise AssertionError(args.cmd)  # pragma: no cover
    except (ValueError, TransformError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
