"""Command-line front end.

Exit codes: 0 success, 1 domain error (JSON object on stderr), 2 usage error.
Set ORBISURF_COLOR to any non-empty value for indented, human-readable JSON.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .characters import RepClass
from .cyclotomic import CycloNum
from .errors import OrbisurfError
from .hjres import SingType, hj_chain, normalize_fixed_point
from .kodaira import CurveConfig, classify, emit_dot, euler_number
from .oracle import colength, equivariant_tangent_oracle, quotient_rep
from .orbclass import (
    ExtClass,
    KClassN,
    OrbSurface,
    StackyPoint,
    euler_pairing,
    hilb_dim,
    kclass_of_quotient,
    orb_chern_skyscraper,
)
from .polwalls import NumLattice, WallSpec, enumerate_walls
from .scenarios import CASES, SCHEMA_VERSION, case_dot, compare_table1, run_case


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _pair(text: str) -> tuple[int, int]:
    v = _ints(text)
    if len(v) != 2:
        raise argparse.ArgumentTypeError(f"expected two integers, got {text!r}")
    return v[0], v[1]


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number, got {text!r}") from None


def _ideal(text: str) -> list[tuple[int, int]]:
    gens = []
    for part in text.split(";"):
        if part.strip():
            gens.append(_pair(part))
    if not gens:
        raise argparse.ArgumentTypeError("ideal needs at least one generator")
    return gens


def _default(obj):
    if isinstance(obj, Fraction):
        return {"num": str(obj.numerator), "den": str(obj.denominator)}
    if isinstance(obj, CycloNum):
        return obj.to_json()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _dump(obj) -> str:
    if os.environ.get("ORBISURF_COLOR"):
        return json.dumps(obj, indent=2, ensure_ascii=False, default=_default) + "\n"
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False, default=_default) + "\n"


def _envelope(**kw) -> dict:
    return {"schema_version": SCHEMA_VERSION, **kw}


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise OrbisurfError("cli", f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise OrbisurfError("cli", f"{path} is not valid JSON: {exc.msg}") from None


def _point(args) -> StackyPoint:
    return StackyPoint("p", args.group, args.weights)


def cmd_resolve(args):
    if args.type is not None:
        t = SingType(*args.type)
    else:
        t = normalize_fixed_point(args.order, args.weights)
    chain = hj_chain(t)
    return _envelope(type=str(t), chain=list(chain.self_ints), first_meets=chain.first_meets)


def cmd_chern(args):
    p = _point(args)
    if len(args.rep) != p.r:
        raise OrbisurfError("cli", f"--rep needs {p.r} multiplicities")
    ch = orb_chern_skyscraper(p, RepClass(p.group, tuple(args.rep)))
    return _envelope(**ch.to_json())


def _ext(p: StackyPoint, vec) -> ExtClass:
    if len(vec) != p.r + 2:
        raise OrbisurfError("cli", f"extended classes take m,n0 and {p.r} irreducible coefficients")
    return ExtClass.make(vec[0], vec[1], {p.label: tuple(vec[2:])})


def cmd_euler_pairing(args):
    p = _point(args)
    X = OrbSurface((p,), chi_o=args.chi_o)
    return _envelope(chi=euler_pairing(X, _ext(p, args.a), _ext(p, args.b)))


def cmd_hilb_dim(args):
    p = _point(args)
    if len(args.alpha) != p.r:
        raise OrbisurfError("cli", f"--alpha takes n0 and {p.r - 1} nontrivial coefficients")
    alpha = KClassN.make(args.alpha[0], {p.label: tuple(args.alpha[1:])})
    d = hilb_dim(OrbSurface((p,)), alpha)
    return _envelope(dim=d, emptiness_consistent=d < 0)


def cmd_oracle(args):
    p = _point(args)
    v = quotient_rep(p.r, p.weights, args.ideal)
    alpha = kclass_of_quotient(p, v)
    dim = equivariant_tangent_oracle(p.r, p.weights, args.ideal, args.N)
    return _envelope(
        dim=dim,
        colength=colength(args.ideal),
        quotient=list(v.mults),
        alpha=alpha.to_json(),
        hilb_dim=hilb_dim(OrbSurface((p,)), alpha),
    )


def cmd_walls(args):
    obj = _read_json(args.gram)
    gram = obj["gram"] if isinstance(obj, dict) else obj
    L = NumLattice(tuple(map(tuple, gram)))
    walls = enumerate_walls(L, WallSpec(args.r, args.delta), tuple(args.h1), tuple(args.h2))
    return _envelope(
        walls=[list(w.xi) for w in walls],
        contains_segment=[list(w.xi) for w in walls if w.contains_segment],
    )


def cmd_classify_fiber(args):
    cfg = CurveConfig.from_json(_read_json(args.config))
    if args.emit == "dot":
        return emit_dot(cfg)
    t = classify(cfg)
    return _envelope(type=t.name, dynkin=t.dynkin, euler=euler_number(cfg))


def cmd_scenario(args):
    names = sorted(CASES) if args.case == "all" else [args.case]
    if args.emit == "dot":
        return "".join(case_dot(n) for n in names)
    reports = [run_case(n) for n in names]
    if args.case == "all":
        return _envelope(cases=reports)
    return reports[0]


def cmd_table1(args):
    names = sorted(CASES) if args.case == "all" else [args.case]
    diff = []
    for n in names:
        diff += compare_table1(run_case(n))
    return _envelope(diff=diff)


def cmd_table1_diff(args):
    obj = _read_json(args.input)
    reports = obj["cases"] if "cases" in obj else [obj]
    diff = []
    for rep in reports:
        diff += compare_table1(rep)
    return _envelope(diff=diff)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="orbisurf", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def point_flags(p):
        p.add_argument("--group", type=int, required=True, help="order r of the cyclic stabilizer")
        p.add_argument("--weights", type=_pair, required=True, help="cotangent weights w1,w2")

    p = sub.add_parser("resolve", help="Hirzebruch-Jung chain of 1/r(1,a)")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--type", type=_pair, help="r,a")
    g.add_argument("--order", type=int, help="group order, used with --weights")
    p.add_argument("--weights", type=_pair, help="fixed-point weights u1,u2")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("chern", help="orbifold Chern character of O_p (x) rho")
    point_flags(p)
    p.add_argument("--rep", type=_ints, required=True, help="irreducible multiplicities")
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("euler-pairing", help="Euler form of two classes at one stacky point")
    point_flags(p)
    p.add_argument("--a", type=_ints, required=True, help="m,n0,v0,...,v_{r-1}")
    p.add_argument("--b", type=_ints, required=True, help="m,n0,v0,...,v_{r-1}")
    p.add_argument("--chi-o", type=int, default=None, help="chi(O_X), needed when both m are nonzero")
    p.set_defaults(func=cmd_euler_pairing)

    p = sub.add_parser("hilb-dim", help="dimension of the Hilbert scheme of a lattice class")
    point_flags(p)
    p.add_argument("--alpha", type=_ints, required=True, help="n0,n1,...,n_{r-1}")
    p.set_defaults(func=cmd_hilb_dim)

    p = sub.add_parser("oracle", help="invariant tangent space at a monomial ideal")
    point_flags(p)
    p.add_argument("--ideal", type=_ideal, required=True, help="generators as a,b;a,b;...")
    p.add_argument("--N", type=int, default=None, help="truncation order (default colength + 2)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("walls", help="walls crossing a segment of polarizations")
    p.add_argument("--gram", required=True, help="JSON file with the Gram matrix")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--delta", type=_rational, required=True)
    p.add_argument("--h1", type=_ints, required=True)
    p.add_argument("--h2", type=_ints, required=True)
    p.set_defaults(func=cmd_walls)

    p = sub.add_parser("classify-fiber", help="Kodaira type of a fiber configuration")
    p.add_argument("--config", required=True, help="JSON file, or - for stdin")
    p.add_argument("--emit", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_classify_fiber)

    p = sub.add_parser("scenario", help="full report for a case")
    p.add_argument("--case", choices=sorted(CASES) + ["all"], required=True)
    p.add_argument("--emit", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_scenario)

    for name in ("table1", "table1-diff"):
        p = sub.add_parser(name, help="compare against the embedded table")
        if name == "table1":
            p.add_argument("--case", choices=sorted(CASES) + ["all"], default="all")
            p.set_defaults(func=cmd_table1)
        else:
            p.add_argument("--input", default="-", help="scenario JSON report (default stdin)")
            p.set_defaults(func=cmd_table1_diff)
    return ap


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "resolve" and args.order is not None and args.weights is None:
        try:
            parser.error("--order needs --weights")
        except SystemExit as exc:
            return int(exc.code)
    try:
        out = args.func(args)
    except OrbisurfError as exc:
        stderr.write(_dump(exc.to_json()))
        return 1
    except (KeyError, TypeError) as exc:
        stderr.write(_dump(OrbisurfError("cli", f"malformed input: {exc}").to_json()))
        return 1
    stdout.write(out if isinstance(out, str) else _dump(out))
    return 0


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
