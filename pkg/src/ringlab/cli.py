"""Command line: construct rings, analyze structure, run the theorem
suite, run the census, and print density sweeps.

Exit status: 0 when every check holds or is inapplicable, 1 when any
theorem check fails (a genuine counterexample or a bug), 2 for input,
parse, or validation problems.  Reports go to stdout, diagnostics to
stderr.  All densities print as exact fractions; decimals appear only
as annotations."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import census as census_mod
from . import jsonio, structure, theorems
from .algebra import (
    Algebra,
    make_matrix,
    make_product,
    make_qring,
    make_S,
    make_triangular,
)
from .errors import BadParams, ParseError, RingLabError, UnknownBuiltin
from .finring import FiniteRing, as_finite_ring, characteristic, make_zm
from .gf import make_field

BUILTINS = ("S", "matrix", "triangular", "qring", "product", "Zm")


def _parse_ints(text, flag):
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise BadParams(f"{flag} expects comma-separated integers: {text!r}") from exc


def _require(args, builtin, **needed):
    values = {}
    for name, flag in needed.items():
        val = getattr(args, name, None)
        if val is None:
            raise BadParams(f"builtin {builtin!r} requires {flag}")
        values[name] = val
    return values


def build_builtin(args):
    builtin = args.builtin
    if builtin not in BUILTINS:
        raise UnknownBuiltin(builtin)
    if builtin == "Zm":
        got = _require(args, builtin, moduli="--moduli")
        moduli = _parse_ints(got["moduli"], "--moduli")
        if not moduli:
            raise BadParams("--moduli needs at least one modulus")
        return make_zm(*moduli)
    if builtin == "product":
        got = _require(args, builtin, factors="--factors")
        paths = [p for p in got["factors"].split(",") if p]
        if len(paths) < 2:
            raise BadParams("--factors needs at least two spec files")
        loaded = [jsonio.load(p) for p in paths]
        for obj in loaded:
            if not isinstance(obj, Algebra):
                raise BadParams("product factors must be algebra spec files")
        prod = loaded[0]
        for other in loaded[1:]:
            prod = make_product(prod, other)
        return prod
    got = _require(args, builtin, p="--p")
    field = make_field(got["p"], args.k)
    if builtin == "S":
        return make_S(field)
    if builtin == "qring":
        got = _require(args, builtin, n="--n")
        return make_qring(field, got["n"])
    got = _require(args, builtin, n="--n")
    maker = make_matrix if builtin == "matrix" else make_triangular
    return maker(field, got["n"])


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
        print(f"wrote {out_path}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def cmd_make(args):
    ring = build_builtin(args)
    _emit(jsonio.dumps(ring), args.output)
    return 0


def _load_ring(path):
    obj = jsonio.load(path)
    if not isinstance(obj, (Algebra, FiniteRing)):
        raise ParseError(f"{path} does not hold an algebra or ring spec")
    return obj


def _decimal(frac):
    return f"{float(frac):.6g}"


def analyze_data(ring):
    """The full structural report for one ring, JSON-ready."""
    size = ring.size
    idem = structure.idempotents(ring)
    cen_idem = structure.central_idempotents(ring)
    data = {
        "size": size,
        "characteristic": characteristic(ring),
        "commutative": structure.is_commutative(ring),
        "center": len(structure.center(ring)),
        "idempotents": len(idem),
        "central_idempotents": len(cen_idem),
        "radical": len(structure.jacobson_radical(ring)),
        "factor_sizes": sorted(f.size for f in structure.decompose(ring)),
        "densities": {
            "idempotent_density": Fraction(len(idem), size),
            "central_idempotent_density": Fraction(len(cen_idem), size),
        },
    }
    if isinstance(ring, Algebra):
        q = ring.field.q
        sols = structure.power_solutions(ring, q)
        defect = structure.central_defect_solutions(ring)
        data["field"] = {"p": ring.field.p, "k": ring.field.k}
        data["power_solutions"] = len(sols)
        data["central_defect_solutions"] = len(defect)
        data["densities"]["solution_density"] = sols.density
        data["densities"]["central_defect_density"] = defect.density
    return data


def _print_analysis(data):
    lines = []
    lines.append(f"size                        {data['size']}")
    lines.append(f"characteristic              {data['characteristic']}")
    lines.append(f"commutative                 {'yes' if data['commutative'] else 'no'}")
    lines.append(f"center                      {data['center']}")
    lines.append(f"idempotents                 {data['idempotents']}")
    lines.append(f"central idempotents         {data['central_idempotents']}")
    if "power_solutions" in data:
        lines.append(f"power solutions             {data['power_solutions']}")
        lines.append(f"central-defect solutions    {data['central_defect_solutions']}")
    lines.append(f"radical                     {data['radical']}")
    factors = " x ".join(str(s) for s in data["factor_sizes"])
    lines.append(f"factors                     {factors}")
    for name, frac in data["densities"].items():
        label = name.replace("_", " ")
        lines.append(f"{label:<27} {frac} (~{_decimal(frac)})")
    return "\n".join(lines) + "\n"


def cmd_analyze(args):
    ring = _load_ring(args.spec)
    data = analyze_data(ring)
    if args.json:
        _emit(jsonio.dumps(data), args.output)
    else:
        _emit(_print_analysis(data), args.output)
    return 0


def _verify_targets(args):
    if args.catalog:
        yield from theorems.verify_catalog()
    else:
        ring = _load_ring(args.spec)
        for rep in theorems.verify_all(ring):
            yield args.spec, rep


def cmd_verify(args):
    if not args.catalog and not args.spec:
        raise BadParams("verify needs a spec file or --catalog")
    failures = 0
    rows = []
    for name, rep in _verify_targets(args):
        rows.append((name, rep))
        if rep.verdict == "fails":
            failures += 1
            print(f"counterexample in {name}:", file=sys.stderr)
            sys.stderr.write(jsonio.dumps(rep))
    if args.json:
        payload = [{"ring": name, **jsonio.to_jsonable(rep)} for name, rep in rows]
        sys.stdout.write(jsonio.dumps(payload))
    else:
        for name, rep in rows:
            dens = " ".join(
                f"{k}={v}" for k, v in sorted(rep.densities.items())
            )
            line = f"{name:<14} {rep.statement:<34} {rep.verdict}"
            if dens:
                line += "  " + dens
            print(line)
        holds = sum(1 for _, r in rows if r.verdict == "holds")
        na = sum(1 for _, r in rows if r.verdict == "not_applicable")
        print(
            f"---\n{len(rows)} checks: {holds} hold, {na} not applicable, {failures} fail"
        )
    return 1 if failures else 0


def cmd_census(args):
    field = make_field(args.p, args.k)
    result = census_mod.run_census(
        field, args.dim, budget=args.budget, jobs=args.jobs
    )
    if args.output:
        jsonio.save(result, args.output)
        print(f"wrote {args.output}", file=sys.stderr)
    if args.json and not args.output:
        sys.stdout.write(jsonio.dumps(result))
        return 0
    print(
        f"census over GF({field.q}) dim {args.dim}: "
        f"{result.candidates_scanned} tables scanned, "
        f"{result.valid_count} associative, {len(result.classes)} classes"
    )
    print(f"{'representative':<16} {'orbit':<7} {'noncomm':<8} profile")
    for cls in result.classes:
        prof = " ".join(f"{k}={v}" for k, v in cls.profile.items())
        print(
            f"{cls.representative:<16} {cls.orbit:<7} "
            f"{'yes' if cls.noncommutative else 'no':<8} {prof}"
        )
    return 0


def cmd_sweep(args):
    if args.builtin != "S":
        raise UnknownBuiltin(args.builtin)
    primes = _parse_ints(args.primes, "--primes")
    if not primes:
        raise BadParams("--primes needs at least one prime")
    rep = theorems.density_sequence(primes)
    if args.json:
        sys.stdout.write(jsonio.dumps(rep))
    else:
        print(f"{'p':<5} {'count':<8} {'density':<10} decimal")
        for p, count in zip(primes, rep.witnesses):
            frac = rep.densities[f"p{p}"]
            print(f"{p:<5} {count:<8} {str(frac):<10} ~{_decimal(frac)}")
        print(f"strictly increasing: {rep.notes['strictly_increasing']}")
    return 1 if rep.verdict == "fails" else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ringlab",
        description="exact computations in finite rings and algebras",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_make = sub.add_parser("make", help="write a builtin ring spec")
    p_make.add_argument("builtin", help="one of: " + ", ".join(BUILTINS))
    p_make.add_argument("--p", type=int, help="field characteristic")
    p_make.add_argument("--k", type=int, default=1, help="field extension degree")
    p_make.add_argument("--n", type=int, help="size parameter (matrix/triangular/qring)")
    p_make.add_argument("--moduli", help="comma-separated moduli for Zm")
    p_make.add_argument("--factors", help="comma-separated spec files for product")
    p_make.add_argument("-o", "--output", help="output path (default stdout)")
    p_make.set_defaults(func=cmd_make)

    p_an = sub.add_parser("analyze", help="structural report for a spec file")
    p_an.add_argument("spec", help="ring spec file")
    p_an.add_argument("--json", action="store_true", help="emit canonical JSON")
    p_an.add_argument("-o", "--output", help="output path (default stdout)")
    p_an.set_defaults(func=cmd_analyze)

    p_ver = sub.add_parser("verify", help="run the theorem suite")
    p_ver.add_argument("spec", nargs="?", help="ring spec file")
    p_ver.add_argument("--catalog", action="store_true", help="verify every builtin target")
    p_ver.add_argument("--json", action="store_true", help="emit canonical JSON")
    p_ver.set_defaults(func=cmd_verify)

    p_cen = sub.add_parser("census", help="enumerate algebras up to isomorphism")
    p_cen.add_argument("--p", type=int, required=True, help="field characteristic")
    p_cen.add_argument("--k", type=int, default=1, help="field extension degree")
    p_cen.add_argument("--dim", type=int, required=True, help="algebra dimension")
    p_cen.add_argument("--budget", type=int, help="candidate budget override")
    p_cen.add_argument("--jobs", type=int, help="parallel scan workers")
    p_cen.add_argument("--json", action="store_true", help="emit canonical JSON")
    p_cen.add_argument("-o", "--output", help="write the census JSON here")
    p_cen.set_defaults(func=cmd_census)

    p_sw = sub.add_parser("sweep", help="density sequence table")
    p_sw.add_argument("--builtin", default="S", help="ring family (only S)")
    p_sw.add_argument("--primes", required=True, help="comma-separated primes")
    p_sw.add_argument("--json", action="store_true", help="emit canonical JSON")
    p_sw.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RingLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
