"""Command-line front end.

    groth eval --route det --lambda 1,0 --symbolic
    groth verify rectangular --n 2 --m 2 --k 1 --symbolic
    groth suite --seed 0 --format text

Exit codes: 0 pass, 1 identity failure, 2 usage or validation error,
3 computation error. Errors print their class name on stderr.
"""

import argparse
import os
import sys

from .combinatorics import Partition, PositionVector, positions_from_partition
from .errors import (
    AlphabetTooShort, BoxOverflow, GrothError, ProfileViolation)
from .exact import distinct, format_scalar, names, sample_point, scalar
from .grothendieck import FactorialAlphabet, grothendieck_det, grothendieck_symbolic
from .lattice import wavefunction
from .report import RENDERERS, dumps, render_csv
from .suite import CRITERIA, run_suite, suite_json
from .symfuncs import F_of
from . import verifier

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2, 3

# bad inputs rather than failed computations
VALIDATION_ERRORS = (ProfileViolation, BoxOverflow, AlphabetTooShort)

SEED_MIN, SEED_MAX = -(2 ** 63), 2 ** 64 - 1

IDENTITIES = (["guo-sun", "rectangular", "duality", "q-deformed", "prop51", "consistency-triangle"]
              + [f"commutation:{r}" for r in verifier.RELATIONS]
              + [f"correspondence:{c}" for c in verifier.CORRESPONDENCES])


class UsageError(Exception):
    pass


def _seed(text):
    value = int(text)
    if not SEED_MIN <= value <= SEED_MAX:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def _scalars(text):
    return [scalar(t.strip()) for t in text.split(",") if t.strip()]


def _ints(text):
    return [int(t) for t in text.split(",") if t.strip()]


def default_seed():
    env = os.environ.get("GROTH_SEED")
    if env is None:
        return 0
    try:
        return _seed(env)
    except (ValueError, argparse.ArgumentTypeError):
        raise UsageError(f"GROTH_SEED={env!r} is not a 64-bit integer")


def build_parser(seed_default=0) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="groth", description="Exact checks of factorial Grothendieck "
                                "identities through five- and six-vertex lattice models.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--seed", type=_seed, default=seed_default,
                        help="sampling seed (default 0, or $GROTH_SEED)")
        sp.add_argument("--format", choices=sorted(RENDERERS), default="text")

    e = sub.add_parser("eval", help="evaluate G, the lattice wavefunction or F")
    e.add_argument("--route", choices=["det", "lattice", "symfunc"], required=True)
    e.add_argument("--lambda", dest="lam", type=Partition.parse, help="partition, e.g. 2,1,0")
    e.add_argument("--n", type=int)
    e.add_argument("--M", type=int, help="number of factorial variables alpha (det route)")
    e.add_argument("--beta", default="-1", help="rational, or 'beta' to keep it symbolic")
    e.add_argument("--z", type=_scalars, help="comma list of z values")
    e.add_argument("--alpha", type=_scalars, help="comma list of alpha values")
    e.add_argument("--u", type=_scalars, help="comma list of spectral parameters")
    e.add_argument("--w", type=_scalars, help="comma list of inhomogeneities; sets L")
    e.add_argument("--x", type=_ints, help="particle positions (instead of --lambda)")
    e.add_argument("--L", type=int, help="chain length when --w is sampled")
    e.add_argument("--q", default="0")
    e.add_argument("--symbolic", action="store_true", help="expand the determinant as a polynomial")
    common(e)

    v = sub.add_parser("verify", help="verify one identity at seeded points")
    v.add_argument("identity", choices=IDENTITIES, metavar="IDENTITY",
                   help="one of: " + ", ".join(IDENTITIES))
    v.add_argument("--n", type=int, default=2)
    v.add_argument("--m", type=int, default=2)
    v.add_argument("--k", type=int, default=1)
    v.add_argument("--L", type=int)
    v.add_argument("--ell", type=int, default=2)
    v.add_argument("--lambda", dest="lam", type=Partition.parse)
    v.add_argument("--x", type=_ints)
    v.add_argument("--beta", default="-1")
    v.add_argument("--points", type=int, default=25)
    v.add_argument("--symbolic", action="store_true")
    common(v)

    s = sub.add_parser("suite", help="run the full acceptance sweep")
    s.add_argument("--max-n", type=int, default=4, help="skip cells larger than this")
    s.add_argument("--criteria", type=lambda t: set(t.split(",")),
                   help="comma list among " + ",".join(CRITERIA))
    common(s)
    return p


# -- eval ------------------------------------------------------------------------------


def _sampled(args, prefix, count, given, constraints=True):
    if given is not None:
        if len(given) != count:
            raise UsageError(f"--{prefix} needs {count} values, got {len(given)}")
        return given
    vs = names(prefix, count)
    pt = sample_point(f"eval:{args.seed}", vs, [distinct(*vs)] if constraints else [])
    return pt.family(prefix, count)


def cmd_eval(args) -> str:
    if args.route == "det":
        if args.lam is None:
            raise UsageError("--route det needs --lambda")
        n = args.n if args.n is not None else len(args.lam)
        lam = Partition(tuple(args.lam) + (0,) * (n - len(args.lam)))
        if len(lam) != n:
            raise UsageError(f"--lambda has more than --n={n} parts")
        M = args.M if args.M is not None else (lam.first + n - 1 if n else 0)
        if args.symbolic:
            beta = "beta" if args.beta == "beta" else scalar(args.beta)
            return _render_value(args, "det", str(grothendieck_symbolic(lam, n, M, beta=beta)))
        z = _sampled(args, "z", n, args.z)
        alphas = _sampled(args, "alpha", M, args.alpha, constraints=False)
        value = grothendieck_det(lam, z, FactorialAlphabet(alphas, scalar(args.beta)))
        return _render_value(args, "det", format_scalar(value))

    if args.symbolic:
        raise UsageError("--symbolic applies to --route det only")
    if args.w is not None:
        L = len(args.w)
    elif args.L is not None:
        L = args.L
    else:
        raise UsageError("give --w values or the chain length --L")
    if args.x is not None:
        x = PositionVector(tuple(args.x), L)
    elif args.lam is not None:
        x = positions_from_partition(args.lam, L)
    else:
        raise UsageError("give particle positions --x or a partition --lambda")
    n = len(x)
    u = _sampled(args, "u", n, args.u)
    w = _sampled(args, "w", L, args.w)
    q = scalar(args.q)
    value = wavefunction(u, w, x, q) if args.route == "lattice" else F_of(u, w, x, q)
    return _render_value(args, args.route, format_scalar(value))


def _render_value(args, route, text):
    if args.format == "json":
        return dumps({"route": route, "value": text})
    if args.format == "csv":
        return f"route,value\n{route},{text}\n"
    return text + "\n"


# -- verify ----------------------------------------------------------------------------


def _verify_report(args):
    ident = args.identity
    common = dict(points=args.points, seed=args.seed)
    if ident == "guo-sun":
        lam = args.lam if args.lam is not None else Partition((0,) * args.k)
        return verifier.verify_guo_sun(lam, args.n, args.m, beta=scalar(args.beta), **common)
    if ident == "rectangular":
        return verifier.verify_rectangular(args.n, args.m, args.k, symbolic=args.symbolic, **common)
    if ident == "duality":
        return verifier.verify_duality(args.n, args.m, args.k, **common)
    if ident == "consistency-triangle":
        return verifier.verify_consistency_triangle(args.n, args.m, args.k, **common)
    if ident == "q-deformed":
        x = PositionVector(tuple(args.x if args.x is not None else range(1, args.k + 1)), args.m)
        return verifier.verify_q_deformed(args.n, args.m, args.k, x, **common)
    if ident == "prop51":
        return verifier.verify_prop51(args.n, args.k, args.m, points=args.points, seed=args.seed)
    kind, which = ident.split(":", 1)
    if kind == "commutation":
        return verifier.verify_commutation(
            which, L=args.L or 3, n=args.n, k=args.k, m=args.m, ell=args.ell,
            points=args.points, seed=args.seed)
    x = PositionVector(tuple(args.x), args.m) if args.x is not None else None
    return verifier.verify_correspondences(
        which, n=args.n, m=args.m, k=args.k, L=args.L, lam=args.lam, x=x,
        points=args.points, seed=args.seed)


def cmd_verify(args):
    report = _verify_report(args)
    return RENDERERS[args.format](report), (EXIT_PASS if report.ok else EXIT_FAIL)


# -- suite -----------------------------------------------------------------------------


def render_suite(results, seed, fmt) -> str:
    if fmt == "json":
        return dumps(suite_json(results, seed))
    if fmt == "csv":
        body = render_csv([rep for _, rep in results])
        header, rows = body.split("\n", 1)
        crits = [c for c, _ in results]
        lines = ["criterion," + header] + [f"{c},{row}" for c, row in zip(crits, rows.splitlines())]
        return "\n".join(lines) + "\n"
    lines = [f"{'':2}{'crit':<5}{'identity':<24}{'points':>7}  {'verdict':<24}cell"]
    flagged = False
    for crit, rep in results:
        mark = "  "
        if not rep.ok and not flagged:
            mark, flagged = ">>", True
        lines.append(f"{mark}{crit:<5}{rep.identity:<24}{rep.points:>7}  {rep.verdict:<24}{rep.cell()}")
    passed = sum(rep.ok for _, rep in results)
    lines.append(f"{passed}/{len(results)} cells verified (seed {seed})")
    return "\n".join(lines) + "\n"


def cmd_suite(args):
    if args.criteria and not args.criteria <= set(CRITERIA):
        raise UsageError(f"unknown criteria {sorted(args.criteria - set(CRITERIA))}")
    results = run_suite(seed=args.seed, max_n=args.max_n, criteria=args.criteria)
    failing = [(c, rep) for c, rep in results if not rep.ok]
    if failing:
        c, rep = failing[0]
        print(f"first failing cell: criterion {c} {rep.identity} {rep.cell()}", file=sys.stderr)
    return render_suite(results, args.seed, args.format), (EXIT_FAIL if failing else EXIT_PASS)


# -- entry point -----------------------------------------------------------------------------


def _error(exc, code):
    print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    try:
        parser = build_parser(default_seed())
    except UsageError as exc:
        return _error(exc, EXIT_USAGE)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "eval":
            out, code = cmd_eval(args), EXIT_PASS
        elif args.command == "verify":
            out, code = cmd_verify(args)
        else:
            out, code = cmd_suite(args)
    except (UsageError, *VALIDATION_ERRORS) as exc:
        return _error(exc, EXIT_USAGE)
    except GrothError as exc:
        return _error(exc, EXIT_COMPUTE)
    except (ValueError, TypeError) as exc:
        # malformed parameters that slipped past argparse (bad partitions, sizes)
        return _error(exc, EXIT_USAGE)
    except ZeroDivisionError as exc:
        return _error(exc, EXIT_COMPUTE)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
