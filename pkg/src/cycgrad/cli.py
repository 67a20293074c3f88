"""Command-line entry point.

Exit codes: 0 affirmative/pass, 1 negative verdict or failed verification,
2 usage or parse error.  Expressions come from positional arguments, or from
standard input one per line when none are given.  Without ``--n`` the number
of indeterminates is the largest ``Xk`` index seen (for ``check`` and
``theta``, the number of expressions).
"""

from __future__ import annotations

import argparse
import sys

from .algebra import AlgebraContext, GradientVec
from .calculus import cyclic_gradient, cyclic_symmetrize, number_operator, theta
from .errors import CycGradError
from .expr_io import max_variable_index, parse_poly, print_poly, serialize
from .solver import check_gradient, in_kernel, kernel_decompose
from .verify import run_verify

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {v}")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_positive, default=None, help="number of indeterminates X1..Xn")
    common.add_argument("--format", choices=("text", "doc"), default="text", help="plain text or cycgrad/1 JSON")

    parser = argparse.ArgumentParser(prog="cycgrad", description="Cyclic gradients of noncommutative polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in [
        ("grad", "print the cyclic gradient delta_1 P, ..., delta_n P"),
        ("kernel", "decompose P as constant + sum [X_k, Q_k], or show C(P)"),
        ("cyclic-symmetrize", "print the cyclic symmetrization C(P)"),
        ("number-op", "print N(P), each degree-d part scaled by d"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("expr", nargs="?", help="polynomial expression (default: read stdin)")

    for name, help_ in [
        ("check", "decide whether P_1, ..., P_n is a cyclic gradient"),
        ("theta", "print sum_j [X_j, P_j]"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("exprs", nargs="*", help="P_1 ... P_n (default: read stdin)")

    p = sub.add_parser("verify", parents=[common], help="randomized exactness and numeric checks")
    p.add_argument("--trials", type=_nonnegative, default=100)
    p.add_argument("--max-degree", type=_positive, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--numeric", type=_positive, default=None, metavar="M", help="also run matrix checks with M x M matrices")
    return parser


def _read_exprs(given, stdin) -> list[str]:
    if given:
        return list(given)
    return [line.strip() for line in stdin.read().splitlines() if line.strip()]


def _single(args, stdin) -> tuple[str, AlgebraContext]:
    exprs = _read_exprs([args.expr] if args.expr is not None else [], stdin)
    if len(exprs) != 1:
        raise UsageError(f"expected exactly one expression, got {len(exprs)}")
    n = args.n or max(1, max_variable_index(exprs[0]))
    return exprs[0], AlgebraContext(n)


def _tuple(args, stdin) -> GradientVec:
    exprs = _read_exprs(args.exprs, stdin)
    if not exprs:
        raise UsageError("expected at least one expression")
    n = args.n or len(exprs)
    if len(exprs) != n:
        raise UsageError(f"expected {n} expressions for n={n}, got {len(exprs)}")
    ctx = AlgebraContext(n)
    return GradientVec(ctx, [parse_poly(e, ctx) for e in exprs])


def _emit(out, args, obj, text_lines):
    if args.format == "doc":
        print(serialize(obj), file=out)
    else:
        for line in text_lines:
            print(line, file=out)


def _run(args, stdin, out) -> int:
    cmd = args.command
    if cmd in ("grad", "kernel", "cyclic-symmetrize", "number-op"):
        text, ctx = _single(args, stdin)
        p = parse_poly(text, ctx)
        if cmd == "grad":
            g = cyclic_gradient(p)
            _emit(out, args, g, [print_poly(e) for e in g])
        elif cmd == "cyclic-symmetrize":
            c = cyclic_symmetrize(p)
            _emit(out, args, c, [print_poly(c)])
        elif cmd == "number-op":
            q = number_operator(p)
            _emit(out, args, q, [print_poly(q)])
        else:
            if not in_kernel(p):
                obs = cyclic_symmetrize(p)
                _emit(out, args, obs, ["NOT-KERNEL", print_poly(obs)])
                return EXIT_NEGATIVE
            d = kernel_decompose(p)
            lines = ["KERNEL", f"constant: {print_poly(ctx.const(d.constant))}"]
            lines += [f"Q{k}: {print_poly(q)}" for k, q in enumerate(d.commutants, start=1)]
            _emit(out, args, d, lines)
        return EXIT_OK

    if cmd in ("check", "theta"):
        v = _tuple(args, stdin)
        if cmd == "theta":
            t = theta(v)
            _emit(out, args, t, [print_poly(t)])
            return EXIT_OK
        cert = check_gradient(v)
        if cert.is_gradient:
            _emit(out, args, cert, ["GRADIENT", print_poly(cert.potential)])
            return EXIT_OK
        _emit(out, args, cert, ["NOT-GRADIENT", print_poly(cert.obstruction)])
        return EXIT_NEGATIVE

    report = run_verify(args.trials, args.max_degree, args.n or 2, args.seed, args.numeric)
    _emit(out, args, report, [report.summary()])
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return _run(args, stdin, stdout)
    except (UsageError, CycGradError, ValueError) as e:
        print(f"cycgrad: error: {e}", file=stderr)
        return EXIT_USAGE


def entry_point():
    sys.exit(main())
