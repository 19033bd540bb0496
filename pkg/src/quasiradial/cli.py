"""Command-line interface: ``quasiradial <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import classifier, field, reports
from .exact import parse_rational
from .spectrum import DomainError, Gamma, make_spectrum

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _gamma(text: str) -> Gamma:
    try:
        return Gamma(parse_rational(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"invalid --gamma {text!r}: {exc}") from None


def _emit(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out!r}: {exc.strerror}") from None


def cmd_spectrum(args) -> int:
    spec = make_spectrum(_gamma(args.gamma), args.n)
    _emit(reports.dumps_json(spec.to_dict()), args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    cls = classifier.classify(_gamma(args.gamma))
    _emit(reports.dumps_json(cls.to_dict()), args.out)
    return EXIT_OK


def _validated_rows(q_max: int, band: str):
    rows = classifier.enumerate_algebraic(q_max, band_kind=band)
    for q, p, cert in rows:
        g = Gamma(parse_rational(f"{p}/{q}"))
        A, B = cert.dioph_A, cert.dioph_B
        ok = (
            cert.d * cert.d == classifier.discriminant(g, cert.n)
            and A > B >= 1
            and A * A * q - 2 * A * B * p * cert.n + q * (2 * cert.n - 1) * B * B == 0
            and make_spectrum(g, cert.n).k.is_rational()
        )
        if not ok:
            raise RuntimeError(f"certificate for {p}/{q}, N={cert.n} failed re-validation")
    return rows


def cmd_enumerate(args) -> int:
    rows = _validated_rows(args.qmax, args.band)
    if args.format == "csv":
        text = reports.enumeration_csv(rows)
    elif args.format == "json":
        text = reports.enumeration_json(rows)
    else:
        raise UsageError("svg output is only available from the diagram command")
    _emit(text, args.out)
    return EXIT_OK


def cmd_diagram(args) -> int:
    if args.format != "svg":
        raise UsageError("diagram only writes svg")
    rows = classifier.enumerate_algebraic(args.qmax, band_kind=args.band)
    _emit(reports.diagram_svg(rows, args.qmax), args.out)
    return EXIT_OK


def _config(args) -> field.FieldConfig:
    return field.FieldConfig.build(
        _gamma(args.gamma),
        args.n,
        amplitude=args.amplitude,
        rotation=args.phase,
        global_phase=args.global_phase,
        adjoint=args.adjoint,
    )


def cmd_eval(args) -> int:
    config = _config(args)
    pt = field.PlanePoint(args.x, args.y)
    if pt.x == 0.0 and pt.y == 0.0:
        # k > 1: u and its gradient vanish at the origin
        u, ux, uy = 0.0, 0.0, 0.0
    else:
        u = field.eval_u(config, pt)
        ux, uy = field.gradient(config, pt)
    payload = {"config": config.to_dict(), "x": args.x, "y": args.y, "u": u, "ux": ux, "uy": uy}
    _emit(reports.dumps_json(payload), args.out)
    return EXIT_OK


def cmd_wave(args) -> int:
    config = field.FieldConfig.build(_gamma(args.gamma), args.n)
    f, fp = field.wave_with_derivative(config, args.theta)
    payload = {
        "gamma": args.gamma,
        "n": args.n,
        "theta": args.theta,
        "f": f,
        "fprime": fp,
        "z0": config.z0,
        "period": config.period,
    }
    _emit(reports.dumps_json(payload), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    config = _config(args).with_(k_offset=args.perturb_k)
    report = field.verify_suite(config, n_rho=args.n_rho, n_theta=args.n_theta)
    if not config.spectrum.gamma.is_aronsson and config.n >= 2:
        conj = field.conjugacy_check(config)
        conj["passed"] = bool(
            conj["max_orthogonality"] < 1e-8 and conj["ratio_spread"] < 1e-6 and conj["exponent_identity"]
        )
        report["conjugacy"] = conj
        report["passed"] = report["passed"] and conj["passed"]
    _emit(reports.dumps_json(report), args.out)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quasiradial", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_required=True):
        p.add_argument("--gamma", required=True, help='exact rational, "p/q" or an integer')
        if n_required:
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("spectrum", help="constants for (gamma, N)")
    common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("classify", help="algebraic N for gamma")
    common(p, n_required=False)
    p.set_defaults(func=cmd_classify)

    for name, func, fmt, choices in (
        ("enumerate", cmd_enumerate, "json", ("json", "csv")),
        ("diagram", cmd_diagram, "svg", ("svg",)),
    ):
        p = sub.add_parser(name, help=f"{name} algebraic gamma with q <= qmax")
        p.add_argument("--qmax", type=int, required=True)
        p.add_argument("--format", default=fmt, choices=("json", "csv", "svg"))
        p.add_argument("--band", default="proven", choices=("proven", "sharp"))
        p.add_argument("--out", default=None)
        p.set_defaults(func=func)

    for name, func, helptext in (
        ("eval", cmd_eval, "u and its gradient at (x, y)"),
        ("verify", cmd_verify, "run the invariant suite"),
    ):
        p = sub.add_parser(name, help=helptext)
        common(p)
        p.add_argument("--amplitude", type=float, default=1.0)
        p.add_argument("--phase", type=float, default=0.0, help="rotation psi")
        p.add_argument("--global-phase", type=float, default=0.0)
        p.add_argument("--adjoint", action="store_true")
        if name == "eval":
            p.add_argument("--x", type=float, required=True)
            p.add_argument("--y", type=float, required=True)
        else:
            p.add_argument("--n-rho", type=int, default=20)
            p.add_argument("--n-theta", type=int, default=20)
            p.add_argument("--perturb-k", type=float, default=0.0, help=argparse.SUPPRESS)
        p.set_defaults(func=func)

    p = sub.add_parser("wave", help="wave function f_N(theta)")
    common(p)
    p.add_argument("--theta", type=float, required=True)
    p.set_defaults(func=cmd_wave)
    return parser


_VALUE_FLAGS = {"--gamma", "--x", "--y", "--phase", "--global-phase", "--theta", "--amplitude", "--perturb-k"}


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    # "--gamma -7/5" would otherwise be read as an unknown option
    out, it = [], iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "n", 1) is not None and getattr(args, "n", 1) < 1:
        print("error: --n must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, DomainError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
