"""Command-line entry point: ``nrlambda <command> [flags]``.

Exit codes: 0 success, 1 property failure, 2 parse error, 3 ring error,
4 non-integer-valued character under --strict, 5 invalid MAS matrix,
6 size cap exceeded.
"""

import argparse
import json
import sys

from .bench import IMPLS, run_bench
from .characters import PowerGroup, character_from_json
from .errors import (
    AlgebraError,
    HorizonExceeded,
    IntegralityViolation,
    InvalidHom,
    LengthMismatch,
    NonDivisible,
    NotIntegerValued,
    NotMAS,
    ParseError,
    QAlgebraRequired,
    RingMismatch,
    SizeLimit,
)
from .necklace import format_entries
from .numeric import format_scalar, scalar_text
from .series import enr_inv, product_form
from .symrep import (
    MASMatrix,
    chi_closed,
    det_series,
    lam_series_sigma,
    parse_permutation,
    rep_matrix,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_RING, EXIT_NOT_INTEGRAL, EXIT_NOT_MAS, EXIT_SIZE = range(7)


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    """argparse reports usage errors with exit code 2, which is also ours for
    parse errors; route them through CliError so main() stays in control."""

    def error(self, message):
        raise CliError(EXIT_PARSE, f"{self.prog}: {message}")


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a value >= 1, got {v}")
    return v


def _nonnegative(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a value >= 0, got {v}")
    return v


def build_parser():
    p = _Parser(prog="nrlambda", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit JSON instead of text")
        sp.add_argument("--out", help="write output to this file instead of stdout")

    ex = sub.add_parser("exterior", help="table of exterior powers lambda^i(chi)")
    ex.add_argument("--group", required=True, help="group JSON, inline or @path")
    ex.add_argument("--char", required=True, help="character JSON, inline or @path")
    ex.add_argument("--max", type=_nonnegative, help="largest i (default: --order)")
    ex.add_argument("--order", type=_positive, default=16)
    common(ex)

    fa = sub.add_parser("factor", help="product form of lambda_t(chi) per class")
    fa.add_argument("--group", required=True)
    fa.add_argument("--char", required=True)
    fa.add_argument("--class", dest="cls", help="class index or label (default: all)")
    fa.add_argument("--order", type=_positive, default=16,
                    help="horizon for characters that are not integer-valued")
    fa.add_argument("--strict", action="store_true",
                    help="fail with exit 4 on a character that is not integer-valued")
    common(fa)

    sy = sub.add_parser("symrep", help="braided-swap representation at a permutation")
    sy.add_argument("--matrix", required=True, help="MAS matrix JSON, inline or @path")
    sy.add_argument("--sigma", required=True, help='permutation in cycle notation, e.g. "(1 2)(3 4 5)"')
    sy.add_argument("--n", type=_positive, help="number of tensor factors (default: largest letter)")
    sy.add_argument("--order", type=_positive, default=16)
    sy.add_argument("--oracle", action="store_true",
                    help="also compare against det(I + t rho(sigma)) from explicit matrices")
    common(sy)

    ve = sub.add_parser("verify", help="run a randomized property suite")
    ve.add_argument("--suite", required=True)
    ve.add_argument("--seed", type=int, default=0)
    ve.add_argument("--cases", type=_positive, default=200)
    common(ve)

    be = sub.add_parser("bench", help="time direct versus ghost-route multiplication")
    be.add_argument("--impl", default="both")
    be.add_argument("--size", type=_positive, default=2000)
    be.add_argument("--seed", type=int, default=0)
    common(be)
    return p


def _load_json(text, what):
    if text.startswith("@"):
        try:
            with open(text[1:], encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(EXIT_PARSE, f"cannot read {what} file: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_PARSE, f"malformed {what} JSON: {exc}") from None


def _load_character(args):
    group = PowerGroup.from_json(_load_json(args.group, "group"))
    return group, character_from_json(group, _load_json(args.char, "character"))


def _classes(group, choice):
    if choice is None:
        return list(range(group.class_count))
    if choice.lstrip("-").isdigit():
        c = int(choice)
        if not 0 <= c < group.class_count:
            raise CliError(EXIT_PARSE, f"class index {c} outside 0..{group.class_count - 1}")
        return [c]
    try:
        return [group.class_index(choice)]
    except KeyError as exc:
        raise CliError(EXIT_PARSE, str(exc.args[0])) from None


def _tuple_text(values):
    return "(" + ", ".join(scalar_text(v) for v in values) + ")"


# -- commands ----------------------------------------------------------------

def cmd_exterior(args):
    group, chi = _load_character(args)
    top = args.order if args.max is None else args.max
    powers = chi.lambda_powers(top)
    if args.json:
        return EXIT_OK, {"group": group.to_json(), "classes": list(group.labels),
                         "powers": [lam.to_json() for lam in powers]}
    lines = ["classes: " + " ".join(group.labels)]
    lines += [f"lambda^{i} = {_tuple_text(lam.values)}" for i, lam in enumerate(powers)]
    return EXIT_OK, lines


def cmd_factor(args):
    group, chi = _load_character(args)
    classes = _classes(group, args.cls)
    integral = chi.is_integer_valued(strict=True).value
    if args.strict and not integral:
        raise CliError(EXIT_NOT_INTEGRAL, "NotIntegerValued: the character takes non-integer values")
    rows = []
    for c in classes:
        res = chi.necklace_at(c, horizon=args.order)
        rows.append((group.labels[c], res))
    if args.json:
        return EXIT_OK, {"integer_valued": integral, "classes": [
            {"class": label, "exact": res.exact, "necklace": res.vector.to_json(),
             "product": product_form(res.vector) if res.exact else None}
            for label, res in rows]}
    lines = [] if integral else [
        f"note: NotIntegerValued; showing exponents 1..{args.order} where the support is infinite"]
    for label, res in rows:
        if res.exact:
            lines.append(f"{label}: {product_form(res.vector)}")
        else:
            lines.append(f"{label}: truncated {_tuple_text(res.vector.values)}")
    return EXIT_OK, lines


def cmd_symrep(args):
    Q = MASMatrix.from_json(_load_json(args.matrix, "matrix"))
    try:
        sigma = parse_permutation(args.sigma, args.n)
    except ValueError as exc:
        raise CliError(EXIT_PARSE, f"bad permutation: {exc}") from None
    if args.n is not None and sigma.n != args.n:
        raise CliError(EXIT_PARSE, f"permutation moves letters beyond n = {args.n}")
    n = sigma.n
    chi = chi_closed(Q, sigma)
    series, neck = lam_series_sigma(Q, sigma, args.order, with_necklace=True)
    lines = [f"chi={scalar_text(chi)}; necklace={format_entries(neck)}; lambda={product_form(neck)}"]
    payload = {"n": n, "sigma": str(sigma), "matrix": Q.to_json(), "chi": format_scalar(chi),
               "necklace": neck.to_json(), "lambda": product_form(neck),
               "series": series.to_json()}
    if args.oracle:
        A = rep_matrix(Q, n, sigma)
        det = det_series(A, args.order)
        padded = list(det.coeffs) + [0] * (series.order - det.order)
        match = A.trace() == chi and padded == list(series.coeffs) \
            and enr_inv(neck, series.order) == series
        lines.append("oracle: " + ("MATCH" if match else "MISMATCH"))
        payload["oracle"] = match
        if not match:
            return EXIT_FAIL, payload if args.json else lines
    return EXIT_OK, payload if args.json else lines


def cmd_verify(args):
    if args.suite not in SUITES:
        raise CliError(EXIT_PARSE, f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    report = run_suite(args.suite, args.seed, args.cases)
    code = EXIT_OK if report.ok else EXIT_FAIL
    return code, report.to_json() if args.json else report.lines()


def cmd_bench(args):
    if args.impl not in IMPLS:
        raise CliError(EXIT_PARSE, f"unknown implementation {args.impl!r}; choose from {', '.join(IMPLS)}")
    result = run_bench(args.impl, args.size, args.seed)
    code = EXIT_FAIL if result.agree is False else EXIT_OK
    return code, result.to_json() if args.json else result.lines()


COMMANDS = {
    "exterior": cmd_exterior,
    "factor": cmd_factor,
    "symrep": cmd_symrep,
    "verify": cmd_verify,
    "bench": cmd_bench,
}

_ERROR_CODES = (
    ((ParseError, LengthMismatch), EXIT_PARSE),
    (NotMAS, EXIT_NOT_MAS),
    (SizeLimit, EXIT_SIZE),
    (NotIntegerValued, EXIT_NOT_INTEGRAL),
    ((RingMismatch, QAlgebraRequired, NonDivisible, IntegralityViolation, InvalidHom,
      HorizonExceeded), EXIT_RING),
)


def exit_code_for(exc):
    """Exit code for a library error; anything unlisted is a property failure."""
    for classes, code in _ERROR_CODES:
        if isinstance(exc, classes):
            return code
    return EXIT_FAIL


def _emit(output, path):
    text = json.dumps(output, indent=2) if isinstance(output, dict) else "\n".join(output)
    text += "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        code, output = COMMANDS[args.command](args)
    except CliError as exc:
        print(str(exc), file=sys.stderr)
        return exc.code
    except AlgebraError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return exit_code_for(exc)
    _emit(output, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
