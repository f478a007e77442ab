"""Command-line interface: ``jack <command> ...``.

Exit status is 0 on success, 1 when a verification suite finds a failure and
2 on usage errors (bad flags, malformed or incompatible partitions).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import suites
from .alpha import AlphaRat, factor_linear
from .errors import JackError
from .hooks import rect_union_assignment, rectangular_assignment, union_factored_form
from .lr import jack_lr, stanley_coeff
from .partitions import Partition, complement, decompose_wrt_rectangle, parse_partition, rectangle
from .symfunc import POWERSUM, convert, jack_J

FACTOR_BOUND = 12


class UsageError(Exception):
    pass


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


# -- commands -----------------------------------------------------------------


def cmd_expand(args) -> int:
    lam = args.lam
    j = jack_J(lam)
    bases = ["monomial", "powersum"] if args.basis == "both" else [args.basis]
    lines, payload = [], {"lambda": list(lam), "expansions": []}
    for basis in bases:
        f = j if basis == "monomial" else convert(j, POWERSUM)
        lines.append(f"J_{lam.label()} = {f.format(args.unicode)}")
        payload["expansions"].append(f.to_json())
    _emit(args, "\n".join(lines), payload)
    return 0


def cmd_lr(args) -> int:
    table = jack_lr(args.mu, args.nu)
    lines = [f"J_{args.mu.label()} * J_{args.nu.label()}:"]
    for gamma, g, st in table.rows():
        st_text = st.format(args.unicode)
        if st.is_poly():
            fac = factor_linear(st.as_poly(), FACTOR_BOUND)
            if fac is not None:
                st_text = fac.format(args.unicode)
        lines.append(f"  {gamma.label()}: g = {g.format(args.unicode)}; stanley = {st_text}")
    payload = {"mu": list(args.mu), "nu": list(args.nu), "table": table.to_json(FACTOR_BOUND)}
    _emit(args, "\n".join(lines), payload)
    return 0


def cmd_stanley(args) -> int:
    value = stanley_coeff(args.mu, args.nu, args.lam)
    fac = factor_linear(value.as_poly(), FACTOR_BOUND) if value.is_poly() and value else None
    rendered = fac.format(args.unicode) if fac else value.format(args.unicode)
    name = f"<J_{args.mu.label()} J_{args.nu.label()}, J_{args.lam.label()}>"
    payload = {
        "mu": list(args.mu),
        "nu": list(args.nu),
        "lambda": list(args.lam),
        "value": value.to_json(),
        "factored": fac.to_json() if fac else None,
        "text": rendered,
    }
    _emit(args, f"{name} = {rendered}", payload)
    return 0


def _assignment_text(sp, header: str, unicode: bool) -> str:
    value = AlphaRat.coerce(sp.value)
    rendered = value.format(unicode)
    if value.is_poly() and value:
        fac = factor_linear(value.as_poly(), FACTOR_BOUND)
        if fac is not None:
            rendered = fac.format(unicode)
    return f"{header}\n\n{sp.render()}\n\nvalue = {rendered}"


def cmd_hooks(args) -> int:
    mu, m, n = args.mu, args.m, args.n
    if args.hooks_kind == "rect":
        sp = rectangular_assignment(mu, m, n, form=args.form, variant=args.variant)
        other = complement(mu, m, n)
        lam = rectangle(m, n)
        payload = sp.to_json()
    else:
        dec = decompose_wrt_rectangle(mu, m, n)
        sp = rect_union_assignment(mu, m, n, variant=args.variant, form=args.form)
        other, lam = dec.sigma_bar, dec.union
        payload = sp.to_json()
        payload["factored_form"] = union_factored_form(mu, m, n).to_json()
    kind = "g" if args.form == "lr" else "<J J, J>"
    header = f"{kind} for mu={mu.label()}, nu={other.label()}, lambda={lam.label()} (variant {args.variant})"
    _emit(args, _assignment_text(sp, header, args.unicode), payload)
    return 0


def cmd_verify(args) -> int:
    name = args.suite
    jobs = args.jobs
    if name == "flip":
        if (args.m is None) != (args.n is None):
            raise UsageError("--m and --n must be given together")
        params = {"m": args.m, "n": args.n} if args.m else {"max_area": args.max_area}
        reports = [suites.run_suite("flip", jobs, **params), suites.run_suite("mirror", jobs, **params)]
    elif name == "pole-order":
        reports = [suites.run_suite(name, jobs, max_size=args.max_size, points=args.points, seed=args.seed)]
    elif name == "rect-union":
        reports = [suites.run_suite(name, jobs, max_size=args.max_size, max_side=args.max_side)]
    elif name in ("rect", "quadrants", "support"):
        reports = [suites.run_suite(name, jobs, max_area=args.max_area)]
    else:
        reports = [suites.run_suite(name, jobs, max_size=args.max_size)]
    ok = all(r.ok for r in reports)
    text = "\n".join(r.format() for r in reports)
    _emit(args, text, {"status": "ok" if ok else "fail", "reports": [r.to_json() for r in reports]})
    return 0 if ok else 1


# -- parser -------------------------------------------------------------------

VERIFY_DEFAULTS = {
    "sum-product": ("max_size", 6),
    "norms": ("max_size", 7),
    "flip": ("max_area", 12),
    "rect-union": ("max_size", 9),
    "rect": ("max_area", 9),
    "pieri": ("max_size", 7),
    "expansion": ("max_size", 8),
    "quadrants": ("max_area", 9),
    "pole-order": ("max_size", 6),
    "stanley": ("max_size", 7),
    "support": ("max_area", 10),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--unicode", action="store_true", help="render alpha as α with superscripts")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for suites")

    parser = argparse.ArgumentParser(prog="jack", description="Jack symmetric function toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="expand J_lambda")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--basis", choices=["monomial", "powersum", "both"], default="both")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson table of J_mu J_nu")
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--nu", type=_partition_arg, required=True)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("stanley", parents=[common], help="<J_mu J_nu, J_lambda>")
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--nu", type=_partition_arg, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.set_defaults(func=cmd_stanley)

    p = sub.add_parser("hooks", help="hook assignments")
    hsub = p.add_subparsers(dest="hooks_kind", required=True)
    for kind in ("rect", "rect-union"):
        h = hsub.add_parser(kind, parents=[common])
        h.add_argument("--mu", type=_partition_arg, required=True)
        h.add_argument("--m", type=int, required=True)
        h.add_argument("--n", type=int, required=True)
        h.add_argument("--variant", choices=["A", "B"], default="A")
        h.add_argument("--form", choices=["stanley", "lr"], default="stanley")
        h.set_defaults(func=cmd_hooks)

    p = sub.add_parser("verify", help="verification suites")
    vsub = p.add_subparsers(dest="suite", required=True)
    for name, (param, default) in VERIFY_DEFAULTS.items():
        v = vsub.add_parser(name, parents=[common])
        flag = "--" + param.replace("_", "-")
        v.add_argument(flag, dest=param, type=int, default=default)
        if name == "flip":
            v.add_argument("--m", type=int)
            v.add_argument("--n", type=int)
        if name == "rect-union":
            v.add_argument("--max-side", type=int, default=4)
        if name == "pole-order":
            v.add_argument("--points", type=int, default=200)
            v.add_argument("--seed", type=int, default=0)
        v.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", 1) < 1:
        sys.stderr.write("jack: --jobs must be at least 1\n")
        return 2
    for attr in ("m", "n"):
        val = getattr(args, attr, None)
        if val is not None and val < 1:
            sys.stderr.write(f"jack: --{attr} must be positive\n")
            return 2
    try:
        return args.func(args)
    except (UsageError, JackError, ValueError) as exc:
        sys.stderr.write(f"jack: error: {exc}\n")
        return 2


def run(argv: Optional[Sequence[str]] = None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
