"""Command-line front end: ``signed-foata <subcommand> ...``.

Exit status is 0 on success or a passing verification, 1 when a
verification fails, and 2 on usage, parse or group-membership errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import bijections, canonical, foata, statistics, verify
from .perm import format_window, parse_window, parse_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _subset(text: str) -> frozenset[int]:
    text = text.strip().strip("{}")
    if not text:
        return frozenset()
    try:
        return frozenset(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad subset {text!r}; expected e.g. 1,3,4") from None


def _fmt_set(xs) -> str:
    return "{" + ",".join(map(str, sorted(xs))) + "}"


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def cmd_stats(args) -> int:
    b = statistics.statistics_bundle(parse_window(args.window))
    d = b.to_dict()
    lines = [f"{k} = {_fmt_set(v) if k.endswith('set') or k == 'neg_of_inverse' else v}"
             for k, v in d.items() if v is not None]
    _emit(args, d, "\n".join(lines))
    return EXIT_OK


def _psi_lines(p: bijections.PsiStages, name: str = "v") -> list[str]:
    return [
        f"{name} A-word = {p.v_word}",
        f"f({name}) = {p.f_word} = {p.f_perm}",
        f"rev(f({name})) = {format_window(p.reversed_f)}",
        f"Phi(rev(f({name}))) = {format_window(p.phi_of_reversed)}",
        f"rtlPhi(f({name})) = {p.rtl_phi} = {p.rtl_phi_word}",
        f"psi({name}) = g_{name}(...) = {p.lifted_word} = {p.result}",
    ]


def _psi_payload(p: bijections.PsiStages) -> dict:
    return {
        "v": list(p.v), "v_word": str(p.v_word), "f": list(p.f_perm),
        "f_word": str(p.f_word), "rev_f": list(p.reversed_f),
        "phi_rev_f": list(p.phi_of_reversed), "rtl_phi": list(p.rtl_phi),
        "rtl_phi_word": str(p.rtl_phi_word), "lifted_word": str(p.lifted_word),
        "psi": list(p.result),
    }


def cmd_psi(args) -> int:
    p = bijections.psi_stages(parse_window(args.window))
    payload = {"psi": list(p.result)}
    if args.stages:
        payload = _psi_payload(p)
    text = "\n".join(_psi_lines(p)) if args.stages else str(p.result)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_theta(args) -> int:
    pi = parse_window(args.window)
    t = bijections.theta_stages(pi, check=args.check)
    payload = {"theta": list(t.result)}
    text = str(t.result)
    if args.stages:
        d = t.decomposition
        payload.update(
            pi=list(pi), des_A_set=sorted(statistics.des_A_set(pi)),
            nrmaj=statistics.nrmaj(pi), sigma=list(d.sigma), u=list(d.u),
            stages=_psi_payload(t.psi), ell_L_theta=statistics.ell_L(t.result),
        )
        text = "\n".join([
            f"pi = {pi}",
            f"Des_A(pi) = {_fmt_set(statistics.des_A_set(pi))}",
            f"nrmaj(pi) = {statistics.nrmaj(pi)}",
            f"sigma = s(pi) = {d.sigma}",
            f"u = sigma^-1 pi = {d.u}",
            *_psi_lines(t.psi, "u"),
            f"theta(pi) = sigma psi(u) = {t.result}",
            f"ell_L(theta(pi)) = {statistics.ell_L(t.result)}",
        ])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_phi(args) -> int:
    word = parse_word(args.word)
    result = foata.phi(word)
    payload = {"phi": list(result)}
    text = format_window(result)
    if args.trace:
        splits, _ = foata.phi_trace(word)
        payload["trace"] = [[list(seg) for seg in s.segments] for s in splits]
        text = foata.format_trace(word)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_canonical(args) -> int:
    w = parse_window(args.window)
    word = canonical.s_factorize(w) if args.group == "s" else canonical.a_factorize(w)
    _emit(args, {"word": str(word), "letters": len(word), "rank": word.rank}, str(word))
    return EXIT_OK


def cmd_decompose(args) -> int:
    d = bijections.decompose(parse_window(args.window), check=True)
    _emit(args, {"sigma": list(d.sigma), "u": list(d.u)},
          f"sigma = {d.sigma}\nu = {d.u}")
    return EXIT_OK


def _poly(args, subset):
    group = args.group
    if args.statistic == "product":
        if group == "A":
            return verify.product_formula_A(args.rank)
        return verify.product_formula_L(args.rank, subset)
    return verify.poly_over(group, args.rank, args.statistic,
                            subset if group == "L" else None,
                            workers=args.workers, cap=args.cap)


def cmd_poly(args) -> int:
    if args.group == "A" and (args.subset is not None or args.all_subsets):
        raise ValueError("subsets only apply to --group L")
    if args.all_subsets:
        bs = verify.subsets(range(1, args.rank + 1))
    elif args.subset is not None:
        bs = [args.subset]
    else:
        bs = [frozenset(range(1, args.rank + 1))]
    rows = [(b, _poly(args, b)) for b in bs]
    if args.csv:
        out = csv.writer(sys.stdout, lineterminator="\n")
        out.writerow(["rank", "subset", "coefficients"])
        for b, p in rows:
            out.writerow([args.rank, ";".join(map(str, sorted(b))),
                          ";".join(map(str, p.coefficients))])
    elif args.json:
        print(json.dumps([
            {"rank": args.rank, "group": args.group, "statistic": args.statistic,
             "subset": sorted(b) if args.group == "L" else None,
             "coefficients": p.to_list()}
            for b, p in rows
        ] if args.all_subsets else {
            "rank": args.rank, "group": args.group, "statistic": args.statistic,
            "subset": sorted(bs[0]) if args.group == "L" else None,
            "coefficients": rows[0][1].to_list(),
        }))
    else:
        for b, p in rows:
            prefix = f"B={_fmt_set(b)}: " if args.all_subsets else ""
            print(prefix + str(p))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.identity == "equidist":
        if args.subset is None:
            reports = verify.check_all_subsets(args.rank, cap=args.cap)
        else:
            reports = [verify.check_equidistribution(args.rank, args.subset, cap=args.cap)]
    elif args.identity == "theta":
        reports = [verify.check_theta(args.rank, cap=args.cap)]
    elif args.identity == "psi":
        reports = [verify.check_psi(args.rank, cap=args.cap)]
    else:
        reports = [verify.check_alternating(args.rank, cap=args.cap)]
    if args.json:
        dicts = [r.to_dict() for r in reports]
        print(json.dumps(dicts if len(dicts) > 1 else dicts[0]))
    else:
        for r in reports:
            print(r.summary())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signed-foata",
        description="Statistics and MacMahon-type bijections on A_n and L_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=fn)
        return p

    p = add("stats", cmd_stats, "all statistics of a signed permutation")
    p.add_argument("window", help="e.g. 5,-1,2,-3,4")

    p = add("theta", cmd_theta, "the bijection theta on L_n")
    p.add_argument("window")
    p.add_argument("--stages", action="store_true", help="dump every intermediate value")
    p.add_argument("--check", action="store_true", help="verify the decomposition on the way")

    p = add("psi", cmd_psi, "the bijection psi on A_n")
    p.add_argument("window")
    p.add_argument("--stages", action="store_true", help="dump every intermediate value")

    p = add("phi", cmd_phi, "Foata's transformation of a word")
    p.add_argument("word", help="comma-separated integers, repeats allowed")
    p.add_argument("--trace", action="store_true", help="show the compartments at each step")

    p = add("canonical", cmd_canonical, "canonical presentation in S_n or A_n")
    p.add_argument("window")
    p.add_argument("--group", choices=["s", "a"], default="s")

    p = add("decompose", cmd_decompose, "pi = s(pi) * u")
    p.add_argument("window")

    p = add("poly", cmd_poly, "generating polynomial of a statistic")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--group", choices=["A", "L"], default="L")
    p.add_argument("--statistic", default="nrmaj",
                   choices=["nrmaj", "ell_L", "rmaj", "ell_A", "product"])
    p.add_argument("--subset", type=_subset, default=None,
                   help="restrict to Neg(pi^-1) inside B, e.g. 1,3 ('' is empty)")
    p.add_argument("--all-subsets", action="store_true")
    p.add_argument("--csv", action="store_true", help="CSV table (rank, subset, coefficients)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cap", type=int, default=verify.DEFAULT_RANK_CAP)

    p = add("verify", cmd_verify, "exhaustive check of an identity")
    p.add_argument("--identity", choices=["equidist", "theta", "psi", "altdist"], required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--subset", type=_subset, default=None,
                   help="one B for equidist (default: every B)")
    p.add_argument("--cap", type=int, default=verify.DEFAULT_RANK_CAP)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
