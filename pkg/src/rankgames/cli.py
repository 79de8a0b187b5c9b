"""Command line interface: construct, solve, verify, bound, approximate."""

import argparse
import sys

from .approx import perturb_game, svd_truncate
from .approx import approx_absolute, approx_relative
from .bounds import bound_report, rank_component_bound
from .enumeration import (
    DEFAULT_CAP,
    enumerate_equilibria,
    solve_zero_sum,
)
from .errors import CapExceededError, GameFormatError
from .families import FamilySpec, build_family
from .gamefiles import (
    encode_report,
    format_decomposition_text,
    format_game_text,
    load_decomposition,
    load_game,
    parse_profile_text,
    report_json,
)
from .games import loss
from .linalg import as_fraction, matrix_rank, rank_factorize

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_CAP = 4

_SIMPLE_FAMILIES = ("rank1", "sqdiff", "identity")


def _emit(text, note, out_path):
    """Write text to out_path (note to stdout), or text to stdout (note to
    stderr) so piped output stays clean."""
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(note)
    else:
        sys.stdout.write(text)
        print(note, file=sys.stderr)


def _parse_component_spec(text, flag):
    parts = text.split(":")
    if len(parts) != 2 or parts[0] not in _SIMPLE_FAMILIES:
        raise ValueError(
            f"{flag} must be TAG:D with TAG one of {', '.join(_SIMPLE_FAMILIES)}"
        )
    try:
        d = int(parts[1])
    except ValueError as exc:
        raise ValueError(f"{flag}: D must be an integer") from exc
    return FamilySpec(parts[0], d=d)


def cmd_gen(args):
    if args.family == "block":
        if not args.inner or not args.outer:
            raise ValueError("family 'block' needs --inner and --outer")
        spec = FamilySpec(
            "block",
            inner=_parse_component_spec(args.inner, "--inner"),
            outer=_parse_component_spec(args.outer, "--outer"),
        )
    else:
        if args.d is None:
            raise ValueError(f"family {args.family!r} needs --d")
        spec = FamilySpec(args.family, d=args.d)
    game = build_family(spec)
    _emit(format_game_text(game), f"rank(A+B) = {game.rank_c}", args.out)
    return EXIT_OK


def _write_report(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _components_results(game, eqset):
    rank_a = matrix_rank(game.a)
    rank_b = matrix_rank(game.b)
    k = max(rank_a, rank_b)
    bound = None
    if game.m == game.n and k + 1 <= game.m:
        bound = rank_component_bound(game.m, k)
    return {
        "component_count": eqset.component_count,
        "components": [list(c) for c in eqset.components],
        "rank_a": rank_a,
        "rank_b": rank_b,
        "component_bound": bound,
    }


def cmd_solve(args):
    game = load_game(args.game)
    params = {"game": args.game, "mode": args.mode, "m": game.m, "n": game.n}
    if args.mode == "zerosum":
        report = solve_zero_sum(game)
        results = {
            "value": report.payoff1,
            "equilibrium": encode_report(report),
        }
    else:
        eqset = enumerate_equilibria(game, cap=args.cap)
        if args.mode == "components":
            results = _components_results(game, eqset)
        else:
            results = {
                "count": len(eqset.reports),
                "equilibria": [encode_report(r) for r in eqset.reports],
                "component_count": eqset.component_count,
                "components": [list(c) for c in eqset.components],
            }
    _write_report(report_json("solve", params, results), args.out)
    return EXIT_OK


def cmd_components(args):
    game = load_game(args.game)
    eqset = enumerate_equilibria(game, cap=args.cap)
    params = {"game": args.game, "m": game.m, "n": game.n}
    results = _components_results(game, eqset)
    _write_report(report_json("components", params, results), args.out)
    return EXIT_OK


def cmd_approx(args):
    game = load_game(args.game)
    eps = as_fraction(args.eps)
    params = {
        "game": args.game,
        "scheme": args.scheme,
        "eps": eps,
        "m": game.m,
        "n": game.n,
    }
    if args.scheme == "abs":
        report = approx_absolute(game, eps)
        results = {
            "equilibrium": encode_report(report),
            "target": eps * game.norm_c,
        }
    else:
        decomp = load_decomposition(args.decomp) if args.decomp else None
        report = approx_relative(game, eps, decomp)
        results = {
            "equilibrium": encode_report(report),
            "rho": report.parameter,
        }
    _write_report(report_json("approx", params, results), args.out)
    return EXIT_OK


def cmd_verify(args):
    game = load_game(args.game)
    profile = parse_profile_text(args.profile)
    value = loss(game, profile)
    print(f"loss = {value}")
    if args.eps is None:
        ok = value == 0
        print("verified: exact equilibrium" if ok else "failed: loss is nonzero")
    else:
        eps = as_fraction(args.eps)
        if eps < 0:
            raise ValueError("eps must be nonnegative")
        threshold = eps * game.norm_c
        ok = value <= threshold
        print(
            f"verified: loss <= {threshold} = eps * |A+B|"
            if ok
            else f"failed: loss exceeds {threshold} = eps * |A+B|"
        )
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_bounds(args):
    rep = bound_report(args.d, args.k)
    print(f"d = {rep.d}")
    if rep.tau_lower is not None:
        print(f"tau({rep.d}) = {rep.tau_lower} (achievable equilibrium count)")
    print(
        f"Phi({rep.d},{2 * rep.d}) - 1 = {rep.keiding_upper} "
        "(upper bound on equilibria)"
    )
    if rep.k is not None:
        if rep.component_bound is None:
            print(f"component bound: undefined for k = {rep.k} (needs k + 1 <= d)")
        else:
            print(
                f"component bound C({rep.d},{rep.k + 1})^2 = {rep.component_bound} "
                f"(rank(A), rank(B) <= {rep.k})"
            )
    return EXIT_OK


def cmd_rankfact(args):
    game = load_game(args.game)
    fact = rank_factorize(game.c)
    note = f"rank(A+B) = {fact.rank}; nonnegative = {fact.nonnegative}"
    _emit(format_decomposition_text(fact), note, args.out)
    return EXIT_OK


def cmd_perturb(args):
    game = load_game(args.game)
    if args.k is None or args.k < 0:
        raise ValueError("--k must be a nonnegative integer")
    truncated = svd_truncate(game.c, args.k)
    pert = perturb_game(game, truncated)
    note = (
        f"eps = {pert.eps}; rank(A+B) = {pert.perturbed.rank_c}; "
        f"exact equilibria of the original stay 3*eps-approximate"
    )
    _emit(format_game_text(pert.perturbed), note, args.out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rankgames",
        description="Exact tools for bimatrix games with low payoff-sum rank.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="construct a family game, write its game file")
    g.add_argument("family", choices=_SIMPLE_FAMILIES + ("block",))
    g.add_argument("--d", type=int, help="dimension for rank1/sqdiff/identity")
    g.add_argument("--inner", help="block: inner component as TAG:D")
    g.add_argument("--outer", help="block: outer component as TAG:D")
    g.add_argument("--out", help="game file path (default: stdout)")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="enumerate equilibria or solve zero-sum")
    s.add_argument("game", help="game file path")
    s.add_argument("--mode", choices=["enum", "zerosum", "components"],
                   default="enum")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help=f"size guard on m+n (default {DEFAULT_CAP})")
    s.add_argument("--out", help="report path (default: stdout)")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("components", help="count connected equilibrium components")
    c.add_argument("game")
    c.add_argument("--cap", type=int, default=DEFAULT_CAP)
    c.add_argument("--out")
    c.set_defaults(func=cmd_components)

    a = sub.add_parser("approx", help="grid-LP approximate equilibrium")
    a.add_argument("game")
    a.add_argument("--scheme", choices=["abs", "rel"], required=True)
    a.add_argument("--eps", required=True, help="fraction like 1/10")
    a.add_argument("--decomp", help="nonnegative decomposition file (rel)")
    a.add_argument("--out")
    a.set_defaults(func=cmd_approx)

    v = sub.add_parser("verify", help="check a profile against a game")
    v.add_argument("game")
    v.add_argument("--profile", required=True, help="'x1,..,xm;y1,..,yn'")
    v.add_argument("--eps", help="approximate check at this eps (default exact)")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", help="print counting bounds for dimension d")
    b.add_argument("--d", type=int, required=True)
    b.add_argument("--k", type=int, help="also bound components at rank k")
    b.set_defaults(func=cmd_bounds)

    r = sub.add_parser("rankfact", help="rank-factorize the payoff sum")
    r.add_argument("game")
    r.add_argument("--out", help="decomposition file path (default: stdout)")
    r.set_defaults(func=cmd_rankfact)

    p = sub.add_parser("perturb", help="truncate the payoff sum to rank k and "
                                       "rewrite the game around it")
    p.add_argument("game")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", help="game file path (default: stdout)")
    p.set_defaults(func=cmd_perturb)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GameFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
