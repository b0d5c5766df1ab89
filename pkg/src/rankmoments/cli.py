"""Batch command-line front end with machine-readable output.

Subcommands: ``rankdist``, ``moments``, ``durfee count|enumerate``, ``gf``,
``verify``. Formats: ``table`` (default, human), ``csv`` (unquoted, numeric
fields only), ``json`` (canonical machine format; large values rendered as
exact decimal strings). Output is byte-stable for identical inputs.

Exit codes: 0 success / all verifications pass, 1 verification failure,
2 usage error, 3 refusal (a desk-scale cap was exceeded).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import durfee, identities, moments, qseries
from .config import CapExceededError
from .partitions import rank_distribution

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_REFUSED = 3

FORMATS = ("table", "csv", "json")


@dataclass
class OutputConfig:
    format: str = "table"
    destination: str | None = None  # None = stdout


def _emit(text: str, cfg: OutputConfig) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if cfg.destination:
        with open(cfg.destination, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _cmd_rankdist(args: argparse.Namespace, cfg: OutputConfig) -> int:
    dist = rank_distribution(args.n)
    items = dist.sorted_items()
    if cfg.format == "json":
        payload = {
            "n": args.n,
            "counts": [{"m": m, "count": str(c)} for m, c in items],
        }
        _emit(_json_dumps(payload), cfg)
    elif cfg.format == "csv":
        _emit("\n".join(["m,count"] + [f"{m},{c}" for m, c in items]), cfg)
    else:
        width = max(len(str(m)) for m, _ in items)
        lines = [f"rank distribution of n={args.n}"]
        lines += [f"{m:>{width}}  {c}" for m, c in items]
        _emit("\n".join(lines), cfg)
    return EXIT_OK


def _cmd_moments(args: argparse.Namespace, cfg: OutputConfig) -> int:
    table = moments.MomentTable.compute(args.kind, args.index, args.n_max)
    items = sorted(table.values.items())
    if cfg.format == "json":
        payload = {
            "kind": table.kind,
            "index": table.index,
            "values": [{"n": n, "value": str(v)} for n, v in items],
        }
        _emit(_json_dumps(payload), cfg)
    elif cfg.format == "csv":
        _emit("\n".join(["n,value"] + [f"{n},{v}" for n, v in items]), cfg)
    else:
        lines = [f"{table.kind}[{table.index}]"]
        lines += [f"{n:>4}  {v}" for n, v in items]
        _emit("\n".join(lines), cfg)
    return EXIT_OK


def _cmd_durfee_count(args: argparse.Namespace, cfg: OutputConfig) -> int:
    if (args.rank_index is None) != (args.filter is None):
        raise UsageError("--rank-index and --filter must be given together")
    if args.filter is None:
        count = durfee.count_marked(args.marks, args.n)
        fields = {"k": args.marks, "n": args.n}
    else:
        count = durfee.count_ith_rank_filtered(
            args.marks, args.rank_index, args.filter, args.n
        )
        fields = {
            "k": args.marks,
            "n": args.n,
            "rank_index": args.rank_index,
            "filter": args.filter,
        }
    if cfg.format == "json":
        _emit(_json_dumps({**fields, "count": str(count)}), cfg)
    elif cfg.format == "csv":
        keys = list(fields) + ["count"]
        vals = [str(fields[k]) for k in fields] + [str(count)]
        _emit(",".join(keys) + "\n" + ",".join(vals), cfg)
    else:
        _emit(str(count), cfg)
    return EXIT_OK


def _cmd_durfee_enumerate(args: argparse.Namespace, cfg: OutputConfig) -> int:
    if cfg.format == "csv":
        raise UsageError("csv does not suit nested symbol streams; use json")
    symbols = durfee.enumerate_marked(args.marks, args.n)
    if cfg.format == "json":
        lines = [
            json.dumps(sym.to_json_dict(), sort_keys=True) for sym in symbols
        ]
    else:
        lines = [str(sym) + f" ranks={durfee.ranks(sym)}" for sym in symbols]
    _emit("\n".join(lines) if lines else "", cfg)
    return EXIT_OK


def _cmd_gf(args: argparse.Namespace, cfg: OutputConfig) -> int:
    which = args.which
    if which in ("eta-bar-odd", "eta-bar-even", "marked-zero", "marked-positive"):
        if args.k is None:
            raise UsageError(f"--k is required for --which {which}")
    if which == "rank" and args.m is None:
        raise UsageError("--m is required for --which rank")
    max_x = args.max_x_degree if args.max_x_degree is not None else args.order
    if which == "eta-bar-odd":
        series = qseries.eta_bar_odd_gf(args.k, args.order)
    elif which == "eta-bar-even":
        series = qseries.eta_bar_even_gf(args.k, args.order)
    elif which == "rank":
        series = qseries.rank_gf(args.m, args.order)
    elif which == "marked-zero":
        series = qseries.marked_zero_rank_gf(args.k, args.order, max(max_x, 1))
    else:  # marked-positive
        series = qseries.marked_positive_rank_gf(args.k, args.order, max(max_x, 1))

    if cfg.format == "json":
        _emit(_json_dumps(series.to_json_dict()), cfg)
    elif cfg.format == "csv":
        if series.num_vars == 0:
            rows = ["n,coefficient"]
            rows += [
                f"{n},{series.coefficient_at(n)}" for n in range(series.order + 1)
            ]
        else:
            head = ",".join(["q"] + [f"x{i+1}" for i in range(series.num_vars)] + ["c"])
            rows = [head]
            for n in range(series.order + 1):
                for exps, c in sorted(series.coefficient(n).terms.items()):
                    rows.append(",".join([str(n), *map(str, exps), str(c)]))
        _emit("\n".join(rows), cfg)
    else:
        lines = []
        for n in range(series.order + 1):
            poly = series.coefficient(n)
            if series.num_vars == 0:
                lines.append(f"q^{n}: {poly.constant_value()}")
            else:
                lines.append(f"q^{n}: {poly!r}")
        _emit("\n".join(lines), cfg)
    return EXIT_OK


def _verify_reports(args: argparse.Namespace) -> list[identities.VerificationReport]:
    name = args.identity
    if name == "all":
        return identities.verify_all(args.profile)
    if name == "andrews":
        return [identities.verify_andrews(args.k, args.n_max)]
    if name == "zero-rank":
        return [identities.verify_zero_rank(args.k, args.n_max, args.i)]
    if name == "positive-rank":
        return [identities.verify_positive_rank(args.k, args.n_max, args.i)]
    if name == "negative-rank":
        return [identities.verify_negative_rank(args.k, args.n_max, args.i)]
    if name == "ji":
        return [identities.verify_ji(args.k, args.n_max, args.m_bound)]
    if name == "symmetry":
        return [identities.verify_symmetry(args.k, args.n_max)]
    if name == "gf":
        return [identities.verify_gf(args.k, args.n_max, args.which)]
    if name == "moment-relation":
        return [identities.verify_moment_relation(args.k, args.n_max)]
    if name == "solution-counts":
        return [identities.verify_solution_counts(args.k, args.n_max)]
    raise UsageError(f"unknown identity {name!r}")


def _cmd_verify(args: argparse.Namespace, cfg: OutputConfig) -> int:
    reports = _verify_reports(args)
    if cfg.format == "json":
        payload = [r.to_json_dict() for r in reports]
        _emit(_json_dumps(payload[0] if len(payload) == 1 else payload), cfg)
    elif cfg.format == "csv":
        rows = ["identity,status,cases_checked,counterexamples"]
        rows += [
            f"{r.identity_id},{r.status},{r.cases_checked},{len(r.counterexamples)}"
            for r in reports
        ]
        _emit("\n".join(rows), cfg)
    else:
        lines = []
        for r in reports:
            params = " ".join(f"{k}={v}" for k, v in sorted(r.parameters.items()))
            lines.append(
                f"{r.status.upper():7} {r.identity_id:15} {params} "
                f"({r.cases_checked} cases)"
            )
            for ce in r.counterexamples[:5]:
                lines.append(f"        counterexample {ce}")
        _emit("\n".join(lines), cfg)
    if any(r.status == "fail" for r in reports):
        return EXIT_FAIL
    if any(r.status == "refused" for r in reports):
        return EXIT_REFUSED
    return EXIT_OK


class UsageError(Exception):
    pass


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def _nonnegative(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {n}")
    return n


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format", choices=FORMATS, default="table", help="output format"
    )
    p.add_argument(
        "--output", metavar="PATH", default=None, help="write to file instead of stdout"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankmoments",
        description=(
            "Exact Dyson-rank statistics of integer partitions: rank "
            "distributions, moments, k-marked Durfee symbols, generating "
            "functions, and an identity-verification suite."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rankdist", help="rank distribution N(m, n) for fixed n")
    p.add_argument("--n", type=_positive, required=True, help="partition weight, n >= 1")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_rankdist)

    p = sub.add_parser("moments", help="a moment family over n = 1..n-max")
    p.add_argument(
        "--kind", choices=moments.MOMENT_KINDS, required=True,
        help="n: ordinary, nbar: positive, eta: symmetrized, eta-bar: symmetrized positive",
    )
    p.add_argument("--index", type=_nonnegative, required=True, help="moment index")
    p.add_argument("--n-max", type=_positive, required=True)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_moments)

    p = sub.add_parser("durfee", help="k-marked Durfee symbols")
    dsub = p.add_subparsers(dest="durfee_command", required=True)

    pc = dsub.add_parser("count", help="count symbols, optionally rank-filtered")
    pc.add_argument("--marks", type=_positive, required=True, help="number of marks k")
    pc.add_argument("--n", type=_positive, required=True)
    pc.add_argument("--rank-index", type=_positive, default=None, help="index i of the filtered rank")
    pc.add_argument("--filter", choices=("zero", "positive", "negative"), default=None)
    _add_output_flags(pc)
    pc.set_defaults(func=_cmd_durfee_count)

    pe = dsub.add_parser("enumerate", help="stream every symbol (json or table)")
    pe.add_argument("--marks", type=_positive, required=True)
    pe.add_argument("--n", type=_positive, required=True)
    _add_output_flags(pe)
    pe.set_defaults(func=_cmd_durfee_enumerate)

    p = sub.add_parser("gf", help="truncated generating-function expansion")
    p.add_argument(
        "--which",
        choices=("eta-bar-odd", "eta-bar-even", "rank", "marked-zero", "marked-positive"),
        required=True,
    )
    p.add_argument("--k", type=_positive, default=None, help="moment / mark parameter k")
    p.add_argument("--m", type=int, default=None, help="fixed rank m (for --which rank)")
    p.add_argument("--order", type=_nonnegative, required=True, help="truncation order")
    p.add_argument(
        "--max-x-degree", type=_positive, default=None,
        help="bound on auxiliary-variable exponents (default: order)",
    )
    _add_output_flags(p)
    p.set_defaults(func=_cmd_gf)

    p = sub.add_parser("verify", help="run identity verifications")
    p.add_argument("identity", choices=("all",) + identities.IDENTITY_IDS)
    p.add_argument("--profile", choices=("quick", "full"), default="quick",
                   help="parameter profile for 'all'")
    p.add_argument("--k", type=_positive, default=1)
    p.add_argument("--i", type=_positive, default=None, help="rank index (default: all)")
    p.add_argument("--n-max", type=_positive, default=10)
    p.add_argument("--m-bound", type=_nonnegative, default=2)
    p.add_argument("--which", choices=("odd", "even", "rank_gf", "marked"), default="odd")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = OutputConfig(format=args.format, destination=args.output)
    try:
        return args.func(args, cfg)
    except UsageError as exc:
        parser.error(str(exc))  # exits 2
        raise AssertionError("unreachable")
    except CapExceededError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except ValueError as exc:
        parser.error(str(exc))
        raise AssertionError("unreachable")


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
