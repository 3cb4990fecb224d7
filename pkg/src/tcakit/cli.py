"""Command-line interface. Every subcommand prints one JSON document (or CSV for tables)."""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

from . import dims, growth, invariants, symfunc, tensor_algebra
from .errors import TcaError
from .partitions import Partition, enumerate_partitions


@dataclass
class CommandResult:
    command: list[str]
    parameters: dict
    payload: dict | None = None
    text: str | None = None
    exit_code: int = 0
    error: str | None = None

    def render(self) -> str:
        if self.text is not None:
            return self.text
        return json.dumps(self.payload, indent=2) + "\n"


def _partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _window_arg(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must look like 200:400, got {text!r}") from None
    return lo, hi


def _load_group(path: str) -> invariants.MatrixGroup:
    cap = os.environ.get("TCAKIT_GROUP_CAP")
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise TcaError(f"cannot read group file {path}: {exc}") from None
    return invariants.MatrixGroup.from_json(data, cap=int(cap) if cap else None)


def _mult_json(mults: dict) -> dict[str, int]:
    return {str(lam): c for lam, c in mults.items()}


# -- handlers -------------------------------------------------------------


def cmd_partitions_enum(args) -> dict:
    parts = enumerate_partitions(args.n, args.max_parts)
    return {"n": args.n, "max_parts": args.max_parts, "count": len(parts), "partitions": [p.to_json() for p in parts]}


def cmd_dim_schur(args) -> dict:
    return {"dim": dims.schur_dim(args.shape, args.rank)}


def cmd_dim_specht(args) -> dict:
    return {"dim": dims.specht_dim(args.shape)}


def cmd_schur_weyl(args) -> dict:
    mults = tensor_algebra.schur_weyl_decompose(args.rank, args.degree)
    return {"rank": args.rank, "degree": args.degree, "multiplicities": _mult_json(mults)}


def cmd_character_table(args) -> dict:
    return tensor_algebra.character_table(args.degree).to_json()


def cmd_lr(args) -> dict:
    return symfunc.lr_product(args.mu, args.nu).to_json()


def cmd_schur_functor(args) -> dict:
    try:
        text = sys.stdin.read() if args.expansion == "-" else Path(args.expansion).read_text()
        expansion = symfunc.SchurExpansion.from_json(text)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise TcaError(f"cannot read expansion {args.expansion}: {exc}") from None
    return {"degree": args.degree, "dim": symfunc.flat_weight_dim(expansion, args.degree)}


def cmd_inv_dims(args) -> dict:
    G = _load_group(args.group)
    if args.method == "molien":
        values = invariants.molien_dims(G, args.max_degree)
    else:
        values = invariants.fixed_space_dims(G, args.max_degree)
    return {
        "order": G.order,
        "field": G.field.to_json(),
        "method": args.method,
        "degrees": list(range(args.max_degree + 1)),
        "dims": values,
    }


def cmd_inv_character(args) -> dict:
    G = _load_group(args.group)
    chi, mults = invariants.equivariant_character(G, args.degree)
    return {"order": G.order, "character": chi.to_json(), "multiplicities": _mult_json(mults)}


def cmd_inv_basis(args) -> dict:
    G = _load_group(args.group)
    return invariants.fixed_space(G, args.degree).to_json()


def cmd_inv_newgens(args) -> dict:
    G = _load_group(args.group)
    return {
        "order": G.order,
        "field": G.field.to_json(),
        "degrees": list(range(1, args.max_degree + 1)),
        "new_generators": invariants.new_generators_dims(G, args.max_degree),
    }


def cmd_inv_crosscheck(args) -> dict:
    G = _load_group(args.group)
    multilinear = invariants.multilinear_fixed_dim(G, args.degree)
    kernel = invariants.fixed_space(G, args.degree).dim
    return {"degree": args.degree, "multilinear_dim": multilinear, "fixed_space_dim": kernel, "passed": multilinear == kernel}


def cmd_gk_free(args):
    return growth.gk_free_tca(args.rank, args.char, args.max)


def cmd_gk_sym(args):
    return growth.gk_sym_triv2(args.max, args.char)


def cmd_gk_sl2(args):
    return growth.gk_sl2_invariants(args.char, args.max)


def cmd_gk_slope(args) -> dict:
    try:
        text = sys.stdin.read() if args.table == "-" else Path(args.table).read_text()
    except OSError as exc:
        raise TcaError(f"cannot read table {args.table}: {exc}") from None
    try:
        table = growth.GrowthTable.parse(text)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise TcaError(f"malformed growth table: {exc}") from None
    return growth.estimate_slope(table, args.window).to_json()


# -- parser ---------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tcakit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("partitions", help="partition enumeration")
    psub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = psub.add_parser("enum")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--max-parts", type=int)
    q.set_defaults(func=cmd_partitions_enum)

    p = sub.add_parser("dim", help="Schur and Specht module dimensions")
    psub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = psub.add_parser("schur")
    q.add_argument("--shape", type=_partition_arg, required=True)
    q.add_argument("--rank", type=int, required=True)
    q.set_defaults(func=cmd_dim_schur)
    q = psub.add_parser("specht")
    q.add_argument("--shape", type=_partition_arg, required=True)
    q.set_defaults(func=cmd_dim_specht)

    q = sub.add_parser("schur-weyl", help="Specht multiplicities in T(k^m)_n")
    q.add_argument("--rank", type=int, required=True)
    q.add_argument("--degree", type=int, required=True)
    q.set_defaults(func=cmd_schur_weyl)

    q = sub.add_parser("character-table", help="character table of S_n")
    q.add_argument("--degree", type=int, required=True)
    q.set_defaults(func=cmd_character_table)

    q = sub.add_parser("lr", help="Littlewood-Richardson product s_mu * s_nu")
    q.add_argument("--mu", type=_partition_arg, required=True)
    q.add_argument("--nu", type=_partition_arg, required=True)
    q.set_defaults(func=cmd_lr)

    q = sub.add_parser("schur-functor", help="flat weight dimension of a Schur expansion")
    q.add_argument("--expansion", required=True, help="JSON file ('-' for stdin)")
    q.add_argument("--degree", type=int, required=True)
    q.set_defaults(func=cmd_schur_functor)

    p = sub.add_parser("invariants", help="finite-group invariants of T(W)")
    psub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = psub.add_parser("dims")
    q.add_argument("--group", required=True)
    q.add_argument("--max-degree", type=int, required=True)
    q.add_argument("--method", choices=["molien", "kernel"], default="kernel")
    q.set_defaults(func=cmd_inv_dims)
    q = psub.add_parser("character")
    q.add_argument("--group", required=True)
    q.add_argument("--degree", type=int, required=True)
    q.set_defaults(func=cmd_inv_character)
    q = psub.add_parser("basis")
    q.add_argument("--group", required=True)
    q.add_argument("--degree", type=int, required=True)
    q.set_defaults(func=cmd_inv_basis)
    q = psub.add_parser("newgens")
    q.add_argument("--group", required=True)
    q.add_argument("--max-degree", type=int, required=True)
    q.set_defaults(func=cmd_inv_newgens)
    q = psub.add_parser("crosscheck")
    q.add_argument("--group", required=True)
    q.add_argument("--degree", type=int, required=True)
    q.set_defaults(func=cmd_inv_crosscheck)

    p = sub.add_parser("gk", help="Gelfand-Kirillov growth tables")
    psub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = psub.add_parser("free")
    q.add_argument("--rank", type=int, required=True)
    q.add_argument("--char", type=int, default=0)
    q.add_argument("--max", type=int, required=True)
    q.set_defaults(func=cmd_gk_free, table=True)
    q = psub.add_parser("sym-triv2")
    q.add_argument("--char", type=int, default=0)
    q.add_argument("--max", type=int, required=True)
    q.set_defaults(func=cmd_gk_sym, table=True)
    q = psub.add_parser("sl2")
    q.add_argument("--char", type=int, default=0)
    q.add_argument("--max", type=int, required=True)
    q.set_defaults(func=cmd_gk_sl2, table=True)
    for q in (psub.choices["free"], psub.choices["sym-triv2"], psub.choices["sl2"]):
        q.add_argument("--format", choices=["json", "csv"], default="json")
    q = psub.add_parser("slope")
    q.add_argument("--table", default="-", help="CSV or JSON table file ('-' for stdin)")
    q.add_argument("--window", type=_window_arg, required=True)
    q.set_defaults(func=cmd_gk_slope)

    return parser


def run(argv: Sequence[str]) -> CommandResult:
    argv = list(argv)
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        return CommandResult(argv, {}, exit_code=2, error=str(exc))
    params = {k: (str(v) if isinstance(v, Partition) else v) for k, v in vars(args).items() if k not in ("func", "table")}
    try:
        out = args.func(args)
    except (TcaError, ValueError) as exc:
        return CommandResult(argv, params, exit_code=1, error=f"error: {exc}")
    if isinstance(out, growth.GrowthTable):
        if args.format == "csv":
            return CommandResult(argv, params, payload=out.to_json(), text=out.to_csv())
        out = out.to_json()
    return CommandResult(argv, params, payload=out)


def main(argv: Sequence[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.exit_code:
        print(result.error.splitlines()[0], file=sys.stderr)
    else:
        sys.stdout.write(result.render())
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
