"""Command-line surface.

Every command reads and writes JSON; Markdown is emitted only for human
reports. Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .aggregation import profile_to_json, verify_core_threshold
from .axioms import classify
from .coalitions import Coalition
from .constructions import build, pairing_from_spec, product
from .diagonal import IndexOracle, decide_string, determining_tables
from .effectivity import derive_alpha_game, derive_exact_game
from .games import FiniteGame, PrefixGame
from .nakamura import (
    INFINITE,
    bounded_nakamura_witness,
    nakamura_number,
)
from .report import run_table_report
from .serialize import (
    dump_json,
    form_from_json,
    game_from_json,
    game_to_json,
    load_json,
    product_construction_json,
)


def _emit(payload: Any, out: str | None) -> None:
    if out:
        dump_json(out, payload)
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))


def _load_game(path: str) -> FiniteGame | PrefixGame:
    return game_from_json(load_json(path))


def _coalitions_json(coalitions: Sequence[Coalition]) -> list[list[int]]:
    return [list(c.members) for c in coalitions]


def _cmd_classify(args: argparse.Namespace) -> int:
    game = _load_game(args.game)
    if not isinstance(game, FiniteGame):
        raise ValueError("classify needs a finite game; prefix games only admit bounded evidence")
    sig, witness = classify(game)
    payload: dict[str, Any] = {
        "type": sig.type_index,
        "signature": sig.signature,
        "witnesses": {},
    }
    if witness.nonmonotonic:
        small, large = witness.nonmonotonic
        payload["witnesses"]["nonmonotonic"] = {
            "winning": list(small.members),
            "losing_superset": list(large.members),
        }
    if witness.nonproper:
        payload["witnesses"]["nonproper"] = list(witness.nonproper.members)
    if witness.nonstrong:
        payload["witnesses"]["nonstrong"] = list(witness.nonstrong.members)
    if witness.veto:
        payload["witnesses"]["veto_players"] = list(witness.veto.members)
    if witness.empty_family:
        payload["witnesses"]["empty_family"] = True
    _emit(payload, args.out)
    return 0


def _cmd_nakamura(args: argparse.Namespace) -> int:
    game = _load_game(args.game)
    if isinstance(game, FiniteGame):
        result = nakamura_number(game)
        payload: dict[str, Any] = {
            "nu": "infinity" if result.value == INFINITE else int(result.value),
            "witness": _coalitions_json(result.witness) if result.witness else None,
        }
        if result.empty_winning:
            payload["empty_coalition_wins"] = True
    else:
        witness = bounded_nakamura_witness(game, args.depth, args.family_limit)
        payload = {
            "depth": args.depth,
            "nu_upper": len(witness) if witness else None,
            "witness": _coalitions_json(witness) if witness else None,
        }
    _emit(payload, args.out)
    return 0


def _cmd_core_check(args: argparse.Namespace) -> int:
    game = _load_game(args.game)
    if not isinstance(game, FiniteGame):
        raise ValueError("core checks run on finite games only")
    check = verify_core_threshold(
        game, args.alternatives, mode=args.mode, seed=args.seed, samples=args.samples
    )
    payload: dict[str, Any] = {
        "alternatives": list(check.alternatives),
        "nu": "infinity" if check.nu == INFINITE else int(check.nu),
        "side": check.side,
        "profiles_checked": check.profiles_checked,
        "ok": check.ok,
    }
    if check.side == "below":
        payload["all_nonempty"] = check.all_nonempty
    else:
        payload["empty_core_profile"] = (
            profile_to_json(check.empty_core_profile) if check.empty_core_profile else None
        )
        payload["constructed"] = check.constructed
    _emit(payload, args.out)
    return 0 if check.ok else 1


def _cmd_build(args: argparse.Namespace) -> int:
    params: dict[str, Any] = dict(json.loads(args.params)) if args.params else {}
    if args.sizes:
        params["sizes"] = [int(s) for s in args.sizes.split(",")]
    game = build(args.name, params)
    if isinstance(game, FiniteGame):
        payload = game_to_json(game)
    else:
        payload = {"kind": "construction", "name": args.name, "params": params}
    _emit(payload, args.out)
    return 0


def _cmd_product(args: argparse.Namespace) -> int:
    left_doc = load_json(args.left)
    right_doc = load_json(args.right)
    left = game_from_json(left_doc)
    right = game_from_json(right_doc)
    pairing = pairing_from_spec(args.pairing)
    if not isinstance(left, FiniteGame):
        raise ValueError("the left product factor must be finite")
    combined = product(left, right, pairing)
    if isinstance(combined, FiniteGame):
        payload = game_to_json(combined)
    else:
        payload = product_construction_json(left_doc, right_doc, args.pairing)
    _emit(payload, args.out)
    return 0


def _cmd_effectivity(args: argparse.Namespace) -> int:
    form = form_from_json(load_json(args.form))
    game = derive_alpha_game(form) if args.notion == "alpha" else derive_exact_game(form)
    _emit(game_to_json(game), args.out)
    return 0


def _cmd_diagonal(args: argparse.Namespace) -> int:
    oracle = IndexOracle.from_spec(args.oracle)
    payload: dict[str, Any] = {"oracle": args.oracle, "max_len": args.max_len}
    if args.classify is not None:
        decision = decide_string(oracle, args.classify)
        payload["classify"] = {
            "string": args.classify,
            "status": decision.status.value,
            "truncated": decision.truncated,
        }
    tables = determining_tables(oracle, args.max_len)
    tables_doc = {
        "indices": list(tables.indices),
        "bits": list(tables.bits),
        "cutoffs": list(tables.cutoffs),
        "winning": sorted(tables.winning),
        "losing": sorted(tables.losing),
        "truncated": tables.truncated,
    }
    if args.dump_tables:
        dump_json(args.dump_tables, tables_doc)
        payload["tables_written"] = args.dump_tables
    else:
        payload["tables"] = tables_doc
    _emit(payload, args.out)
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    report = run_table_report(max_k=args.max_k, depth=args.depth)
    if args.md:
        with open(args.md, "w", encoding="utf-8") as handle:
            handle.write(report.to_markdown())
    _emit(report.to_json(), args.out)
    if not args.out:
        summary = "PASS" if report.passed else "FAIL"
        print(f"table report: {summary} ({len(report.entries)} entries)", file=sys.stderr)
    return 0 if report.passed else 1


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nakamura-lab",
        description="Simple games: classification, Nakamura numbers, core checks, constructions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="axiom signature and type of a finite game")
    p.add_argument("--game", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("nakamura", help="exact Nakamura number (finite) or bounded witness")
    p.add_argument("--game", required=True)
    p.add_argument("--depth", type=int, default=12)
    p.add_argument("--family-limit", type=int, default=8)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_nakamura)

    p = sub.add_parser("core-check", help="verify the core threshold for m alternatives")
    p.add_argument("--game", required=True)
    p.add_argument("--alternatives", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_core_check)

    p = sub.add_parser("build", help="construct a catalog game")
    p.add_argument("--name", required=True)
    p.add_argument("--sizes", help="comma-separated block sizes, e.g. 2,1,1")
    p.add_argument("--params", help="extra params as a JSON object")
    p.add_argument("-o", "--out")
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("product", help="product of two games over a pairing")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--pairing", default="even_odd", help="even_odd or shift:<k>")
    p.add_argument("-o", "--out")
    p.set_defaults(fn=_cmd_product)

    p = sub.add_parser("effectivity", help="derive a simple game from a game form")
    p.add_argument("--form", required=True)
    p.add_argument("--notion", choices=("alpha", "exact"), required=True)
    p.add_argument("-o", "--out")
    p.set_defaults(fn=_cmd_effectivity)

    p = sub.add_parser("diagonal", help="inspect the diagonal construction's string tables")
    p.add_argument("--oracle", default="alternating", help="alternating or seeded:<n>")
    p.add_argument("--max-len", type=int, default=12)
    p.add_argument("--classify", help="classify one 0/1 string")
    p.add_argument("--dump-tables")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_diagonal)

    p = sub.add_parser("table", help="reproduce and verify the type/Nakamura table")
    p.add_argument("--max-k", type=int, default=6)
    p.add_argument("--depth", type=int, default=12)
    p.add_argument("--out")
    p.add_argument("--md")
    p.set_defaults(fn=_cmd_table)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors already
        return int(exc.code or 0)
    try:
        return int(args.fn(args))
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
