"""JSON schemas for games, game forms, and reports.

Games travel either materialized::

    {"kind": "finite", "universe": 3, "winning": [[0, 1], [0, 2], [1, 2], [0, 1, 2]]}

or as named constructions resolved by the catalog::

    {"kind": "construction", "name": "diagonal", "params": {"oracle": "alternating"}}

Products of a finite game with a prefix game cannot be materialized and are
stored as constructions with embedded factor documents.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from . import constructions
from .coalitions import Coalition
from .effectivity import GameForm
from .games import FiniteGame, PrefixGame


def coalition_to_json(coalition: Coalition) -> list[int]:
    return list(coalition.members)


def game_to_json(game: FiniteGame | PrefixGame) -> dict[str, Any]:
    if isinstance(game, FiniteGame):
        return {
            "kind": "finite",
            "universe": game.universe,
            "winning": [list(c.members) for c in game.winning_coalitions()],
        }
    raise ValueError(
        "prefix games have no materialized form; serialize the construction instead"
    )


def game_from_json(doc: dict[str, Any]) -> FiniteGame | PrefixGame:
    kind = doc.get("kind")
    if kind == "finite":
        return FiniteGame.from_coalitions(int(doc["universe"]), doc["winning"])
    if kind == "construction":
        name = doc["name"]
        params = dict(doc.get("params") or {})
        if name == "product":
            left = game_from_json(params["left"])
            right = game_from_json(params["right"])
            pairing = constructions.pairing_from_spec(params["pairing"])
            return constructions.product(left, right, pairing)  # type: ignore[arg-type]
        return constructions.build(name, params)
    raise ValueError(f"unknown game kind {kind!r}")


def product_construction_json(
    left_doc: dict[str, Any], right_doc: dict[str, Any], pairing_spec: str
) -> dict[str, Any]:
    return {
        "kind": "construction",
        "name": "product",
        "params": {"left": left_doc, "right": right_doc, "pairing": pairing_spec},
    }


def form_to_json(form: GameForm) -> dict[str, Any]:
    return {
        "players": form.players,
        "strategies": [list(options) for options in form.strategies],
        "outcomes": list(form.outcomes),
        "table": {
            ",".join(map(str, profile)): form.outcome(profile)
            for profile in sorted(form.table)
        },
    }


def form_from_json(doc: dict[str, Any]) -> GameForm:
    strategies = tuple(tuple(options) for options in doc["strategies"])
    # JSON object keys are strings; rebuild each joint strategy with its native types
    def parse(key: str, options: tuple[tuple, ...]) -> tuple:
        parts = key.split(",") if key else []
        if len(parts) != len(options):
            raise ValueError(f"profile key {key!r} does not match {len(options)} players")
        joint = []
        for text, pool in zip(parts, options):
            match = next((s for s in pool if str(s) == text), None)
            if match is None:
                raise ValueError(f"strategy {text!r} unknown for its player")
            joint.append(match)
        return tuple(joint)

    table = {parse(key, strategies): value for key, value in doc["table"].items()}
    return GameForm(strategies, tuple(doc["outcomes"]), table)


def load_json(path: str | Path) -> Any:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def dump_json(path: str | Path, payload: Any) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=2, sort_keys=True)
        handle.write("\n")
