"""Textual and JSON forms of semigroups: ``gaps:1,2,4``, ``gens:3,5,7``."""

from __future__ import annotations

import json
from typing import Any

from .errors import MalformedInputError
from .semigroup import NumericalSemigroup, invariants


def _parse_ints(body: str) -> list[int]:
    body = body.strip()
    if not body:
        return []
    try:
        return [int(tok) for tok in body.split(",")]
    except ValueError as exc:
        raise MalformedInputError(f"cannot parse integer list {body!r}") from exc


def parse_semigroup(text: str) -> NumericalSemigroup:
    kind, sep, body = text.strip().partition(":")
    if not sep:
        raise MalformedInputError(f"expected 'gaps:...' or 'gens:...', got {text!r}")
    kind = kind.strip().lower()
    if kind == "gaps":
        return NumericalSemigroup.from_gaps(_parse_ints(body))
    if kind == "gens":
        return NumericalSemigroup.from_generators(_parse_ints(body))
    raise MalformedInputError(f"unknown semigroup format {kind!r}")


def format_gaps(S: NumericalSemigroup) -> str:
    return "gaps:" + ",".join(map(str, S.gaps))


def format_generators(S: NumericalSemigroup) -> str:
    return "gens:" + ",".join(map(str, S.minimal_generators()))


def to_dict(S: NumericalSemigroup) -> dict[str, Any]:
    inv = invariants(S)
    return {
        "frobenius": inv.frobenius,
        "genus": inv.genus,
        "multiplicity": inv.multiplicity,
        "type": inv.type,
        "depth": inv.depth,
        "gaps": list(S.gaps),
        "pf": list(S.pseudo_frobenius()) if S.genus else [],
        "min_gens": S.minimal_generators(),
    }


def from_dict(obj: dict[str, Any]) -> NumericalSemigroup:
    """Rebuild from a JSON object, checking every stored invariant."""
    try:
        S = NumericalSemigroup.from_gaps(obj["gaps"])
    except KeyError as exc:
        raise MalformedInputError("JSON semigroup lacks 'gaps'") from exc
    expected = to_dict(S)
    for key, value in obj.items():
        if key not in expected:
            raise MalformedInputError(f"unknown field {key!r}")
        if expected[key] != value:
            raise MalformedInputError(f"field {key!r} disagrees with the gaps")
    return S


def to_json(S: NumericalSemigroup) -> str:
    return json.dumps(to_dict(S), separators=(",", ":"))
