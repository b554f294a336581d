"""JSON file formats for sociograms, networks and derivation scripts.

Sociogram::

    {"agents": ["p", "q"], "weights": [{"from": "p", "to": "q", "w": "3/2"}]}

Network: a sociogram plus ``"thresholds": {"p": "7", "q": "5.5"}``.
Rationals may be written as ``"num/den"`` strings, integers, or finite
decimals; all are read exactly.  Omitted weights are 0.

Derivation script::

    {"sociogram": <sociogram object, or a path relative to the script>,
     "lines": [{"formula": "...", "by": "reflexivity"},
               {"formula": "...", "by": {"mp": [1, 0]}},
               {"formula": "...", "by": {"lighthouse": {"A": ["r"], "B": ["p", "q"],
                                                        "C": {"r": ["q"]}}}}]}
"""
from __future__ import annotations

import json
from decimal import Decimal
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

from .core import (InfluenceError, SocialNetwork, Sociogram, as_rational,
                   sorted_agents)
from .proofkit import (Augmentation, DerivationScript, Lighthouse, Line,
                       ModusPonens, Reflexivity, Tautology, Transitivity)
from .syntax import parse_formula

PathLike = Union[str, Path]


class FormatError(InfluenceError):
    pass


def rational_from_json(value: Any, what: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str, Decimal)):
        raise FormatError(f"{what}: expected a rational, got {value!r}")
    try:
        return as_rational(value.strip() if isinstance(value, str) else value)
    except InfluenceError as exc:
        raise FormatError(f"{what}: {exc}") from exc


def rational_to_json(q: Fraction) -> str:
    return str(q)


def _load_json(path: PathLike) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON: {exc}") from exc


def _expect(obj: Any, kind: type, what: str):
    if not isinstance(obj, kind):
        raise FormatError(f"{what}: expected {kind.__name__}, got {type(obj).__name__}")
    return obj


def sociogram_from_json(obj: Any) -> Sociogram:
    _expect(obj, dict, "sociogram")
    agents = _expect(obj.get("agents"), list, "agents")
    if len(set(agents)) != len(agents):
        raise FormatError("agents: duplicate agent id")
    weights = {}
    for k, entry in enumerate(_expect(obj.get("weights", []), list, "weights")):
        _expect(entry, dict, f"weights[{k}]")
        try:
            key = (entry["from"], entry["to"])
            w = entry["w"]
        except KeyError as exc:
            raise FormatError(f"weights[{k}]: missing field {exc}") from None
        if key in weights:
            raise FormatError(f"weights[{k}]: duplicate entry {key[0]}->{key[1]}")
        weights[key] = rational_from_json(w, f"weights[{k}]")
    return Sociogram(frozenset(agents), weights)


def network_from_json(obj: Any) -> SocialNetwork:
    s = sociogram_from_json(obj)
    raw = _expect(obj.get("thresholds"), dict, "thresholds")
    thresholds = {a: rational_from_json(v, f"thresholds[{a}]") for a, v in raw.items()}
    return SocialNetwork(s, thresholds)


def sociogram_to_json(s: Sociogram) -> dict:
    return {
        "agents": sorted_agents(s.agents),
        "weights": [{"from": a, "to": b, "w": rational_to_json(w)}
                    for (a, b), w in sorted(s.weights.items())],
    }


def network_to_json(n: SocialNetwork) -> dict:
    obj = sociogram_to_json(n.sociogram)
    obj["thresholds"] = {a: rational_to_json(n.threshold(a)) for a in sorted_agents(n.agents)}
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2)


def load_sociogram(path: PathLike) -> Sociogram:
    return sociogram_from_json(_load_json(path))


def load_network(path: PathLike) -> SocialNetwork:
    return network_from_json(_load_json(path))


def _justification(by: Any, k: int):
    simple = {"tautology": Tautology, "reflexivity": Reflexivity,
              "transitivity": Transitivity, "augmentation": Augmentation}
    if isinstance(by, str):
        if by not in simple:
            raise FormatError(f"lines[{k}]: unknown justification {by!r}")
        return simple[by]()
    if isinstance(by, dict) and len(by) == 1:
        if "mp" in by:
            ref = by["mp"]
            if (not isinstance(ref, list) or len(ref) != 2
                    or not all(isinstance(j, int) and not isinstance(j, bool) for j in ref)):
                raise FormatError(f"lines[{k}]: mp expects [major, minor] line indices")
            return ModusPonens(ref[0], ref[1])
        if "lighthouse" in by:
            w = _expect(by["lighthouse"], dict, f"lines[{k}].lighthouse")
            try:
                family = _expect(w["C"], dict, f"lines[{k}].lighthouse.C")
                return Lighthouse(frozenset(_expect(w["A"], list, "A")),
                                  frozenset(_expect(w["B"], list, "B")),
                                  {a: frozenset(_expect(c, list, f"C[{a}]"))
                                   for a, c in family.items()})
            except KeyError as exc:
                raise FormatError(f"lines[{k}].lighthouse: missing field {exc}") from None
    raise FormatError(f"lines[{k}]: unrecognised justification {by!r}")


def script_from_json(obj: Any, base_dir: PathLike = ".") -> DerivationScript:
    _expect(obj, dict, "proof script")
    soc = obj.get("sociogram")
    if isinstance(soc, str):
        s = load_sociogram(Path(base_dir) / soc)
    else:
        s = sociogram_from_json(soc)
    lines = []
    for k, entry in enumerate(_expect(obj.get("lines"), list, "lines")):
        _expect(entry, dict, f"lines[{k}]")
        if "formula" not in entry or "by" not in entry:
            raise FormatError(f"lines[{k}]: needs 'formula' and 'by'")
        formula = parse_formula(_expect(entry["formula"], str, f"lines[{k}].formula"),
                                s.agents)
        lines.append(Line(formula, _justification(entry["by"], k)))
    return DerivationScript(s, lines)


def load_script(path: PathLike) -> DerivationScript:
    return script_from_json(_load_json(path), Path(path).parent)
