"""Checking Hilbert-style derivations for a fixed sociogram.

Axioms: propositional tautologies, Reflexivity, Transitivity, Augmentation
and the sociogram-specific Lighthouse schema; the only rule is Modus Ponens.

The Lighthouse instance for a partition ``A | B`` of the agents and a family
``{C_a}`` is written with both disjunctions nested to the right over ``A``
in id order::

    B |> {a1} | (B |> {a2} | ...)  ->  C_a1 |> {a1} | (C_a2 |> {a2} | ...)

where ``x | y`` abbreviates ``(x -> false) -> y``.  Any other arrangement
has to go through a tautology line.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence, Union

from .core import (AgentSet, Atom, atoms, Bot, Formula, Implies, InfluenceError,
                   Sociogram, big_disj, format_set, sorted_agents)
from .diffusion import peer_pressure

MAX_TAUTOLOGY_ATOMS = 20


class MalformedWitnessError(InfluenceError):
    pass


class TautologyGuardError(InfluenceError):
    pass


class DerivationError(InfluenceError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


@dataclass(frozen=True)
class Tautology:
    pass


@dataclass(frozen=True)
class Reflexivity:
    pass


@dataclass(frozen=True)
class Transitivity:
    pass


@dataclass(frozen=True)
class Augmentation:
    pass


@dataclass(frozen=True)
class Lighthouse:
    part_a: AgentSet
    part_b: AgentSet
    family: Mapping[str, AgentSet] = field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "part_a", frozenset(self.part_a))
        object.__setattr__(self, "part_b", frozenset(self.part_b))
        object.__setattr__(self, "family",
                           {a: frozenset(c) for a, c in sorted(dict(self.family).items())})


@dataclass(frozen=True)
class ModusPonens:
    """From ``lines[major] = X -> Y`` and ``lines[minor] = X`` conclude ``Y``."""

    major: int
    minor: int


Justification = Union[Tautology, Reflexivity, Transitivity, Augmentation,
                      Lighthouse, ModusPonens]


@dataclass(frozen=True)
class Line:
    formula: Formula
    by: Justification


@dataclass(frozen=True)
class DerivationScript:
    sociogram: Sociogram
    lines: Sequence[Line]

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))


def is_reflexivity(f: Formula) -> bool:
    return isinstance(f, Atom) and f.right <= f.left


def is_transitivity(f: Formula) -> bool:
    # A |> B -> (B |> C -> A |> C)
    match f:
        case Implies(Atom(a, b), Implies(Atom(b2, c), Atom(a2, c2))):
            return a == a2 and b == b2 and c == c2
    return False


def is_augmentation(f: Formula) -> bool:
    # A |> B -> (A u C |> B u C) for some C
    match f:
        case Implies(Atom(a, b), Atom(a2, b2)):
            c = (a2 - a) | (b2 - b)
            return a2 == a | c and b2 == b | c
    return False


def lighthouse_formula(part_a: Iterable[str], part_b: Iterable[str],
                       family: Mapping[str, Iterable[str]]) -> Formula:
    """The Lighthouse instance for the given witnesses, in canonical shape."""
    order = sorted_agents(part_a)
    part_b = frozenset(part_b)
    return Implies(big_disj(Atom(part_b, {a}) for a in order),
                   big_disj(Atom(family[a], {a}) for a in order))


def is_lighthouse(s: Sociogram, f: Formula, part_a: Iterable[str],
                  part_b: Iterable[str], family: Mapping[str, Iterable[str]]) -> bool:
    part_a, part_b = frozenset(part_a), frozenset(part_b)
    family = {a: frozenset(c) for a, c in family.items()}
    if set(family) != part_a:
        raise MalformedWitnessError(
            f"family is indexed by {format_set(family)}, expected {format_set(part_a)}")
    if part_a & part_b or part_a | part_b != s.agents:
        return False
    if any(not c <= s.agents for c in family.values()):
        return False
    for a in sorted_agents(part_a):
        if peer_pressure(s, part_b, a) > peer_pressure(s, family[a], a):
            return False
    return f == lighthouse_formula(part_a, part_b, family)


def _truth(f: Formula, valuation: Mapping[Atom, bool]) -> bool:
    if isinstance(f, Bot):
        return False
    if isinstance(f, Atom):
        return valuation[f]
    return not _truth(f.antecedent, valuation) or _truth(f.consequent, valuation)


def is_tautology(f: Formula, max_atoms: int = MAX_TAUTOLOGY_ATOMS) -> bool:
    """Truth-table check, treating structurally distinct atoms as independent variables."""
    distinct = list(dict.fromkeys(atoms(f)))
    if len(distinct) > max_atoms:
        raise TautologyGuardError(
            f"{len(distinct)} distinct atoms, truth-table limit is {max_atoms}")
    for bits in itertools.product((False, True), repeat=len(distinct)):
        if not _truth(f, dict(zip(distinct, bits))):
            return False
    return True


def _check_line(script: DerivationScript, i: int) -> Optional[str]:
    """Reason line ``i`` is not justified, or None."""
    line = script.lines[i]
    f, by = line.formula, line.by
    if isinstance(by, Tautology):
        try:
            ok = is_tautology(f)
        except TautologyGuardError as exc:
            return str(exc)
        return None if ok else "not a propositional tautology"
    if isinstance(by, Reflexivity):
        return None if is_reflexivity(f) else "not an instance of Reflexivity"
    if isinstance(by, Transitivity):
        return None if is_transitivity(f) else "not an instance of Transitivity"
    if isinstance(by, Augmentation):
        return None if is_augmentation(f) else "not an instance of Augmentation"
    if isinstance(by, Lighthouse):
        try:
            ok = is_lighthouse(script.sociogram, f, by.part_a, by.part_b, by.family)
        except MalformedWitnessError as exc:
            return f"malformed Lighthouse witnesses: {exc}"
        return None if ok else "not an instance of Lighthouse for the given witnesses"
    if isinstance(by, ModusPonens):
        for j in (by.major, by.minor):
            if not 0 <= j < i:
                return f"Modus Ponens cites line {j}, which is not an earlier line"
        major = script.lines[by.major].formula
        minor = script.lines[by.minor].formula
        if not isinstance(major, Implies):
            return f"Modus Ponens major premise (line {by.major}) is not an implication"
        if major.antecedent != minor:
            return (f"antecedent of line {by.major} does not match line {by.minor}")
        if major.consequent != f:
            return f"consequent of line {by.major} does not match this line"
        return None
    return f"unknown justification {by!r}"


def verify_derivation(script: DerivationScript) -> int:
    """Check every line in order and return the number of lines.

    Raises :class:`DerivationError` for the first line that is not justified.
    """
    for i in range(len(script.lines)):
        reason = _check_line(script, i)
        if reason is not None:
            raise DerivationError(i, reason)
    return len(script.lines)
