"""Domain types: agents, agent sets, sociograms, social networks and formulas.

Agents are plain strings, agent sets are ``frozenset``s of them, and every
numeric quantity (weights, thresholds) is a :class:`fractions.Fraction`.
All values are immutable once built.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Agent = str
AgentSet = frozenset  # frozenset[Agent]

_AGENT_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class InfluenceError(Exception):
    """Base class for every error raised by this package."""


class UnknownAgentError(InfluenceError):
    def __init__(self, agent: str, where: str = ""):
        self.agent = agent
        msg = f"unknown agent {agent!r}"
        if where:
            msg += f" in {where}"
        super().__init__(msg)


class InvalidValueError(InfluenceError):
    """A weight or threshold that is negative or not a rational number."""


def check_agent_id(agent: str) -> str:
    if not isinstance(agent, str) or not _AGENT_RE.match(agent):
        raise InvalidValueError(f"bad agent id {agent!r}: expected [A-Za-z0-9_]+")
    return agent


def agent_set(agents: Iterable[str] = ()) -> AgentSet:
    return frozenset(agents)


def union(a: AgentSet, b: AgentSet) -> AgentSet:
    return frozenset(a) | frozenset(b)


def sorted_agents(agents: Iterable[str]) -> list[str]:
    """Agents in the canonical (lexicographic by id) order."""
    return sorted(agents)


def format_set(agents: Iterable[str]) -> str:
    return "{" + ",".join(sorted_agents(agents)) + "}"


def as_rational(value: Union[Fraction, int, str]) -> Fraction:
    """Exact conversion; floats are refused because they are already rounded."""
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidValueError(f"refusing inexact value {value!r}")
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InvalidValueError(f"not a rational number: {value!r}") from exc


def _nonnegative(value, what: str) -> Fraction:
    q = as_rational(value)
    if q < 0:
        raise InvalidValueError(f"{what} must be nonnegative, got {q}")
    return q


@dataclass(frozen=True)
class Sociogram:
    """Agents plus the influence ``w(a, b)`` of ``a`` on ``b`` for each ordered pair.

    Pairs absent from ``weights`` have weight 0; zero entries are dropped on
    construction so that equal sociograms compare equal.
    """

    agents: AgentSet
    weights: Mapping[tuple[Agent, Agent], Fraction] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        agents = frozenset(check_agent_id(a) for a in self.agents)
        weights = {}
        for (a, b), w in sorted(dict(self.weights).items()):
            for x in (a, b):
                if x not in agents:
                    raise UnknownAgentError(x, "weights")
            q = _nonnegative(w, f"weight {a}->{b}")
            if q:
                weights[(a, b)] = q
        object.__setattr__(self, "agents", agents)
        object.__setattr__(self, "weights", weights)

    def weight(self, source: Agent, target: Agent) -> Fraction:
        return self.weights.get((source, target), Fraction(0))

    def require(self, agents: Iterable[str], where: str = "") -> AgentSet:
        """Return ``agents`` as a set, raising if any of them is not in the sociogram."""
        agents = frozenset(agents)
        for a in sorted_agents(agents):
            if a not in self.agents:
                raise UnknownAgentError(a, where)
        return agents

    def subsets(self) -> Iterator[AgentSet]:
        """All subsets of the agent set, smallest first, in a fixed order."""
        ordered = sorted_agents(self.agents)
        for mask in range(1 << len(ordered)):
            yield frozenset(a for i, a in enumerate(ordered) if mask >> i & 1)


@dataclass(frozen=True)
class SocialNetwork:
    """A sociogram together with a nonnegative threshold for every agent."""

    sociogram: Sociogram
    thresholds: Mapping[Agent, Fraction] = field(hash=False)

    def __post_init__(self):
        given = dict(self.thresholds)
        for a in sorted_agents(given):
            if a not in self.sociogram.agents:
                raise UnknownAgentError(a, "thresholds")
        missing = self.sociogram.agents - given.keys()
        if missing:
            raise InvalidValueError(f"missing threshold for {format_set(missing)}")
        thresholds = {a: _nonnegative(given[a], f"threshold of {a}")
                      for a in sorted_agents(given)}
        object.__setattr__(self, "thresholds", thresholds)

    @property
    def agents(self) -> AgentSet:
        return self.sociogram.agents

    def weight(self, source: Agent, target: Agent) -> Fraction:
        return self.sociogram.weight(source, target)

    def threshold(self, agent: Agent) -> Fraction:
        return self.thresholds[agent]

    def require(self, agents: Iterable[str], where: str = "") -> AgentSet:
        return self.sociogram.require(agents, where)


# Formulas.  Only falsum, atoms and implication are primitive; the other
# connectives are abbreviations that expand into these three.

@dataclass(frozen=True)
class Bot:
    def __str__(self):
        from .syntax import pretty
        return pretty(self)


@dataclass(frozen=True)
class Atom:
    """``left |> right``: seeding ``left`` eventually brings every agent of ``right`` in."""

    left: AgentSet
    right: AgentSet

    def __post_init__(self):
        object.__setattr__(self, "left", frozenset(self.left))
        object.__setattr__(self, "right", frozenset(self.right))

    def __str__(self):
        from .syntax import pretty
        return pretty(self)


@dataclass(frozen=True)
class Implies:
    antecedent: "Formula"
    consequent: "Formula"

    def __str__(self):
        from .syntax import pretty
        return pretty(self)


Formula = Union[Bot, Atom, Implies]

BOT = Bot()


def neg(f: Formula) -> Formula:
    return Implies(f, BOT)


def disj(f: Formula, g: Formula) -> Formula:
    return Implies(Implies(f, BOT), g)


def conj(f: Formula, g: Formula) -> Formula:
    return neg(Implies(f, neg(g)))


def big_disj(formulas: Iterable[Formula]) -> Formula:
    """Right-nested disjunction ``f1 | (f2 | (... | fn))``; empty gives falsum."""
    formulas = list(formulas)
    if not formulas:
        return BOT
    result = formulas[-1]
    for f in reversed(formulas[:-1]):
        result = disj(f, result)
    return result


def atoms(f: Formula) -> Iterator[Atom]:
    """Atoms of ``f`` left to right, repeats included."""
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            yield g
        elif isinstance(g, Implies):
            stack.append(g.consequent)
            stack.append(g.antecedent)


def mentioned_agents(f: Formula) -> AgentSet:
    out: set[str] = set()
    for a in atoms(f):
        out |= a.left
        out |= a.right
    return frozenset(out)
