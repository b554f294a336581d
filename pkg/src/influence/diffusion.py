"""Threshold diffusion: peer pressure, the one-step operator, its closure, and truth.

Time is discrete and updates are synchronous: an agent whose peer pressure
from the current adopters reaches its threshold adopts at the next step.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Union

from .core import (Agent, AgentSet, Atom, Bot, Formula, Implies, SocialNetwork,
                   Sociogram, UnknownAgentError, mentioned_agents)


def peer_pressure(s: Union[Sociogram, SocialNetwork], group: Iterable[Agent],
                  target: Agent) -> Fraction:
    """Total influence of ``group`` on ``target``."""
    group = s.require(group, "group")
    if target not in s.agents:
        raise UnknownAgentError(target, "target")
    return sum((s.weight(a, target) for a in group), Fraction(0))


def _step(n: SocialNetwork, adopted: AgentSet) -> AgentSet:
    new = [x for x in n.agents - adopted
           if sum((n.weight(a, x) for a in adopted), Fraction(0)) >= n.threshold(x)]
    return adopted.union(new) if new else adopted


def diffusion_step(n: SocialNetwork, adopted: Iterable[Agent]) -> AgentSet:
    """Adopters one step after ``adopted``: they stay, and anyone pushed to threshold joins."""
    return _step(n, n.require(adopted, "adopted set"))


def diffusion_trace(n: SocialNetwork, seed: Iterable[Agent]) -> list[AgentSet]:
    """``[A^0, A^1, ..., A^k]`` where ``A^k`` is the first fixpoint.

    Every step before the fixpoint adds at least one agent, so the trace has
    at most ``len(n.agents) + 1`` entries.
    """
    current = n.require(seed, "seed")
    trace = [current]
    while True:
        nxt = _step(n, current)
        if nxt == current:
            return trace
        trace.append(nxt)
        current = nxt


def star_closure(n: SocialNetwork, seed: Iterable[Agent]) -> AgentSet:
    """Everyone who eventually adopts when ``seed`` adopts at time 0."""
    current = n.require(seed, "seed")
    while True:
        nxt = _step(n, current)
        if nxt == current:
            return current
        current = nxt


def satisfies(n: SocialNetwork, f: Formula, cache: Optional[dict] = None) -> bool:
    """Truth of ``f`` in network ``n``.

    ``cache`` maps seed sets to their closures in ``n``; pass the same dict
    across calls on one network to share work.
    """
    n.require(mentioned_agents(f), "formula")
    if cache is None:
        cache = {}

    def holds(g: Formula) -> bool:
        if isinstance(g, Bot):
            return False
        if isinstance(g, Atom):
            closure = cache.get(g.left)
            if closure is None:
                closure = cache[g.left] = star_closure(n, g.left)
            return g.right <= closure
        if isinstance(g, Implies):
            return not holds(g.antecedent) or holds(g.consequent)
        raise TypeError(f"not a formula: {g!r}")

    return holds(f)
