"""Validity of a formula over a whole sociogram, by finite enumeration.

A formula holds in every network on sociogram S iff it holds in every network
of a finite class C(S): thresholds at agent ``a`` are drawn from
``{0} | {sum + eps : sum a subset-sum of influences on a}``, with ``eps``
smaller than any positive gap between those subset-sums.  Whether
``||A||_a >= theta(a)`` only depends on where the threshold sits among the
subset-sums at ``a``, and C(S) contains one threshold from each such slot.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .core import (Agent, Formula, InfluenceError, SocialNetwork, Sociogram,
                   UnknownAgentError, mentioned_agents, sorted_agents)
from .diffusion import satisfies

DEFAULT_MAX_NETWORKS = 10**7


class SizeGuardError(InfluenceError):
    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"{count} candidate networks exceed the cap of {cap}")


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`decide_validity`; ``witness`` is set iff the formula is not valid."""

    witness: Optional[SocialNetwork] = None
    networks_checked: int = 0

    @property
    def valid(self) -> bool:
        return self.witness is None

    def __str__(self):
        return "VALID" if self.valid else "INVALID"


def subset_sums(s: Sociogram, agent: Agent) -> list[Fraction]:
    """Distinct values of the peer pressure on ``agent`` over all groups, ascending."""
    if agent not in s.agents:
        raise UnknownAgentError(agent)
    sums = {Fraction(0)}
    for b in sorted_agents(s.agents):
        w = s.weight(b, agent)
        if w:
            sums |= {x + w for x in sums}
    return sorted(sums)


def compute_epsilon(s: Sociogram) -> Fraction:
    """Half the smallest positive gap between two subset-sums at one agent (1 if there is none)."""
    gaps = []
    for a in sorted_agents(s.agents):
        sums = subset_sums(s, a)
        gaps.extend(y - x for x, y in zip(sums, sums[1:]))
    if not gaps:
        return Fraction(1)
    return min(gaps) / 2


def candidate_thresholds(s: Sociogram, agent: Agent,
                         eps: Optional[Fraction] = None) -> list[Fraction]:
    if eps is None:
        eps = compute_epsilon(s)
    values = {Fraction(0)} | {x + eps for x in subset_sums(s, agent)}
    return sorted(values)


def _candidate_table(s: Sociogram) -> tuple[list[Agent], list[list[Fraction]]]:
    eps = compute_epsilon(s)
    agents = sorted_agents(s.agents)
    return agents, [candidate_thresholds(s, a, eps) for a in agents]


def count_networks(s: Sociogram) -> int:
    _, table = _candidate_table(s)
    return math.prod(len(c) for c in table)


def enumerate_networks(s: Sociogram) -> Iterator[SocialNetwork]:
    """Every network of C(S); the first agent (by id) varies slowest, values ascend."""
    agents, table = _candidate_table(s)
    for values in itertools.product(*table):
        yield SocialNetwork(s, dict(zip(agents, values)))


def _network_at(s: Sociogram, agents: Sequence[Agent],
                table: Sequence[Sequence[Fraction]], index: int) -> SocialNetwork:
    thresholds = {}
    for a, options in zip(reversed(agents), reversed(table)):
        index, r = divmod(index, len(options))
        thresholds[a] = options[r]
    return SocialNetwork(s, thresholds)


def _first_failure(s: Sociogram, f: Formula, agents, table,
                   start: int, stop: int) -> Optional[int]:
    for i in range(start, stop):
        if not satisfies(_network_at(s, agents, table, i), f):
            return i
    return None


def decide_validity(s: Sociogram, f: Formula, max_networks: int = DEFAULT_MAX_NETWORKS,
                    workers: int = 1) -> Verdict:
    """Decide whether ``f`` holds in every social network based on ``s``.

    Returns an invalid :class:`Verdict` carrying the first falsifying network
    in enumeration order; this witness does not depend on ``workers``.
    Raises :class:`SizeGuardError` when C(S) has more than ``max_networks``
    members.
    """
    s.require(mentioned_agents(f), "formula")
    agents, table = _candidate_table(s)
    total = math.prod(len(c) for c in table)
    if total > max_networks:
        raise SizeGuardError(total, max_networks)

    if workers <= 1 or total < 2 * workers:
        for i, n in enumerate(enumerate_networks(s)):
            if not satisfies(n, f):
                return Verdict(n, i + 1)
        return Verdict(None, total)

    # Chunks are consumed in index order, so the first chunk reporting a
    # failure holds the globally first one.
    chunk = max(1, -(-total // (workers * 8)))
    bounds = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_first_failure, s, f, agents, table, lo, hi)
                   for lo, hi in bounds]
        for fut in futures:
            found = fut.result()
            if found is not None:
                for other in futures:
                    other.cancel()
                return Verdict(_network_at(s, agents, table, found), found + 1)
    return Verdict(None, total)
