import random
from fractions import Fraction
from itertools import combinations, product

import pytest

from influence.core import SocialNetwork, Sociogram, UnknownAgentError
from influence.decider import (SizeGuardError, candidate_thresholds, compute_epsilon,
                               count_networks, decide_validity, enumerate_networks,
                               subset_sums)
from influence.diffusion import satisfies
from influence.syntax import parse_formula

import randnet

F = Fraction


def brute_sums(s, agent):
    agents = sorted(s.agents)
    return {sum((s.weight(b, agent) for b in group), F(0))
            for k in range(len(agents) + 1) for group in combinations(agents, k)}


def brute_min_gap(s):
    """Smallest positive ||A||_a - ||B||_a over all agents and all pairs of subsets."""
    gaps = [x - y for a in s.agents for x in brute_sums(s, a) for y in brute_sums(s, a) if x > y]
    return min(gaps) if gaps else None


def class_representatives(s, agent):
    """One threshold per behaviour class at ``agent``, chosen without any epsilon."""
    sums = sorted(brute_sums(s, agent))
    reps = {F(0), sums[-1] + 1}
    reps |= {(x + y) / 2 for x, y in zip(sums, sums[1:])}
    if len(sums) == 1:
        reps.add(F(1, 3))
    return sorted(reps)


def oracle_valid(s, f):
    agents = sorted(s.agents)
    for values in product(*(class_representatives(s, a) for a in agents)):
        if not satisfies(SocialNetwork(s, dict(zip(agents, values))), f):
            return False
    return True


S1_SUMS = {"p": [0, 1, 5, 6], "q": [0, 2, 4, 6], "r": [0, 3]}


def test_subset_sums_of_s1(s1):
    for a, expected in S1_SUMS.items():
        assert subset_sums(s1, a) == expected
        assert set(subset_sums(s1, a)) == brute_sums(s1, a)


def test_epsilon_examples(s1):
    assert compute_epsilon(s1) == F(1, 2)
    assert brute_min_gap(s1) == 1
    assert compute_epsilon(Sociogram(frozenset("pq"))) == 1
    assert compute_epsilon(Sociogram(frozenset("p"))) == 1


def test_epsilon_below_every_gap_on_random_sociograms():
    rng = random.Random(5)
    for _ in range(200):
        s = randnet.sociogram(rng, rng.randint(1, 4))
        eps = compute_epsilon(s)
        gap = brute_min_gap(s)
        assert eps > 0
        if gap is None:
            assert eps == 1
        else:
            assert eps < gap and eps == gap / 2


def test_candidate_examples(s1):
    eps = F(1, 2)
    assert candidate_thresholds(s1, "r", eps) == [0, F(1, 2), F(7, 2)]
    assert candidate_thresholds(s1, "p", eps) == [0, F(1, 2), F(3, 2), F(11, 2), F(13, 2)]
    assert candidate_thresholds(Sociogram(frozenset("pq")), "p", F(1)) == [0, 1]
    with pytest.raises(UnknownAgentError):
        candidate_thresholds(s1, "z")


def test_enumeration_sizes(s1):
    single = Sociogram(frozenset("a"))
    assert [n.threshold("a") for n in enumerate_networks(single)] == [0, 1]
    assert count_networks(s1) == 75
    assert len(list(enumerate_networks(s1))) == 75
    pair = Sociogram(frozenset("ab"), {("a", "b"): 1})
    assert candidate_thresholds(pair, "a") == [0, F(1, 2)]
    assert candidate_thresholds(pair, "b") == [0, F(1, 2), F(3, 2)]
    assert count_networks(pair) == 6


def test_enumeration_order(s1):
    nets = list(enumerate_networks(s1))
    assert all(n.sociogram == s1 for n in nets)
    assert [nets[0].threshold(a) for a in "pqr"] == [0, 0, 0]
    assert [nets[1].threshold(a) for a in "pqr"] == [0, 0, F(1, 2)]
    assert [nets[3].threshold(a) for a in "pqr"] == [0, F(1, 2), 0]
    assert [nets[-1].threshold(a) for a in "pqr"] == [F(13, 2), F(13, 2), F(7, 2)]
    assert len({tuple(sorted(n.thresholds.items())) for n in nets}) == 75


def test_p_to_q_transfer_is_valid_on_s1(s1):
    assert decide_validity(s1, parse_formula("{p} |> {r} -> {q} |> {r}")).valid


def test_s2_counterexample(s2):
    verdict = decide_validity(s2, parse_formula("{p} |> {q} -> {r} |> {q}"))
    assert not verdict.valid
    w = verdict.witness
    assert w.threshold("r") == 0
    assert w.thresholds == {"p": F(1, 2), "q": F(7, 2), "r": 0}
    assert w.sociogram == s2
    assert not satisfies(w, parse_formula("{p} |> {q} -> {r} |> {q}"))


def test_lighthouse_consequences_on_s2_and_s3(s2, s3):
    assert decide_validity(s2, parse_formula("{p} |> {q} -> ({r} |> {q} | ({} |> {r}))")).valid
    f = parse_formula("({q}|>{p} | {q}|>{r}) -> ({p}|>{r} | {r}|>{p})")
    assert decide_validity(s3, f).valid


def test_size_guard(s1):
    f = parse_formula("{p} |> {r}")
    with pytest.raises(SizeGuardError) as exc:
        decide_validity(s1, f, max_networks=74)
    assert exc.value.count == 75
    decide_validity(s1, f, max_networks=75)


def test_unknown_agent(s1):
    with pytest.raises(UnknownAgentError):
        decide_validity(s1, parse_formula("{z} |> {p}"))


def test_deterministic_and_parallel_agree(s1, s2):
    cases = [(s2, "{p} |> {q} -> {r} |> {q}"), (s1, "{q} |> {p}"),
             (s1, "{p} |> {r} -> {q} |> {r}"), (s2, "{} |> {q} -> {p} |> {r}")]
    for s, text in cases:
        f = parse_formula(text)
        first = decide_validity(s, f)
        assert decide_validity(s, f) == first
        assert decide_validity(s, f, workers=3) == first


def test_matches_class_representative_oracle():
    rng = random.Random(23)
    seen = {True: 0, False: 0}
    for _ in range(150):
        s = randnet.sociogram(rng, rng.randint(1, 3), density=0.6)
        f = randnet.formula(rng, s.agents, rng.randint(1, 3))
        verdict = decide_validity(s, f)
        assert verdict.valid == oracle_valid(s, f)
        seen[verdict.valid] += 1
    assert seen[True] > 10 and seen[False] > 10
