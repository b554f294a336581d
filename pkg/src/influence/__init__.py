"""Influence in threshold models of social networks.

Diffusion over weighted sociograms, truth of influence formulas ``A |> B``,
validity over all threshold assignments, and a checker for derivations in
the Armstrong + Lighthouse axiom system.
"""
from .core import (BOT, Atom, Bot, Formula, Implies, InfluenceError, SocialNetwork,
                   Sociogram, UnknownAgentError, agent_set, big_disj, conj, disj, neg,
                   union)
from .decider import (SizeGuardError, Verdict, candidate_thresholds, compute_epsilon,
                      decide_validity, enumerate_networks)
from .diffusion import diffusion_step, diffusion_trace, peer_pressure, satisfies, star_closure
from .proofkit import (DerivationError, DerivationScript, is_augmentation, is_lighthouse,
                       is_reflexivity, is_tautology, is_transitivity, verify_derivation)
from .syntax import FormulaSyntaxError, parse_formula, pretty

__version__ = "0.1.0"
