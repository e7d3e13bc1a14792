"""Tsallis, Shannon, and Renyi entropies, and the identity tying them together."""

from __future__ import annotations

import numpy as np

from .dist import ProbDist
from .qmath import _as_q, is_deformed, q_exp, q_log

__all__ = [
    "tsallis_entropy",
    "shannon_entropy",
    "renyi_entropy",
    "renyi_tsallis_bridge",
]


def tsallis_entropy(p: ProbDist, q) -> float:
    """H_q(p) = sum_j p_j ln_q(1/p_j); equals Shannon entropy at q = 1.

    Value lies in [0, ln_q(n)], with the maximum at the uniform distribution.
    """
    return float(p.weights @ q_log(1.0 / p.weights, q))


def shannon_entropy(p: ProbDist) -> float:
    """H_1(p) = -sum_j p_j log p_j (natural log)."""
    w = p.weights
    return float(-(w @ np.log(w)))


def renyi_entropy(p: ProbDist, q) -> float:
    """R_q(p) = log(sum_j p_j^q) / (1-q); Shannon at q = 1, log(n) at q = 0."""
    qf = _as_q(q)
    if not is_deformed(qf):
        return shannon_entropy(p)
    return float(np.log(np.sum(p.weights**qf)) / (1.0 - qf))


def renyi_tsallis_bridge(p: ProbDist, q) -> tuple[float, float]:
    """Return (exp R_q(p), exp_q H_q(p)); the two sides agree for every q >= 0.

    Always well defined: 1 + (1-q) H_q(p) = sum_j p_j^q > 0.
    """
    lhs = float(np.exp(renyi_entropy(p, q)))
    rhs = q_exp(tsallis_entropy(p, q), q)
    return lhs, rhs
