"""Repertoires, effective information, and the Shannon/mutual-information identities.

Everything is in bits (log base 2). The potential repertoire of a channel is
its input alphabet under a prior (uniform by default); the actual repertoire
is the Bayes posterior over inputs given an observed output, with likelihoods
read off the interventional rows p(y | do(x)). Effective information is the
KL divergence between the two, and Shannon entropy / mutual information fall
out as its expectations over the output distribution.

The 0 * log2(0 / q) = 0 convention applies throughout.
"""
from __future__ import annotations

import math

import numpy as np

from .channels import ATOL, Channel, Distribution
from .errors import UndefinedOutputError, ValidationError


def _check_same_alphabet(p: Distribution, q: Distribution) -> None:
    if p.alphabet != q.alphabet:
        raise ValidationError(
            f"distributions are over different alphabets: "
            f"{list(p.alphabet.labels)} vs {list(q.alphabet.labels)}")


def kl_divergence(p: Distribution, q: Distribution) -> float:
    """D[p || q] = sum_x p(x) log2(p(x) / q(x)), in bits.

    Requires support(p) a subset of support(q); a symbol with p > 0 but
    q = 0 makes the divergence infinite and is rejected.

    Inputs are certified normalized only to ATOL, so two vectors that
    coincide entrywise at that precision represent the same distribution
    and get exactly 0; for the same reason a computed sum may undershoot
    zero by rounding-plus-slack, which is likewise reported as 0.
    """
    _check_same_alphabet(p, q)
    for symbol, pi, qi in zip(p.alphabet.labels, p.probs, q.probs):
        if pi > 0.0 and qi == 0.0:
            raise ValidationError(
                f"support violation at symbol {symbol!r}: p = {pi}, q = 0")
    if np.allclose(p.probs, q.probs, rtol=0.0, atol=ATOL):
        return 0.0
    total = 0.0
    for pi, qi in zip(p.probs, q.probs):
        if pi > 0.0:
            total += pi * math.log2(pi / qi)
    return max(0.0, float(total))


def shannon_entropy(p: Distribution) -> float:
    """H(p) = -sum_x p(x) log2 p(x), in bits."""
    probs = p.probs[p.probs > 0.0]
    # max() also normalizes the -0.0 a point mass produces
    return max(0.0, float(-np.sum(probs * np.log2(probs))))


def output_distribution(m: Channel, prior: Distribution) -> Distribution:
    """p(y) = sum_x p(y | do(x)) prior(x), the effective distribution on outputs."""
    if prior.alphabet != m.input:
        raise ValidationError(
            f"prior is over {list(prior.alphabet.labels)}, "
            f"channel inputs are {list(m.input.labels)}")
    return Distribution(m.output, prior.probs @ m.matrix)


def actual_repertoire(m: Channel, prior: Distribution, y: str) -> Distribution:
    """The Bayes posterior over inputs given output y: p(y|do(x)) prior(x) / p(y)."""
    p_y = output_distribution(m, prior).prob(y)
    if p_y == 0.0:
        raise UndefinedOutputError(
            f"output {y!r} has probability 0 under this prior; "
            f"the actual repertoire is undefined")
    likelihood = m.matrix[:, m.output.index(y)]
    return Distribution(m.input, likelihood * prior.probs / p_y)


def effective_information(m: Channel, prior: Distribution, y: str) -> float:
    """ei = D[actual repertoire || prior], the information output y generates."""
    return kl_divergence(actual_repertoire(m, prior, y), prior)


def expected_effective_information(m: Channel, prior: Distribution) -> float:
    """E[ei | p(Y)]: effective information averaged over reachable outputs.

    Equal to the mutual information of the channel; :func:`mutual_information`
    computes the same quantity by the independent double-sum formula.
    """
    p_out = output_distribution(m, prior)
    total = 0.0
    for y, p_y in zip(m.output.labels, p_out.probs):
        if p_y > 0.0:
            total += p_y * effective_information(m, prior, y)
    return float(total)


def mutual_information(m: Channel, prior: Distribution) -> float:
    """I(X;Y) by the textbook double sum over the joint distribution."""
    p_out = output_distribution(m, prior)
    total = 0.0
    for i, p_x in enumerate(prior.probs):
        if p_x == 0.0:
            continue
        for j, p_y in enumerate(p_out.probs):
            p_yx = m.matrix[i, j]
            if p_yx == 0.0:
                continue
            total += p_x * p_yx * math.log2(p_yx / p_y)
    # the sum can undershoot zero by rounding when X and Y are independent
    return max(0.0, float(total))


def information_gain(prior: Distribution, posterior: Distribution) -> float:
    """D[posterior || prior]: Y/N questions answered in moving prior -> posterior."""
    return kl_divergence(posterior, prior)
