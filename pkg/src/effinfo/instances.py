"""Seeded random instances and exact identity checks.

Everything here is deterministic given the seed: generators draw from a
caller-supplied `random.Random`, and check functions return plain failure
messages (empty list = pass) so callers can aggregate or fail fast. The
checks assert the two learner identities in exact arithmetic:

* perfect-fit effective information equals l minus empirical VC-entropy
  (verified on integer counts: |L^-1(0)| = |q_D(F)| * 2^(|X|-l));
* expected risk equals (1 - Rademacher)/2 (verified on Fractions).

plus the supporting invariants (restriction-count bounds, weight partition,
negation symmetry, falsification coherence).
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .channels import Alphabet, Channel, Distribution
from .learning import (
    DEFAULT_POINT_CAP,
    Dataset,
    FunctionClass,
    Labeling,
    PointSet,
    ei_of_learner,
    expected_risk,
    falsification_report,
    information_gain_of_perfect_fit,
    rademacher,
    restriction_count,
    risk_distribution,
    vc_entropy,
)

# Float identities are checked this tight; exact identities use integers/Fractions.
FLOAT_TOL = 1e-12


def _positive_weights(rng: random.Random, n: int) -> list[float]:
    weights = []
    for _ in range(n):
        u = rng.random()
        while u <= 0.0:
            u = rng.random()
        weights.append(-math.log(u))
    return weights


def random_prior(rng: random.Random, alphabet: Alphabet) -> Distribution:
    """A strictly positive random distribution (uniform Dirichlet)."""
    weights = _positive_weights(rng, alphabet.size)
    total = sum(weights)
    return Distribution(alphabet, [w / total for w in weights])


def random_channel(rng: random.Random, n_inputs: int, n_outputs: int) -> Channel:
    """A random row-stochastic channel with named symbol alphabets."""
    inputs = Alphabet(f"x{i}" for i in range(n_inputs))
    outputs = Alphabet(f"y{j}" for j in range(n_outputs))
    rows = []
    for _ in range(n_inputs):
        weights = _positive_weights(rng, n_outputs)
        total = sum(weights)
        rows.append([w / total for w in weights])
    return Channel(inputs, outputs, rows)


def random_labeling(rng: random.Random, pointset: PointSet) -> Labeling:
    return Labeling(pointset, tuple(rng.choice((-1, 1)) for _ in pointset.points))


def random_learning_instance(rng: random.Random, min_points: int = 3,
                             max_points: int = 12) -> tuple[FunctionClass, Dataset]:
    """A random (F, D) pair: 1 <= l <= |X| distinct points, 1 <= |F| <= 2^|X|.

    Class sizes are drawn log-uniformly so the sweep regularly hits both
    singleton classes and the full 2^|X| hypothesis space.
    """
    n = rng.randint(min_points, max_points)
    pointset = PointSet(f"x{i}" for i in range(n))
    dataset = Dataset(pointset, rng.sample(range(n), rng.randint(1, n)))
    size = min(1 << n, rng.randint(1, 1 << rng.randint(0, n)))
    codes = rng.sample(range(1 << n), size)
    functions = [
        Labeling(pointset, tuple(1 if (c >> i) & 1 else -1 for i in range(n)))
        for c in codes
    ]
    return FunctionClass(pointset, functions), dataset


def check_proposition1(fc: FunctionClass, d: Dataset,
                       cap: int = DEFAULT_POINT_CAP) -> list[str]:
    """Perfect-fit effective information = l - VC-entropy, on exact counts."""
    msgs = []
    n, l = fc.pointset.size, d.length
    fit_count = risk_distribution(fc, d, cap).count(0)
    q_count = restriction_count(fc, d)
    if fit_count != q_count << (n - l):
        msgs.append(
            f"perfect-fit count {fit_count} != |q_D(F)| * 2^(|X|-l) "
            f"= {q_count} * 2^{n - l}")
    ei = ei_of_learner(fc, d, cap)
    gap = ei - (l - vc_entropy(fc, d))
    if abs(gap) > FLOAT_TOL:
        msgs.append(f"ei(L,0) = {ei!r} is off l - V by {gap!r}")
    return msgs


def check_proposition2(fc: FunctionClass, d: Dataset,
                       cap: int = DEFAULT_POINT_CAP) -> list[str]:
    """Expected risk = (1 - Rademacher)/2, as exact rationals."""
    e_risk = expected_risk(fc, d, cap)
    r = rademacher(fc, d, cap)
    if e_risk != (1 - r) / 2:
        return [f"E[eps] = {e_risk} but (1 - R)/2 = {(1 - r) / 2} (R = {r})"]
    return []


def check_falsification(fc: FunctionClass, d: Dataset,
                        cap: int = DEFAULT_POINT_CAP) -> list[str]:
    """The falsification report agrees with ei(L,0) and with expected risk."""
    msgs = []
    report = falsification_report(fc, d, cap)
    ei = ei_of_learner(fc, d, cap)
    if report.falsified_bits != ei:
        msgs.append(f"falsified bits {report.falsified_bits!r} != ei {ei!r}")
    total_fraction = sum((frac for _, frac in report.table), Fraction(0))
    if total_fraction != 1:
        msgs.append(f"falsification fractions sum to {total_fraction}, not 1")
    weighted = sum((eps * frac for eps, frac in report.table), Fraction(0))
    if weighted != expected_risk(fc, d, cap):
        msgs.append(f"falsification weighted sum {weighted} != expected risk")
    return msgs


def check_learning_invariants(fc: FunctionClass, d: Dataset,
                              cap: int = DEFAULT_POINT_CAP) -> list[str]:
    """Restriction bounds, weight partition, negation symmetry, info gain."""
    msgs = []
    q_count = restriction_count(fc, d)
    if not 1 <= q_count <= min(fc.size, 1 << d.length):
        msgs.append(f"restriction count {q_count} outside 1..min(|F|, 2^l)")
    rd = risk_distribution(fc, d, cap)
    if sum(rd.weights.values()) != 1:
        msgs.append("risk weights do not sum to 1")
    gain = information_gain_of_perfect_fit(fc, d, cap)
    if abs(gain - ei_of_learner(fc, d, cap)) > FLOAT_TOL:
        msgs.append(f"information gain {gain!r} differs from ei(L,0)")
    negated = FunctionClass(fc.pointset, [f.negated() for f in fc.functions])
    if vc_entropy(negated, d) != vc_entropy(fc, d):
        msgs.append("VC-entropy changed under class negation")
    if rademacher(negated, d, cap) != rademacher(fc, d, cap):
        msgs.append("Rademacher complexity changed under class negation")
    if expected_risk(negated, d, cap) != expected_risk(fc, d, cap):
        msgs.append("expected risk changed under class negation")
    if ei_of_learner(negated, d, cap) != ei_of_learner(fc, d, cap):
        msgs.append("ei(L,0) changed under class negation")
    return msgs


def check_instance(fc: FunctionClass, d: Dataset,
                   cap: int = DEFAULT_POINT_CAP) -> list[str]:
    """All identity and invariant checks for one (F, D) instance."""
    return (check_proposition1(fc, d, cap)
            + check_proposition2(fc, d, cap)
            + check_falsification(fc, d, cap)
            + check_learning_invariants(fc, d, cap))


@dataclass(frozen=True)
class VerifyResult:
    """Outcome of a seeded verification sweep."""

    total: int
    failures: tuple[tuple[int, tuple[str, ...]], ...]

    @property
    def passed(self) -> int:
        return self.total - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_instances(seed: int, count: int, min_points: int = 3,
                     max_points: int = 12,
                     cap: int = DEFAULT_POINT_CAP) -> VerifyResult:
    """Check `count` seeded random instances; deterministic for a given seed."""
    rng = random.Random(seed)
    failures = []
    for i in range(count):
        fc, d = random_learning_instance(rng, min_points, max_points)
        msgs = check_instance(fc, d, cap)
        if msgs:
            failures.append((i, tuple(msgs)))
    return VerifyResult(count, tuple(failures))
