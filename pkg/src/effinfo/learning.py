"""Empirical risk minimization as a deterministic system over hypothesis space.

The hypothesis space over a finite point set X is the set of all 2^|X| sign
labelings. Given a function class F and an unlabeled dataset D of l distinct
points, the learner maps each labeling to the minimum disagreement fraction
any f in F achieves on D. Treating that map as a physical system yields:

* its perfect-fit effective information, which equals l minus the empirical
  VC-entropy (log2 of the number of distinct restrictions of F to D), and
  counts falsified hypotheses in bits;
* its expected output risk, which equals (1 - R)/2 where R is the empirical
  Rademacher complexity.

Both identities are exact, so this module does exact arithmetic: counts are
Python integers, risks and weights are `fractions.Fraction`, and log2 is
applied only to integer counts (with the power-of-two part stripped first so
power-of-two counts give exact floats). The learner's value on a labeling
depends only on the labeling's restriction to the l distinct dataset points,
so each restriction pattern stands for exactly 2^(|X| - l) full labelings;
enumerations therefore run over 2^l patterns and multiply counts back up,
which is exactly equivalent to the 2^|X| sweep (the test suite checks this
against a literal sweep at small sizes).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import EnumerationCapError, ValidationError

# Largest |X| for which 2^|X|-labeling enumerations are attempted by default.
DEFAULT_POINT_CAP = 20


@dataclass(frozen=True)
class PointSet:
    """An ordered set of distinct point identifiers."""

    points: tuple[str, ...]

    def __init__(self, points):
        points = tuple(str(p) for p in points)
        if not points:
            raise ValidationError("point set must contain at least one point")
        if len(set(points)) != len(points):
            dupes = sorted({p for p in points if points.count(p) > 1})
            raise ValidationError(f"point identifiers must be distinct, repeated: {dupes}")
        object.__setattr__(self, "points", points)

    @property
    def size(self) -> int:
        return len(self.points)

    def index(self, point: str) -> int:
        try:
            return self.points.index(point)
        except ValueError:
            raise ValidationError(
                f"unknown point {point!r}, expected one of {list(self.points)}") from None

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Labeling:
    """A sign assignment (+1 / -1) to every point of a PointSet."""

    pointset: PointSet
    signs: tuple[int, ...]

    def __init__(self, pointset: PointSet, signs):
        signs = tuple(int(s) for s in signs)
        if len(signs) != pointset.size:
            raise ValidationError(
                f"labeling has {len(signs)} signs for {pointset.size} points")
        for p, s in zip(pointset.points, signs):
            if s not in (-1, 1):
                raise ValidationError(f"sign at point {p!r} is {s}, must be +1 or -1")
        object.__setattr__(self, "pointset", pointset)
        object.__setattr__(self, "signs", signs)

    def negated(self) -> "Labeling":
        return Labeling(self.pointset, tuple(-s for s in self.signs))


@dataclass(frozen=True)
class FunctionClass:
    """A nonempty set of distinct labelings the learner may fit with."""

    pointset: PointSet
    functions: tuple[Labeling, ...]

    def __init__(self, pointset: PointSet, functions):
        functions = tuple(functions)
        if not functions:
            raise ValidationError("function class must be nonempty")
        seen = set()
        for f in functions:
            if f.pointset != pointset:
                raise ValidationError("all functions must be over the same point set")
            if f.signs in seen:
                raise ValidationError(f"duplicate function {f.signs} in class")
            seen.add(f.signs)
        object.__setattr__(self, "pointset", pointset)
        object.__setattr__(self, "functions", functions)

    @property
    def size(self) -> int:
        return len(self.functions)


@dataclass(frozen=True)
class Dataset:
    """An ordered tuple of l distinct point indices (the unlabeled data)."""

    pointset: PointSet
    indices: tuple[int, ...]

    def __init__(self, pointset: PointSet, indices):
        indices = tuple(int(i) for i in indices)
        if not indices:
            raise ValidationError("dataset must contain at least one point")
        seen = set()
        for i in indices:
            if not 0 <= i < pointset.size:
                raise ValidationError(
                    f"dataset index {i} out of range for {pointset.size} points")
            if i in seen:
                raise ValidationError(
                    f"dataset points must be distinct, point {pointset.points[i]!r} repeats")
            seen.add(i)
        object.__setattr__(self, "pointset", pointset)
        object.__setattr__(self, "indices", indices)

    @classmethod
    def from_points(cls, pointset: PointSet, names) -> "Dataset":
        return cls(pointset, tuple(pointset.index(n) for n in names))

    @property
    def length(self) -> int:
        return len(self.indices)

    @property
    def points(self) -> tuple[str, ...]:
        return tuple(self.pointset.points[i] for i in self.indices)


@dataclass(frozen=True)
class Risk:
    """An empirical risk k/l, stored as the exact mismatch count."""

    mismatches: int
    length: int

    def __init__(self, mismatches: int, length: int):
        if length < 1:
            raise ValidationError(f"risk length must be >= 1, got {length}")
        if not 0 <= mismatches <= length:
            raise ValidationError(
                f"mismatch count {mismatches} outside 0..{length}")
        object.__setattr__(self, "mismatches", int(mismatches))
        object.__setattr__(self, "length", int(length))

    @property
    def value(self) -> Fraction:
        return Fraction(self.mismatches, self.length)


@dataclass(frozen=True)
class RiskDistribution:
    """The learner's output distribution over risks, with exact integer counts.

    `counts` maps each realized mismatch count k to the number of labelings
    of X whose best achievable fit has exactly k mismatches on the dataset;
    the counts partition all 2^|X| labelings.
    """

    length: int
    total: int
    counts: tuple[tuple[int, int], ...]

    def __init__(self, length: int, total: int, counts):
        counts = tuple(sorted((int(k), int(c)) for k, c in dict(counts).items()))
        for k, c in counts:
            if not 0 <= k <= length:
                raise ValidationError(f"mismatch count {k} outside 0..{length}")
            if c <= 0:
                raise ValidationError(f"count for k={k} must be positive, got {c}")
        if sum(c for _, c in counts) != total:
            raise ValidationError(
                f"counts sum to {sum(c for _, c in counts)}, expected {total}")
        object.__setattr__(self, "length", int(length))
        object.__setattr__(self, "total", int(total))
        object.__setattr__(self, "counts", counts)

    @property
    def weights(self) -> dict[int, Fraction]:
        """Exact probability of each realized mismatch count."""
        return {k: Fraction(c, self.total) for k, c in self.counts}

    def count(self, mismatches: int) -> int:
        return dict(self.counts).get(mismatches, 0)


@dataclass(frozen=True)
class FalsificationReport:
    """Hypothesis accounting for a learner, in bits and per-risk fractions.

    `falsified_bits` is the perfect-fit effective information: total
    hypothesis bits |X| minus log2 of the number of labelings fitted with
    zero error. `table` pairs each realized risk with the exact fraction of
    hypothesis space whose best fit is that risk.
    """

    total_hypotheses_bits: float
    fitted_bits: float
    falsified_bits: float
    table: tuple[tuple[Fraction, Fraction], ...]


def _log2_count(n: int) -> float:
    """log2 of a positive integer, exact whenever n is a power of two."""
    twos = (n & -n).bit_length() - 1
    odd = n >> twos
    if odd == 1:
        return float(twos)
    return twos + math.log2(odd)


def _check_pointsets(*objs) -> None:
    first = objs[0].pointset
    for other in objs[1:]:
        if other.pointset != first:
            raise ValidationError("arguments are over different point sets")


def _check_cap(pointset: PointSet, cap: int) -> None:
    if pointset.size > cap:
        raise EnumerationCapError(
            f"|X| = {pointset.size} exceeds the enumeration cap {cap} "
            f"(2^{pointset.size} labelings); raise the cap to force it")


def _restriction_mask_set(fc: FunctionClass, d: Dataset) -> set[int]:
    """Distinct restrictions of F to the dataset, as bitmasks.

    Bit k of a mask is set iff the function labels dataset position k
    with +1.
    """
    masks = set()
    for f in fc.functions:
        m = 0
        for bit, idx in enumerate(d.indices):
            if f.signs[idx] > 0:
                m |= 1 << bit
        masks.add(m)
    return masks


def _restriction_masks(fc: FunctionClass, d: Dataset) -> np.ndarray:
    if d.length > 32:
        raise EnumerationCapError(
            f"dataset length {d.length} exceeds the 32-position pattern limit")
    return np.array(sorted(_restriction_mask_set(fc, d)), dtype=np.uint32)


def _min_mismatches_per_pattern(masks: np.ndarray, length: int) -> np.ndarray:
    """For every sign pattern on the dataset, the best-fit mismatch count.

    Hamming distance via XOR + popcount against every restriction mask,
    blocked to bound peak memory.
    """
    n_patterns = 1 << length
    out = np.empty(n_patterns, dtype=np.uint8)
    block = max(1, (1 << 22) // masks.size)
    for start in range(0, n_patterns, block):
        stop = min(start + block, n_patterns)
        chunk = np.arange(start, stop, dtype=np.uint32)
        xor = chunk[:, None] ^ masks[None, :]
        out[start:stop] = np.bitwise_count(xor).min(axis=1)
    return out


def _sign_matrix(codes: np.ndarray, length: int) -> np.ndarray:
    """Decode bitmask rows into a +1/-1 matrix with one column per position."""
    bits = (codes[:, None] >> np.arange(length, dtype=np.uint32)[None, :]) & 1
    return bits.astype(np.int32) * 2 - 1


def empirical_risk(f: Labeling, target: Labeling, d: Dataset) -> Risk:
    """Disagreement fraction of f against the target labeling on the dataset."""
    _check_pointsets(f, target, d)
    mismatches = sum(1 for i in d.indices if f.signs[i] != target.signs[i])
    return Risk(mismatches, d.length)


def erm(fc: FunctionClass, d: Dataset, target: Labeling) -> Risk:
    """The minimum empirical risk over the class; only the value, no argmin."""
    _check_pointsets(fc, d, target)
    best = min(empirical_risk(f, target, d).mismatches for f in fc.functions)
    return Risk(best, d.length)


def restriction_count(fc: FunctionClass, d: Dataset) -> int:
    """|q_D(F)|: the number of distinct restrictions of F to the dataset."""
    _check_pointsets(fc, d)
    return len(_restriction_mask_set(fc, d))


def vc_entropy(fc: FunctionClass, d: Dataset) -> float:
    """Empirical VC-entropy: log2 of the restriction count, in bits."""
    return _log2_count(restriction_count(fc, d))


def risk_distribution(fc: FunctionClass, d: Dataset,
                      cap: int = DEFAULT_POINT_CAP) -> RiskDistribution:
    """Group all 2^|X| labelings by their best-fit mismatch count.

    Each of the 2^l restriction patterns stands for 2^(|X| - l) labelings
    of X, so pattern counts are scaled back up to exact labeling counts.
    """
    _check_pointsets(fc, d)
    _check_cap(fc.pointset, cap)
    masks = _restriction_masks(fc, d)
    mins = _min_mismatches_per_pattern(masks, d.length)
    pattern_counts = np.bincount(mins, minlength=d.length + 1)
    multiplier = 1 << (fc.pointset.size - d.length)
    counts = {k: int(c) * multiplier for k, c in enumerate(pattern_counts) if c}
    return RiskDistribution(d.length, 1 << fc.pointset.size, counts)


def _ei_from_fit_count(n_points: int, fit_count: int) -> float:
    return float(n_points) - _log2_count(fit_count)


def ei_of_learner(fc: FunctionClass, d: Dataset,
                  cap: int = DEFAULT_POINT_CAP) -> float:
    """Effective information of the learner's perfect-fit output, in bits.

    |X| minus log2 of the number of labelings some f in F fits exactly;
    always defined because any member of F fits its own labeling.
    """
    rd = risk_distribution(fc, d, cap)
    return _ei_from_fit_count(fc.pointset.size, rd.count(0))


def rademacher(fc: FunctionClass, d: Dataset,
               cap: int = DEFAULT_POINT_CAP) -> Fraction:
    """Empirical Rademacher complexity, as an exact rational.

    Averages, over all 2^l sign patterns on the dataset, the best
    correlation (1/l) sum_k sigma_k f(d_k) achievable by the class. The
    average over all 2^|X| labelings of X is identical because the
    correlation depends only on the restriction to the l distinct points.
    """
    _check_pointsets(fc, d)
    _check_cap(fc.pointset, cap)
    l = d.length
    q = _sign_matrix(_restriction_masks(fc, d), l)
    n_patterns = 1 << l
    total = 0
    block = max(1, (1 << 22) // q.shape[0])
    for start in range(0, n_patterns, block):
        stop = min(start + block, n_patterns)
        s = _sign_matrix(np.arange(start, stop, dtype=np.uint32), l)
        corr = s @ q.T
        total += int(corr.max(axis=1).sum())
    return Fraction(total, l * n_patterns)


def expected_risk(fc: FunctionClass, d: Dataset,
                  cap: int = DEFAULT_POINT_CAP) -> Fraction:
    """Expected output risk of the learner over hypothesis space, exact."""
    rd = risk_distribution(fc, d, cap)
    return sum((Fraction(k, rd.length) * w for k, w in rd.weights.items()),
               Fraction(0))


def falsification_report(fc: FunctionClass, d: Dataset,
                         cap: int = DEFAULT_POINT_CAP) -> FalsificationReport:
    """Bits of hypothesis space falsified, and the per-risk falsification table."""
    rd = risk_distribution(fc, d, cap)
    n = fc.pointset.size
    fitted_bits = _log2_count(rd.count(0))
    table = tuple((Fraction(k, rd.length), w) for k, w in sorted(rd.weights.items()))
    return FalsificationReport(
        total_hypotheses_bits=float(n),
        fitted_bits=fitted_bits,
        falsified_bits=_ei_from_fit_count(n, rd.count(0)),
        table=table,
    )


def information_gain_of_perfect_fit(fc: FunctionClass, d: Dataset,
                                    cap: int = DEFAULT_POINT_CAP) -> float:
    """Bits gained about hypothesis space on learning that some f fits perfectly.

    Equals l minus the empirical VC-entropy, and equals the KL divergence of
    the uniform distribution on perfectly-fitted labelings from the uniform
    distribution on all labelings.
    """
    _check_pointsets(fc, d)
    _check_cap(fc.pointset, cap)
    return float(d.length) - vc_entropy(fc, d)
