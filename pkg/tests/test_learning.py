import itertools
import random
from fractions import Fraction

import pytest

from effinfo import (
    Alphabet,
    Dataset,
    Distribution,
    EnumerationCapError,
    FunctionClass,
    Labeling,
    PointSet,
    Risk,
    ValidationError,
    ei_of_learner,
    empirical_risk,
    erm,
    expected_risk,
    falsification_report,
    information_gain_of_perfect_fit,
    kl_divergence,
    rademacher,
    restriction_count,
    risk_distribution,
    vc_entropy,
)
from effinfo.instances import random_learning_instance

ABC = PointSet(["a", "b", "c"])
AB = PointSet(["a", "b"])


def labeling(ps, signs):
    return Labeling(ps, signs)


def full_class(ps):
    """Every labeling of the point set."""
    n = ps.size
    return FunctionClass(ps, [
        Labeling(ps, tuple(1 if (c >> i) & 1 else -1 for i in range(n)))
        for c in range(1 << n)
    ])


def constant_plus_class(ps):
    return FunctionClass(ps, [Labeling(ps, (1,) * ps.size)])


# ---------------------------------------------------------------------------
# brute-force oracles: literal sweeps over all 2^|X| labelings, no library
# algorithms involved
# ---------------------------------------------------------------------------

def oracle_risk_counts(fc, d):
    counts = {}
    for bits in itertools.product((1, -1), repeat=fc.pointset.size):
        best = min(
            sum(1 for i in d.indices if f.signs[i] != bits[i])
            for f in fc.functions)
        counts[best] = counts.get(best, 0) + 1
    return counts


def oracle_rademacher(fc, d):
    total = 0
    for bits in itertools.product((1, -1), repeat=fc.pointset.size):
        total += max(
            sum(bits[i] * f.signs[i] for i in d.indices)
            for f in fc.functions)
    return Fraction(total, d.length * 2 ** fc.pointset.size)


def oracle_vc_entropy_count(fc, d):
    return len({tuple(f.signs[i] for i in d.indices) for f in fc.functions})


class TestTypes:
    def test_pointset_duplicates_rejected(self):
        with pytest.raises(ValidationError, match="distinct"):
            PointSet(["a", "b", "a"])

    def test_labeling_bad_sign_rejected(self):
        with pytest.raises(ValidationError, match="'b'"):
            Labeling(AB, (1, 0))

    def test_function_class_duplicates_rejected(self):
        f = Labeling(AB, (1, 1))
        with pytest.raises(ValidationError, match="duplicate"):
            FunctionClass(AB, [f, Labeling(AB, (1, 1))])

    def test_function_class_must_be_nonempty(self):
        with pytest.raises(ValidationError, match="nonempty"):
            FunctionClass(AB, [])

    def test_dataset_duplicate_point_named(self):
        with pytest.raises(ValidationError, match="'b'"):
            Dataset(ABC, (1, 1))

    def test_dataset_from_points(self):
        d = Dataset.from_points(ABC, ["c", "a"])
        assert d.indices == (2, 0)
        assert d.points == ("c", "a")

    def test_dataset_index_out_of_range(self):
        with pytest.raises(ValidationError, match="out of range"):
            Dataset(AB, (0, 5))

    def test_risk_value(self):
        assert Risk(1, 2).value == Fraction(1, 2)
        with pytest.raises(ValidationError):
            Risk(3, 2)


class TestEmpiricalRisk:
    def test_perfect_fit(self):
        target = labeling(ABC, (1, -1, 1))
        d = Dataset(ABC, (0, 1))
        assert empirical_risk(target, target, d).value == 0

    def test_total_mismatch(self):
        f = labeling(ABC, (1, -1, 1))
        target = labeling(ABC, (-1, 1, -1))
        d = Dataset(ABC, (0, 1, 2))
        assert empirical_risk(f, target, d).value == 1

    def test_one_disagreement_on_dataset(self):
        f = labeling(ABC, (1, 1, -1))
        target = labeling(ABC, (1, -1, 1))
        d = Dataset.from_points(ABC, ["a", "b"])
        assert empirical_risk(f, target, d) == Risk(1, 2)

    def test_pointset_mismatch(self):
        with pytest.raises(ValidationError):
            empirical_risk(labeling(AB, (1, 1)), labeling(ABC, (1, 1, 1)),
                           Dataset(ABC, (0,)))


class TestErm:
    def test_target_in_class(self):
        fc = full_class(AB)
        target = labeling(AB, (1, -1))
        assert erm(fc, Dataset(AB, (0, 1)), target).value == 0

    def test_constant_class_against_all_minus(self):
        fc = constant_plus_class(AB)
        target = labeling(AB, (-1, -1))
        assert erm(fc, Dataset(AB, (0, 1)), target).value == 1

    def test_two_function_class(self):
        fc = FunctionClass(AB, [labeling(AB, (1, 1)), labeling(AB, (-1, -1))])
        target = labeling(AB, (1, -1))
        assert erm(fc, Dataset(AB, (0, 1)), target) == Risk(1, 2)


class TestRiskDistribution:
    def test_full_class_fits_everything(self):
        rd = risk_distribution(full_class(ABC), Dataset(ABC, (0, 1)))
        assert rd.counts == ((0, 8),)
        assert rd.weights == {0: Fraction(1)}

    def test_constant_class_two_points(self):
        rd = risk_distribution(constant_plus_class(AB), Dataset(AB, (0, 1)))
        assert rd.weights == {0: Fraction(1, 4), 1: Fraction(1, 2), 2: Fraction(1, 4)}

    def test_matches_literal_enumeration(self):
        rng = random.Random(11)
        for _ in range(50):
            fc, d = random_learning_instance(rng, min_points=1, max_points=8)
            rd = risk_distribution(fc, d)
            assert dict(rd.counts) == oracle_risk_counts(fc, d)

    def test_counts_partition_hypothesis_space(self):
        rng = random.Random(12)
        for _ in range(30):
            fc, d = random_learning_instance(rng, min_points=1, max_points=10)
            rd = risk_distribution(fc, d)
            assert sum(c for _, c in rd.counts) == 2 ** fc.pointset.size
            assert sum(rd.weights.values()) == 1

    def test_cap_exceeded(self):
        ps = PointSet([f"p{i}" for i in range(21)])
        fc = FunctionClass(ps, [Labeling(ps, (1,) * 21)])
        d = Dataset(ps, (0,))
        with pytest.raises(EnumerationCapError, match="cap 20"):
            risk_distribution(fc, d)
        # explicit higher cap unlocks it (the pattern sweep is still 2^l = 2)
        assert risk_distribution(fc, d, cap=21).count(0) == 2 ** 20


class TestVcEntropy:
    def test_single_function(self):
        assert vc_entropy(constant_plus_class(ABC), Dataset(ABC, (0, 1))) == 0.0

    def test_full_shattering(self):
        for l in (1, 2, 3):
            assert vc_entropy(full_class(ABC), Dataset(ABC, tuple(range(l)))) == float(l)

    def test_duplicate_restrictions_collapse(self):
        fc = FunctionClass(ABC, [labeling(ABC, (1, 1, 1)), labeling(ABC, (1, 1, -1))])
        assert vc_entropy(fc, Dataset.from_points(ABC, ["a", "b"])) == 0.0

    def test_restriction_count_bounds(self):
        rng = random.Random(13)
        for _ in range(30):
            fc, d = random_learning_instance(rng, min_points=1, max_points=10)
            q = restriction_count(fc, d)
            assert 1 <= q <= min(fc.size, 2 ** d.length)
            assert q == oracle_vc_entropy_count(fc, d)


class TestEiOfLearner:
    def test_shattering_gives_zero(self):
        assert ei_of_learner(full_class(ABC), Dataset(ABC, (0, 1, 2))) == 0.0

    def test_constant_class_two_of_five_points(self):
        # |L^-1(0)| = 2^(|X|-2), so ei = 2 bits regardless of |X|
        ps = PointSet([f"p{i}" for i in range(5)])
        assert ei_of_learner(constant_plus_class(ps), Dataset(ps, (1, 3))) == 2.0

    def test_equals_length_minus_vc_entropy(self):
        rng = random.Random(14)
        for _ in range(100):
            fc, d = random_learning_instance(rng, min_points=1, max_points=10)
            ei = ei_of_learner(fc, d)
            assert ei == pytest.approx(d.length - vc_entropy(fc, d), abs=1e-12)
            # the exact integer form of the same identity
            assert (risk_distribution(fc, d).count(0)
                    == restriction_count(fc, d) << (fc.pointset.size - d.length))


class TestRademacher:
    def test_shattering_gives_one(self):
        assert rademacher(full_class(ABC), Dataset(ABC, (0, 1))) == 1

    def test_constant_class_two_points(self):
        # correlations over the 4 sign patterns are {2, 0, 0, -2}/2
        assert rademacher(constant_plus_class(AB), Dataset(AB, (0, 1))) == 0

    def test_matches_literal_enumeration(self):
        rng = random.Random(15)
        for _ in range(50):
            fc, d = random_learning_instance(rng, min_points=1, max_points=8)
            assert rademacher(fc, d) == oracle_rademacher(fc, d)

    def test_range(self):
        rng = random.Random(16)
        for _ in range(30):
            fc, d = random_learning_instance(rng, min_points=1, max_points=8)
            assert -1 <= rademacher(fc, d) <= 1


class TestExpectedRisk:
    def test_full_class(self):
        assert expected_risk(full_class(ABC), Dataset(ABC, (0, 1))) == 0

    def test_constant_class(self):
        assert expected_risk(constant_plus_class(AB), Dataset(AB, (0, 1))) == Fraction(1, 2)

    def test_proposition_two(self):
        rng = random.Random(17)
        for _ in range(100):
            fc, d = random_learning_instance(rng, min_points=1, max_points=10)
            assert expected_risk(fc, d) == (1 - rademacher(fc, d)) / 2


class TestFalsificationReport:
    def test_full_class(self):
        report = falsification_report(full_class(ABC), Dataset(ABC, (0, 1)))
        assert report.falsified_bits == 0.0
        assert report.table == ((Fraction(0), Fraction(1)),)

    def test_constant_class(self):
        report = falsification_report(constant_plus_class(AB), Dataset(AB, (0, 1)))
        assert report.total_hypotheses_bits == 2.0
        assert report.fitted_bits == 0.0
        assert report.falsified_bits == 2.0
        assert report.table == ((Fraction(0), Fraction(1, 4)),
                                (Fraction(1, 2), Fraction(1, 2)),
                                (Fraction(1), Fraction(1, 4)))

    def test_coherence_with_ei_and_expected_risk(self):
        rng = random.Random(18)
        for _ in range(50):
            fc, d = random_learning_instance(rng, min_points=1, max_points=10)
            report = falsification_report(fc, d)
            assert report.falsified_bits == ei_of_learner(fc, d)
            weighted = sum((eps * frac for eps, frac in report.table), Fraction(0))
            assert weighted == expected_risk(fc, d)


class TestInformationGainOfPerfectFit:
    def test_shattering(self):
        assert information_gain_of_perfect_fit(full_class(ABC), Dataset(ABC, (0, 1))) == 0.0

    def test_single_function_three_points(self):
        assert information_gain_of_perfect_fit(
            constant_plus_class(ABC), Dataset(ABC, (0, 1, 2))) == 3.0

    def test_equals_explicit_kl_over_hypothesis_space(self):
        rng = random.Random(19)
        for _ in range(20):
            fc, d = random_learning_instance(rng, min_points=3, max_points=10)
            n = fc.pointset.size
            patterns = {tuple(f.signs[i] for i in d.indices) for f in fc.functions}
            fitted = [
                c for c in range(1 << n)
                if tuple(1 if (c >> i) & 1 else -1 for i in d.indices) in patterns
            ]
            hyp = Alphabet([f"h{c}" for c in range(1 << n)])
            prior = Distribution.uniform(hyp)
            posterior = Distribution(
                hyp, [1.0 / len(fitted) if c in set(fitted) else 0.0
                      for c in range(1 << n)])
            gain = information_gain_of_perfect_fit(fc, d)
            assert gain == pytest.approx(kl_divergence(posterior, prior), abs=1e-9)
            assert gain == pytest.approx(ei_of_learner(fc, d), abs=1e-12)


class TestDeterminism:
    def test_repeated_calls_identical(self):
        rng = random.Random(20)
        fc, d = random_learning_instance(rng, min_points=6, max_points=10)
        assert risk_distribution(fc, d) == risk_distribution(fc, d)
        assert rademacher(fc, d) == rademacher(fc, d)
        assert vc_entropy(fc, d) == vc_entropy(fc, d)
        assert ei_of_learner(fc, d) == ei_of_learner(fc, d)
        assert falsification_report(fc, d) == falsification_report(fc, d)
