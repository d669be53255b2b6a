"""Unit tests for the metrics module.

Tests metric computation:
- Single-pair metrics and their zero-denominator conventions
- Scored examples of real recommendations
- The fixed n_R / fixed n_G sweeps (via cmd_sweep)
- Identities between the metrics on random and exhaustive inputs
- Averaging and display rounding
"""

import itertools
import random

import pytest

from src.errors import ConfigError, EmptyResultError
from src.harness import cmd_sweep
from src.metrics import (
    classify_outcome,
    display_round,
    evaluate,
    f1,
    hit_rate,
    hit_ratio,
    match_count,
    precision,
    recall,
    scores_from_counts,
    summarize,
)
from src.schema import EvalPair
from tests.conftest import SCORED_EXAMPLES


def _pair(recommended: list[str], ground_truth: list[str]) -> EvalPair:
    return EvalPair(record_id="x", recommended=recommended, ground_truth=ground_truth)


def _labels(prefix: str, count: int) -> list[str]:
    return [f"#{prefix}{index}" for index in range(count)]


def _pair_from_counts(m: int, n_r: int, n_g: int) -> EvalPair:
    shared = _labels("s", m)
    return _pair(shared + _labels("r", n_r - m), shared + _labels("g", n_g - m))


def _rounded(scores) -> tuple[str, ...]:
    return tuple(
        str(display_round(value))
        for value in (scores.hit_rate, scores.precision, scores.recall, scores.f1, scores.hit_ratio)
    )


class TestMatchCount:
    """Tests for match_count."""

    def test_single_match(self) -> None:
        """One shared label gives m = 1."""
        assert match_count(_pair(["#iPhone", "#apple", "#iphoneapp"], ["#iPhone"])) == 1

    def test_empty_recommendation(self) -> None:
        """No recommendations means no matches."""
        assert match_count(_pair([], ["#a", "#b"])) == 0

    def test_labels_compared_canonically(self) -> None:
        """Case and the leading '#' do not matter."""
        pair = _pair(
            ["#Original", "#acrylic", "#decor"],
            ["#original", "#acrylic", "#cmarkandu", "#abstract", "#blue", "#fabulous", "#decor"],
        )
        assert match_count(pair) == 3

    def test_hash_prefix_optional(self) -> None:
        """'apple' and '#APPLE' are the same label."""
        assert match_count(_pair(["apple"], ["#APPLE"])) == 1


class TestSinglePairMetrics:
    """Tests for precision, recall, f1, hit_rate and hit_ratio."""

    def test_precision_divides_by_recommendations(self) -> None:
        """Precision is m / n_r."""
        assert precision(_pair_from_counts(1, 3, 1)) == pytest.approx(1 / 3)
        assert precision(_pair_from_counts(1, 4, 3)) == 0.25

    def test_precision_without_recommendations(self) -> None:
        """Precision is 0 when nothing was recommended."""
        assert precision(_pair([], ["#a"])) == 0.0

    def test_recall_divides_by_ground_truth(self) -> None:
        """Recall is m / n_g."""
        assert recall(_pair_from_counts(3, 3, 7)) == pytest.approx(3 / 7)
        assert recall(_pair_from_counts(2, 3, 4)) == 0.5

    def test_recall_without_matches(self) -> None:
        """Recall is 0 when nothing matches."""
        assert recall(_pair_from_counts(0, 3, 5)) == 0.0

    def test_recall_without_ground_truth(self) -> None:
        """Recall is 0 when the ground truth is empty."""
        assert recall(_pair(["#a"], [])) == 0.0

    def test_f1_is_harmonic_mean(self) -> None:
        """F1 of P=1/3, R=1 is 0.5."""
        assert f1(_pair_from_counts(1, 3, 1)) == pytest.approx(0.5)

    def test_f1_of_partial_recall(self) -> None:
        """F1 of P=1, R=3/7 is 0.6."""
        assert f1(_pair_from_counts(3, 3, 7)) == pytest.approx(0.6)

    def test_f1_without_matches(self) -> None:
        """F1 is 0 when precision and recall are both 0."""
        assert f1(_pair_from_counts(0, 3, 3)) == 0.0

    def test_hit_rate(self) -> None:
        """Hit rate is 1 with any match, 0 otherwise."""
        assert hit_rate(_pair_from_counts(1, 3, 7)) == 1
        assert hit_rate(_pair_from_counts(0, 3, 7)) == 0
        assert hit_rate(_pair([], ["#a"])) == 0

    def test_hit_ratio_divides_by_smaller_side(self) -> None:
        """Hit ratio is m / min(n_r, n_g)."""
        assert hit_ratio(_pair_from_counts(1, 3, 2)) == 0.5
        assert hit_ratio(_pair_from_counts(3, 3, 7)) == 1.0
        assert hit_ratio(_pair_from_counts(2, 5, 3)) == pytest.approx(2 / 3)

    def test_hit_ratio_with_empty_side(self) -> None:
        """Hit ratio is 0 when either side is empty."""
        assert hit_ratio(_pair([], ["#a"])) == 0.0
        assert hit_ratio(_pair(["#a"], [])) == 0.0

    def test_perfect_top1(self) -> None:
        """A correct single recommendation for a single hashtag scores 1 everywhere."""
        scores = evaluate(_pair(["#a"], ["#a"]))
        assert (scores.hit_rate, scores.precision, scores.recall, scores.f1, scores.hit_ratio) == (1, 1, 1, 1, 1)


class TestScoredExamples:
    """Tests against the six scored real recommendations."""

    @pytest.mark.parametrize("recommended,ground_truth,expected", SCORED_EXAMPLES)
    def test_example_scores(
        self,
        recommended: list[str],
        ground_truth: list[str],
        expected: tuple[str, ...],
    ) -> None:
        """Rounded scores equal the published values."""
        assert _rounded(evaluate(_pair(recommended, ground_truth))) == expected

    def test_partially_correct_examples(self) -> None:
        """Examples 2, 4 and 5 are partially correct."""
        outcomes = [evaluate(_pair(r, g)).outcome for r, g, _ in SCORED_EXAMPLES]
        assert outcomes == [
            "fully_correct",
            "partially_correct",
            "fully_correct",
            "partially_correct",
            "partially_correct",
            "fully_correct",
        ]


# Rounded (hit rate, P, R, F1, hit ratio) per row. The P=1/3, R=1/4 cell
# is 0.2857..., which rounds half-up to 0.29.
FIXED_NR_TABLES: list[tuple[list[int], list[tuple[str, ...]]]] = [
    (
        [1, 1, 1, 1, 1],
        [
            ("1.00", "0.33", "1.00", "0.50", "1.00"),
            ("1.00", "0.33", "0.50", "0.40", "0.50"),
            ("1.00", "0.33", "0.33", "0.33", "0.33"),
            ("1.00", "0.33", "0.25", "0.29", "0.33"),
            ("1.00", "0.33", "0.20", "0.25", "0.33"),
        ],
    ),
    (
        [1, 2, 2, 2, 2],
        [
            ("1.00", "0.33", "1.00", "0.50", "1.00"),
            ("1.00", "0.67", "1.00", "0.80", "1.00"),
            ("1.00", "0.67", "0.67", "0.67", "0.67"),
            ("1.00", "0.67", "0.50", "0.57", "0.67"),
            ("1.00", "0.67", "0.40", "0.50", "0.67"),
        ],
    ),
    (
        [1, 2, 3, 3, 3],
        [
            ("1.00", "0.33", "1.00", "0.50", "1.00"),
            ("1.00", "0.67", "1.00", "0.80", "1.00"),
            ("1.00", "1.00", "1.00", "1.00", "1.00"),
            ("1.00", "1.00", "0.75", "0.86", "1.00"),
            ("1.00", "1.00", "0.60", "0.75", "1.00"),
        ],
    ),
]

FIXED_NG_TABLES: list[tuple[list[int], list[tuple[str, ...]]]] = [
    (
        [1, 1, 1, 1, 1],
        [
            ("1.00", "1.00", "0.33", "0.50", "1.00"),
            ("1.00", "0.50", "0.33", "0.40", "0.50"),
            ("1.00", "0.33", "0.33", "0.33", "0.33"),
            ("1.00", "0.25", "0.33", "0.29", "0.33"),
            ("1.00", "0.20", "0.33", "0.25", "0.33"),
        ],
    ),
    (
        [1, 2, 2, 2, 2],
        [
            ("1.00", "1.00", "0.33", "0.50", "1.00"),
            ("1.00", "1.00", "0.67", "0.80", "1.00"),
            ("1.00", "0.67", "0.67", "0.67", "0.67"),
            ("1.00", "0.50", "0.67", "0.57", "0.67"),
            ("1.00", "0.40", "0.67", "0.50", "0.67"),
        ],
    ),
    (
        [1, 2, 3, 3, 3],
        [
            ("1.00", "1.00", "0.33", "0.50", "1.00"),
            ("1.00", "1.00", "0.67", "0.80", "1.00"),
            ("1.00", "1.00", "1.00", "1.00", "1.00"),
            ("1.00", "0.75", "1.00", "0.86", "1.00"),
            ("1.00", "0.60", "1.00", "0.75", "1.00"),
        ],
    ),
]


class TestSweeps:
    """Tests for cmd_sweep against the published sweep tables."""

    @pytest.mark.parametrize("schedule,expected", FIXED_NR_TABLES)
    def test_fixed_recommendation_count(self, schedule: list[int], expected: list[tuple[str, ...]]) -> None:
        """n_R = 3 with n_G from 1 to 5 reproduces every cell."""
        table = cmd_sweep("fix_nr", 3, schedule)

        assert [row.n_g for row in table.rows] == [1, 2, 3, 4, 5]
        assert all(row.n_r == 3 for row in table.rows)
        assert [row.scores.m for row in table.rows] == schedule
        assert [_rounded(row.scores) for row in table.rows] == expected

    @pytest.mark.parametrize("schedule,expected", FIXED_NG_TABLES)
    def test_fixed_ground_truth_count(self, schedule: list[int], expected: list[tuple[str, ...]]) -> None:
        """n_G = 3 with n_R from 1 to 5 reproduces every cell."""
        table = cmd_sweep("fix_ng", 3, schedule)

        assert [row.n_r for row in table.rows] == [1, 2, 3, 4, 5]
        assert [_rounded(row.scores) for row in table.rows] == expected

    def test_perfect_single_row(self) -> None:
        """fix_nr=1 with m=1 scores 1 everywhere."""
        table = cmd_sweep("fix_nr", 1, [1])
        assert _rounded(table.rows[0].scores) == ("1.00",) * 5

    def test_infeasible_row_names_the_row(self) -> None:
        """m larger than min(n_R, n_G) is rejected with the row named."""
        with pytest.raises(ConfigError, match="n_G=2"):
            cmd_sweep("fix_nr", 3, [1, 3])

    def test_unknown_mode(self) -> None:
        """Only fix_nr and fix_ng are accepted."""
        with pytest.raises(ConfigError):
            cmd_sweep("fix_k", 3, [1])

    def test_empty_schedule(self) -> None:
        """An empty schedule is rejected."""
        with pytest.raises(ConfigError):
            cmd_sweep("fix_ng", 3, [])


class TestMetricIdentities:
    """Property tests over random and exhaustive (m, n_r, n_g) triples."""

    def test_random_triples(self) -> None:
        """hit ratio = max(P, R) and f1 <= hit ratio <= hit rate on 10,000 triples."""
        rng = random.Random(20240601)
        for _ in range(10_000):
            n_r = rng.randint(1, 20)
            n_g = rng.randint(1, 20)
            m = rng.randint(0, min(n_r, n_g))
            scores = scores_from_counts(m, n_r, n_g)

            assert scores.hit_ratio == max(scores.precision, scores.recall)
            assert scores.f1 <= scores.hit_ratio <= scores.hit_rate
            for value in (scores.hit_rate, scores.precision, scores.recall, scores.f1, scores.hit_ratio):
                assert 0.0 <= value <= 1.0

    def test_exhaustive_closed_forms(self) -> None:
        """Every feasible triple with n_r, n_g <= 6 gives the closed-form values, 0 on a zero denominator."""
        for n_r, n_g in itertools.product(range(7), repeat=2):
            for m in range(min(n_r, n_g) + 1):
                scores = evaluate(_pair_from_counts(m, n_r, n_g))

                assert scores.hit_rate == int(m >= 1)
                assert scores.precision == (m / n_r if n_r else 0.0)
                assert scores.recall == (m / n_g if n_g else 0.0)
                assert scores.f1 == (2 * m / (n_r + n_g) if m else 0.0)
                assert scores.hit_ratio == (m / min(n_r, n_g) if min(n_r, n_g) else 0.0)
                assert (scores.m, scores.n_r, scores.n_g) == (m, n_r, n_g)

    def test_precision_non_increasing_in_recommendations(self) -> None:
        """With m and n_G fixed, precision never grows as n_R grows."""
        for n_g, m in itertools.product(range(1, 7), range(0, 7)):
            feasible = [n_r for n_r in range(1, 7) if m <= min(n_r, n_g)]
            values = [scores_from_counts(m, n_r, n_g).precision for n_r in feasible]
            assert values == sorted(values, reverse=True)

    def test_hit_ratio_constant_once_recommendations_cover_ground_truth(self) -> None:
        """With m and n_G fixed, hit ratio stays constant for n_R >= n_G."""
        for n_g, m in itertools.product(range(1, 7), range(0, 7)):
            if m > n_g:
                continue
            values = {scores_from_counts(m, n_r, n_g).hit_ratio for n_r in range(n_g, 7)}
            assert len(values) <= 1

    def test_recall_non_increasing_in_ground_truth(self) -> None:
        """With m and n_R fixed, recall never grows and hit ratio is constant once n_G >= n_R."""
        for n_r, m in itertools.product(range(1, 7), range(0, 7)):
            feasible = [n_g for n_g in range(1, 7) if m <= min(n_r, n_g)]
            values = [scores_from_counts(m, n_r, n_g).recall for n_g in feasible]
            assert values == sorted(values, reverse=True)
            if m <= n_r:
                assert len({scores_from_counts(m, n_r, n_g).hit_ratio for n_g in range(n_r, 7)}) <= 1

    def test_scores_invariant_under_permutation_and_case(self) -> None:
        """Reordering or recasing labels leaves every metric unchanged."""
        rng = random.Random(5)
        for _ in range(200):
            pair = _pair_from_counts(rng.randint(0, 3), rng.randint(3, 6), rng.randint(3, 6))
            shuffled_r = [label.upper() for label in rng.sample(pair.recommended, len(pair.recommended))]
            shuffled_g = rng.sample(pair.ground_truth, len(pair.ground_truth))
            assert evaluate(_pair(shuffled_r, shuffled_g)) == evaluate(pair)

    def test_infeasible_counts_rejected(self) -> None:
        """m above min(n_r, n_g) raises ValueError."""
        with pytest.raises(ValueError):
            scores_from_counts(3, 2, 5)


class TestOutcome:
    """Tests for classify_outcome."""

    def test_outcomes(self) -> None:
        """m = 0, 0 < m < min and m = min give the three outcomes."""
        assert classify_outcome(0, 3, 3) == "fully_incorrect"
        assert classify_outcome(1, 3, 2) == "partially_correct"
        assert classify_outcome(2, 3, 2) == "fully_correct"

    def test_empty_recommendation_is_fully_incorrect(self) -> None:
        """No recommendations is fully incorrect, never fully correct."""
        assert classify_outcome(0, 0, 2) == "fully_incorrect"


class TestSummarize:
    """Tests for summarize."""

    def test_means(self) -> None:
        """Each metric is averaged over records."""
        summary = summarize([scores_from_counts(1, 1, 1), scores_from_counts(0, 1, 1)])

        assert summary.hit_rate == 0.5
        assert summary.precision == 0.5
        assert summary.hit_ratio == 0.5
        assert summary.record_count == 2
        assert summary.fully_correct_count == 1
        assert summary.fully_incorrect_count == 1

    def test_single_record_is_identity(self) -> None:
        """The summary of one record equals that record."""
        scores = scores_from_counts(2, 3, 4)
        summary = summarize([scores])
        assert (summary.precision, summary.recall, summary.f1) == (scores.precision, scores.recall, scores.f1)

    def test_empty_recommendations_counted(self) -> None:
        """Records without recommendations average in as zeros and are counted."""
        summary = summarize([scores_from_counts(0, 0, 2), scores_from_counts(1, 1, 1)])

        assert summary.no_recommendation_count == 1
        assert summary.hit_ratio == 0.5
        assert summary.mean_n_r == 0.5
        assert summary.mean_n_g == 1.5

    def test_all_perfect(self) -> None:
        """Fully correct records average to 1.0."""
        summary = summarize([scores_from_counts(1, 1, 1)] * 3)
        assert summary.f1 == 1.0
        assert summary.hit_ratio == 1.0

    def test_empty_input(self) -> None:
        """Summarizing nothing raises EmptyResultError."""
        with pytest.raises(EmptyResultError):
            summarize([])

    def test_input_not_modified(self) -> None:
        """The caller's list is left as it was."""
        scores = [scores_from_counts(1, 2, 2)]
        summarize(scores)
        assert len(scores) == 1


class TestDisplayRound:
    """Tests for display_round."""

    def test_half_up(self) -> None:
        """Halves round away from zero."""
        assert str(display_round(0.125)) == "0.13"
        assert str(display_round(0.5, places=0)) == "1"
        assert str(display_round(2.5, places=0)) == "3"

    def test_thirds(self) -> None:
        """1/3 and 2/3 show as 0.33 and 0.67."""
        assert str(display_round(1 / 3)) == "0.33"
        assert str(display_round(2 / 3)) == "0.67"
