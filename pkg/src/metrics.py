"""Example-based evaluation metrics for top-k hashtag recommendation.

Every metric compares one recommendation list R against one ground-truth
set G. With m = |G ∩ R|, n_r = |R| and n_g = |G|:

- hit rate: 1 if m >= 1 else 0
- precision: m / n_r
- recall: m / n_g
- F1: harmonic mean of precision and recall
- hit ratio: m / min(n_r, n_g)

Precision divides by the number of recommendations actually emitted, not
by the nominal k, so a recommender that emits fewer than k hashtags is
scored on what it emitted. Any zero denominator yields 0.

All functions are pure.
"""

import math
from collections.abc import Sequence
from decimal import ROUND_HALF_UP, Decimal

from src.errors import EmptyResultError
from src.schema import EvalPair, MetricScores, MetricSummary, Outcome, canonical_label


def match_count(pair: EvalPair) -> int:
    """Count labels present in both the recommendation and the ground truth.

    Labels are compared in canonical form, so '#iPhone' matches 'iphone'.

    Example:
        >>> match_count(EvalPair(record_id="1", recommended=["#a", "#B"], ground_truth=["#b"]))
        1
    """
    recommended = {canonical_label(label) for label in pair.recommended}
    ground_truth = {canonical_label(label) for label in pair.ground_truth}
    return len(recommended & ground_truth)


def _ratio(numerator: int, denominator: int) -> float:
    if denominator == 0:
        return 0.0
    return numerator / denominator


def precision(pair: EvalPair) -> float:
    """Return m / n_r, or 0 when nothing was recommended."""
    return _ratio(match_count(pair), pair.n_r)


def recall(pair: EvalPair) -> float:
    """Return m / n_g, or 0 when the ground truth is empty."""
    return _ratio(match_count(pair), pair.n_g)


def _f1_from_counts(m: int, n_r: int, n_g: int) -> float:
    # 2PR/(P+R) reduces to 2m/(n_r+n_g); one division keeps f1 <= hit ratio
    # after rounding.
    if m == 0:
        return 0.0
    return 2 * m / (n_r + n_g)


def f1(pair: EvalPair) -> float:
    """Return the F1 score of a pair (0 when precision + recall is 0)."""
    return _f1_from_counts(match_count(pair), pair.n_r, pair.n_g)


def hit_rate(pair: EvalPair) -> int:
    """Return 1 if at least one recommended label is in the ground truth."""
    return 1 if match_count(pair) >= 1 else 0


def hit_ratio(pair: EvalPair) -> float:
    """Return m / min(n_r, n_g), or 0 when either side is empty.

    1.0 means every achievable match was made.
    """
    return _ratio(match_count(pair), min(pair.n_r, pair.n_g))


def classify_outcome(m: int, n_r: int, n_g: int) -> Outcome:
    """Classify a recommendation as fully correct, partially correct or fully incorrect."""
    if m == 0:
        return "fully_incorrect"
    if m == min(n_r, n_g):
        return "fully_correct"
    return "partially_correct"


def scores_from_counts(m: int, n_r: int, n_g: int) -> MetricScores:
    """Compute all five metrics from the match count and the two list sizes.

    Raises:
        ValueError: If the counts are negative or m exceeds min(n_r, n_g).
    """
    if m < 0 or n_r < 0 or n_g < 0:
        raise ValueError("Counts must be non-negative")
    if m > min(n_r, n_g):
        raise ValueError(f"m={m} is infeasible for n_r={n_r}, n_g={n_g}")

    return MetricScores(
        hit_rate=1.0 if m >= 1 else 0.0,
        precision=_ratio(m, n_r),
        recall=_ratio(m, n_g),
        f1=_f1_from_counts(m, n_r, n_g),
        hit_ratio=_ratio(m, min(n_r, n_g)),
        m=m,
        n_r=n_r,
        n_g=n_g,
        outcome=classify_outcome(m, n_r, n_g),
    )


def evaluate(pair: EvalPair) -> MetricScores:
    """Score one evaluation pair on all five metrics.

    Args:
        pair: The recommendation list and ground truth to compare.

    Returns:
        MetricScores computed from a single match count.
    """
    return scores_from_counts(match_count(pair), pair.n_r, pair.n_g)


def _mean(values: Sequence[float]) -> float:
    return math.fsum(values) / len(values)


def summarize(scores: Sequence[MetricScores]) -> MetricSummary:
    """Average per-record scores over all records.

    Records without recommendations stay in the average as zeros; their
    number is reported in no_recommendation_count.

    Args:
        scores: Per-record scores. Not modified.

    Returns:
        The per-metric arithmetic means and record counts.

    Raises:
        EmptyResultError: If scores is empty.
    """
    snapshot = list(scores)
    if not snapshot:
        raise EmptyResultError("Cannot summarize an empty list of scores")

    outcomes = [s.outcome for s in snapshot]
    return MetricSummary(
        hit_rate=_mean([s.hit_rate for s in snapshot]),
        precision=_mean([s.precision for s in snapshot]),
        recall=_mean([s.recall for s in snapshot]),
        f1=_mean([s.f1 for s in snapshot]),
        hit_ratio=_mean([s.hit_ratio for s in snapshot]),
        record_count=len(snapshot),
        no_recommendation_count=sum(1 for s in snapshot if s.n_r == 0),
        fully_correct_count=outcomes.count("fully_correct"),
        partially_correct_count=outcomes.count("partially_correct"),
        fully_incorrect_count=outcomes.count("fully_incorrect"),
        mean_n_r=_mean([s.n_r for s in snapshot]),
        mean_n_g=_mean([s.n_g for s in snapshot]),
    )


def display_round(value: float, places: int = 2) -> Decimal:
    """Round a metric value half-up for presentation.

    Example:
        >>> str(display_round(1 / 3))
        '0.33'
    """
    quantum = Decimal(1).scaleb(-places)
    return Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP)
