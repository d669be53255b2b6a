"""Unit tests for the schema module.

Tests Pydantic models:
- Label canonicalization
- Tweet models and their invariants
- Evaluation pairs and metric records
- Extra fields forbidden everywhere
"""

import pytest
from pydantic import ValidationError

from src.schema import (
    Candidate,
    CleanTweet,
    EvalPair,
    HashtagStats,
    MetricScores,
    MetricSummary,
    RawTweet,
    canonical_label,
)


class TestCanonicalLabel:
    """Tests for canonical_label."""

    def test_strips_hash_and_lowercases(self) -> None:
        """'#iPhone' should become 'iphone'."""
        assert canonical_label("#iPhone") == "iphone"

    def test_plain_label(self) -> None:
        """A label without '#' should only be lowercased."""
        assert canonical_label("Apple") == "apple"

    def test_single_hash_stripped(self) -> None:
        """Only one leading '#' should be removed."""
        assert canonical_label("##tag") == "#tag"

    def test_whitespace_trimmed(self) -> None:
        """Surrounding whitespace should be removed."""
        assert canonical_label("  #Blue ") == "blue"


class TestRawTweet:
    """Tests for RawTweet model."""

    def test_valid(self) -> None:
        """A complete tweet should validate."""
        tweet = RawTweet(id="1", user="u", timestamp=5, text="hello")
        assert tweet.timestamp == 5

    def test_negative_timestamp(self) -> None:
        """Timestamps should be non-negative."""
        with pytest.raises(ValidationError):
            RawTweet(id="1", user="u", timestamp=-5, text="hello")

    def test_extra_fields_forbidden(self) -> None:
        """Extra fields should raise validation error."""
        with pytest.raises(ValidationError):
            RawTweet(id="1", user="u", timestamp=0, text="x", lang="en")  # type: ignore[call-arg]

    def test_frozen(self) -> None:
        """Raw tweets should be immutable."""
        tweet = RawTweet(id="1", user="u", timestamp=0, text="x")
        with pytest.raises(ValidationError):
            tweet.text = "changed"  # type: ignore[misc]


class TestCleanTweet:
    """Tests for CleanTweet model."""

    def test_hashtags_canonical_and_sorted(self) -> None:
        """Hashtags should be canonicalized, deduplicated and sorted."""
        tweet = CleanTweet(
            id="1",
            user="u",
            timestamp=0,
            tokens=("hello", "#zoo", "#apple"),
            hashtags=("#zoo", "#Apple", "apple"),
        )
        assert tweet.hashtags == ("apple", "zoo")

    def test_words_exclude_hashtags(self) -> None:
        """words should list the non-hashtag tokens in order."""
        tweet = CleanTweet(id="1", user="u", timestamp=0, tokens=("a1", "#x", "b2"), hashtags=("x",))
        assert tweet.words == ["a1", "b2"]

    def test_hashtag_must_come_from_tokens(self) -> None:
        """A hashtag that is not a token should be rejected."""
        with pytest.raises(ValidationError):
            CleanTweet(id="1", user="u", timestamp=0, tokens=("hello",), hashtags=("x",))

    def test_token_with_whitespace(self) -> None:
        """Tokens containing whitespace should be rejected."""
        with pytest.raises(ValidationError):
            CleanTweet(id="1", user="u", timestamp=0, tokens=("two words",), hashtags=())

    def test_empty_token(self) -> None:
        """Empty tokens should be rejected."""
        with pytest.raises(ValidationError):
            CleanTweet(id="1", user="u", timestamp=0, tokens=("",), hashtags=())


class TestEvalPair:
    """Tests for EvalPair model."""

    def test_sizes(self) -> None:
        """n_r and n_g should count the two lists."""
        pair = EvalPair(record_id="1", recommended=["#a", "#b"], ground_truth=["#a"])
        assert (pair.n_r, pair.n_g) == (2, 1)

    def test_defaults_empty(self) -> None:
        """Both lists should default to empty."""
        pair = EvalPair(record_id="1")
        assert (pair.n_r, pair.n_g) == (0, 0)

    def test_duplicate_recommendation(self) -> None:
        """Labels equal after canonicalization should be rejected."""
        with pytest.raises(ValidationError):
            EvalPair(record_id="1", recommended=["#Apple", "apple"], ground_truth=["#a"])

    def test_duplicate_ground_truth(self) -> None:
        """Duplicate ground-truth labels should be rejected."""
        with pytest.raises(ValidationError):
            EvalPair(record_id="1", recommended=[], ground_truth=["#a", "#A"])

    def test_empty_label(self) -> None:
        """A label that is only '#' should be rejected."""
        with pytest.raises(ValidationError):
            EvalPair(record_id="1", recommended=["#"], ground_truth=["#a"])

    def test_original_casing_kept(self) -> None:
        """Labels should be stored as given, for display."""
        pair = EvalPair(record_id="1", recommended=["#iPhone"], ground_truth=["#iPhone"])
        assert pair.recommended == ["#iPhone"]


class TestMetricModels:
    """Tests for MetricScores, MetricSummary, HashtagStats and Candidate."""

    def test_match_count_bounded(self) -> None:
        """m above min(n_r, n_g) should be rejected."""
        with pytest.raises(ValidationError):
            MetricScores(
                hit_rate=1.0, precision=1.0, recall=1.0, f1=1.0, hit_ratio=1.0,
                m=3, n_r=2, n_g=5, outcome="fully_correct",
            )

    def test_values_bounded(self) -> None:
        """Metric values above 1 should be rejected."""
        with pytest.raises(ValidationError):
            MetricScores(
                hit_rate=1.0, precision=1.5, recall=1.0, f1=1.0, hit_ratio=1.0,
                m=1, n_r=1, n_g=1, outcome="fully_correct",
            )

    def test_summary_outcomes_add_up(self) -> None:
        """Outcome counts should add up to the record count."""
        with pytest.raises(ValidationError):
            MetricSummary(
                hit_rate=0.0, precision=0.0, recall=0.0, f1=0.0, hit_ratio=0.0,
                record_count=2, no_recommendation_count=0,
                fully_correct_count=0, partially_correct_count=0, fully_incorrect_count=1,
                mean_n_r=1.0, mean_n_g=1.0,
            )

    def test_summary_needs_records(self) -> None:
        """A summary of zero records should be rejected."""
        with pytest.raises(ValidationError):
            MetricSummary(
                hit_rate=0.0, precision=0.0, recall=0.0, f1=0.0, hit_ratio=0.0,
                record_count=0, no_recommendation_count=0,
                fully_correct_count=0, partially_correct_count=0, fully_incorrect_count=0,
                mean_n_r=0.0, mean_n_g=0.0,
            )

    def test_stats_need_tweets(self) -> None:
        """Statistics of zero tweets should be rejected."""
        with pytest.raises(ValidationError):
            HashtagStats(tweet_count=0, max_hashtags=0, min_hashtags=0, mean_hashtags=0.0, avg_hashtags=0)

    def test_candidate_needs_support(self) -> None:
        """A candidate should be backed by at least one tweet."""
        with pytest.raises(ValidationError):
            Candidate(hashtag="a", score=1.0, supporting_count=0)
