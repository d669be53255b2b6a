"""Domain schema definitions using Pydantic v2.

This module defines the records exchanged between the toolkit's modules
and written to disk: raw and cleaned tweets, evaluation pairs, metric
scores and summaries, ranking candidates, and the run reports emitted by
the command line.

Hashtag labels are compared in canonical form (lowercase, no leading '#').
Models that describe a fixed fact are frozen; none accept extra fields.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.config import RecommenderConfig

Outcome = Literal["fully_correct", "partially_correct", "fully_incorrect"]


def canonical_label(label: str) -> str:
    """Return the canonical form of a hashtag label.

    Lowercases, trims surrounding whitespace and strips a single leading '#'.

    Example:
        >>> canonical_label("#iPhone")
        'iphone'
    """
    text = label.strip().lower()
    if text.startswith("#"):
        text = text[1:]
    return text


def _distinct_canonical(labels: list[str], field_name: str) -> list[str]:
    seen: set[str] = set()
    duplicates: list[str] = []
    for label in labels:
        key = canonical_label(label)
        if not key:
            raise ValueError(f"{field_name} contains an empty label")
        if key in seen:
            duplicates.append(label)
        seen.add(key)
    if duplicates:
        raise ValueError(f"Duplicate labels in {field_name}: {duplicates}")
    return labels


class RawTweet(BaseModel):
    """One line of an input corpus.

    Attributes:
        id: Opaque identifier, unique within a corpus.
        user: Opaque author identifier.
        timestamp: Epoch seconds.
        text: Unprocessed tweet text.
    """

    model_config = ConfigDict(extra="forbid", frozen=True, coerce_numbers_to_str=True)

    id: str
    user: str
    timestamp: int = Field(ge=0)
    text: str


class CleanTweet(BaseModel):
    """A normalized tweet.

    Attributes:
        id: Carried over from the raw tweet.
        user: Carried over from the raw tweet.
        timestamp: Carried over from the raw tweet.
        tokens: Lowercase tokens in text order; hashtag tokens keep their '#'.
        hashtags: Canonical hashtag labels found in tokens, sorted.
    """

    model_config = ConfigDict(extra="forbid", frozen=True, coerce_numbers_to_str=True)

    id: str
    user: str
    timestamp: int = Field(ge=0)
    tokens: tuple[str, ...]
    hashtags: tuple[str, ...]

    @field_validator("tokens")
    @classmethod
    def _tokens_are_words(cls, tokens: tuple[str, ...]) -> tuple[str, ...]:
        for token in tokens:
            if not token or any(ch.isspace() for ch in token):
                raise ValueError(f"Invalid token: {token!r}")
        return tokens

    @field_validator("hashtags")
    @classmethod
    def _sorted_unique(cls, hashtags: tuple[str, ...]) -> tuple[str, ...]:
        return tuple(sorted({canonical_label(tag) for tag in hashtags}))

    @model_validator(mode="after")
    def _hashtags_come_from_tokens(self) -> "CleanTweet":
        tagged = {canonical_label(t) for t in self.tokens if t.startswith("#")}
        missing = set(self.hashtags) - tagged
        if missing:
            raise ValueError(f"Hashtags not present in tokens: {sorted(missing)}")
        return self

    @property
    def words(self) -> list[str]:
        """Tokens that are not hashtags."""
        return [token for token in self.tokens if not token.startswith("#")]


class EvalPair(BaseModel):
    """One test case: an ordered recommendation list and its ground truth.

    Also the line format of evaluation record files.

    Attributes:
        record_id: Opaque identifier.
        recommended: Ordered recommended labels, no duplicates.
        ground_truth: Ground-truth labels, no duplicates.
    """

    model_config = ConfigDict(extra="forbid", frozen=True, coerce_numbers_to_str=True)

    record_id: str
    recommended: list[str] = Field(default_factory=list)
    ground_truth: list[str] = Field(default_factory=list)

    @field_validator("recommended")
    @classmethod
    def _recommended_distinct(cls, labels: list[str]) -> list[str]:
        return _distinct_canonical(labels, "recommended")

    @field_validator("ground_truth")
    @classmethod
    def _ground_truth_distinct(cls, labels: list[str]) -> list[str]:
        return _distinct_canonical(labels, "ground_truth")

    @property
    def n_r(self) -> int:
        return len(self.recommended)

    @property
    def n_g(self) -> int:
        return len(self.ground_truth)


class MetricScores(BaseModel):
    """The five metrics of one evaluation pair, with the counts behind them.

    Attributes:
        hit_rate: 1.0 when at least one label matched, else 0.0.
        precision: m / n_r.
        recall: m / n_g.
        f1: Harmonic mean of precision and recall.
        hit_ratio: m / min(n_r, n_g).
        m: Number of matching labels.
        n_r: Number of recommended labels.
        n_g: Number of ground-truth labels.
        outcome: fully_correct, partially_correct or fully_incorrect.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    hit_rate: float = Field(ge=0.0, le=1.0)
    precision: float = Field(ge=0.0, le=1.0)
    recall: float = Field(ge=0.0, le=1.0)
    f1: float = Field(ge=0.0, le=1.0)
    hit_ratio: float = Field(ge=0.0, le=1.0)
    m: int = Field(ge=0)
    n_r: int = Field(ge=0)
    n_g: int = Field(ge=0)
    outcome: Outcome

    @model_validator(mode="after")
    def _match_count_bounded(self) -> "MetricScores":
        if self.m > min(self.n_r, self.n_g):
            raise ValueError("m cannot exceed min(n_r, n_g)")
        return self


class MetricSummary(BaseModel):
    """Per-metric arithmetic means over a set of evaluated records.

    Records without recommendations are included (scored as zeros) and
    counted separately in no_recommendation_count.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    hit_rate: float = Field(ge=0.0, le=1.0)
    precision: float = Field(ge=0.0, le=1.0)
    recall: float = Field(ge=0.0, le=1.0)
    f1: float = Field(ge=0.0, le=1.0)
    hit_ratio: float = Field(ge=0.0, le=1.0)
    record_count: int = Field(gt=0)
    no_recommendation_count: int = Field(ge=0)
    fully_correct_count: int = Field(ge=0)
    partially_correct_count: int = Field(ge=0)
    fully_incorrect_count: int = Field(ge=0)
    mean_n_r: float = Field(ge=0.0)
    mean_n_g: float = Field(ge=0.0)

    @model_validator(mode="after")
    def _counts_consistent(self) -> "MetricSummary":
        if self.no_recommendation_count > self.record_count:
            raise ValueError("no_recommendation_count cannot exceed record_count")
        outcomes = (
            self.fully_correct_count
            + self.partially_correct_count
            + self.fully_incorrect_count
        )
        if outcomes != self.record_count:
            raise ValueError("Outcome counts must add up to record_count")
        return self


class RecordScore(BaseModel):
    """An evaluated record as it appears in a run report."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    record_id: str
    recommended: list[str]
    ground_truth: list[str]
    scores: MetricScores


class HashtagStats(BaseModel):
    """Hashtag-per-tweet statistics of a cleaned corpus.

    Attributes:
        tweet_count: Number of tweets.
        max_hashtags: Largest number of hashtags on one tweet.
        min_hashtags: Smallest number of hashtags on one tweet.
        mean_hashtags: Exact mean number of hashtags per tweet.
        avg_hashtags: mean_hashtags rounded half-up to an integer.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    tweet_count: int = Field(gt=0)
    max_hashtags: int = Field(ge=0)
    min_hashtags: int = Field(ge=0)
    mean_hashtags: float = Field(ge=0.0)
    avg_hashtags: int = Field(ge=0)


class Candidate(BaseModel):
    """A hashtag proposed by a ranker.

    Attributes:
        hashtag: Canonical label.
        score: Ranking score, higher is better.
        supporting_count: Number of similar tweets that carry the hashtag.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    hashtag: str
    score: float = Field(ge=0.0)
    supporting_count: int = Field(ge=1)


class RunReport(BaseModel):
    """Result of an evaluation run.

    Attributes:
        command: Subcommand that produced the report.
        config: Recommender configuration, for recommendation runs.
        split_fraction: Test split fraction, for recommendation runs.
        corpus_stats: Hashtag statistics of the cleaned corpus, if any.
        repository_size: Number of repository tweets, for recommendation runs.
        records: Per-record scores in input order.
        summary: Averages over records.
        wall_clock_seconds: Run duration, only when timing was requested.
    """

    model_config = ConfigDict(extra="forbid")

    command: Literal["eval", "recommend-eval"]
    config: RecommenderConfig | None = None
    split_fraction: float | None = None
    corpus_stats: HashtagStats | None = None
    repository_size: int | None = None
    records: list[RecordScore]
    summary: MetricSummary
    wall_clock_seconds: float | None = None


class SweepRow(BaseModel):
    """One row of a hypothetical metric sweep."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    n_r: int
    n_g: int
    scores: MetricScores


class SweepTable(BaseModel):
    """Rows produced by holding n_r or n_g fixed and varying the other."""

    model_config = ConfigDict(extra="forbid")

    mode: Literal["fix_nr", "fix_ng"]
    fixed_value: int = Field(ge=1)
    rows: list[SweepRow]


class ComparisonEntry(BaseModel):
    """Summary of one (model, k) cell of a model comparison."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    model: str
    k: int = Field(ge=1)
    config: RecommenderConfig
    summary: MetricSummary


class ComparisonReport(BaseModel):
    """Several recommender configurations evaluated on the same split."""

    model_config = ConfigDict(extra="forbid")

    split_fraction: float
    corpus_stats: HashtagStats
    repository_size: int
    test_size: int
    entries: list[ComparisonEntry]
