"""Evaluation harness operations behind the command line.

Each cmd_* function runs one subcommand to completion and returns the
model it produced; main.py handles argument parsing and output.

The recommendation run follows the evaluation protocol:
1. Load the corpus
2. Drop retweets, normalize, keep eligible tweets of active users
3. Split chronologically into repository and test tweets
4. Fit the vectorizer and build the repository
5. Recommend for every test tweet and score against its own hashtags
"""

import logging
import time
from collections.abc import Sequence
from pathlib import Path

from pydantic import BaseModel, ConfigDict

from src.config import HarnessConfig, RecommenderConfig, apply_preset
from src.errors import ConfigError, EmptyResultError
from src.input_loader import load_corpus, load_embeddings_file, load_eval_records
from src.metrics import evaluate, scores_from_counts, summarize
from src.preprocess import corpus_stats, prepare_corpus
from src.recommender import build_repository, rank_candidates
from src.recommender.repository import Repository
from src.schema import (
    CleanTweet,
    ComparisonEntry,
    ComparisonReport,
    EvalPair,
    HashtagStats,
    RecordScore,
    RunReport,
    SweepRow,
    SweepTable,
)
from src.splitter import chronological_split, filter_active_users
from src.stopwords import load_stopwords
from src.vectorize import EmbeddingTable, TfIdfModel, fit_tfidf

logger = logging.getLogger(__name__)

DEFAULT_K_VALUES: tuple[int, ...] = (1, 5, 10)


class PreparedSplit(BaseModel):
    """A cleaned corpus split into repository and test tweets."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    stats: HashtagStats
    repository: list[CleanTweet]
    test: list[CleanTweet]


def _score_records(pairs: Sequence[EvalPair]) -> list[RecordScore]:
    return [
        RecordScore(
            record_id=pair.record_id,
            recommended=list(pair.recommended),
            ground_truth=list(pair.ground_truth),
            scores=evaluate(pair),
        )
        for pair in pairs
    ]


def cmd_eval(input_path: Path, timing: bool = False) -> RunReport:
    """Score every record of an evaluation record file.

    Args:
        input_path: Line-delimited {record_id, recommended, ground_truth} file.
        timing: Record wall-clock duration in the report.

    Returns:
        Per-record scores and their summary.

    Raises:
        ParseError: If a record is malformed or a record_id repeats.
        EmptyResultError: If the file holds no records.
    """
    started = time.perf_counter()
    pairs = load_eval_records(input_path)
    if not pairs:
        raise EmptyResultError(f"No evaluation records in {input_path}")
    logger.info("Evaluating %d records", len(pairs))

    records = _score_records(pairs)
    return RunReport(
        command="eval",
        records=records,
        summary=summarize([record.scores for record in records]),
        wall_clock_seconds=time.perf_counter() - started if timing else None,
    )


def cmd_sweep(mode: str, fixed_value: int, match_schedule: Sequence[int]) -> SweepTable:
    """Tabulate the metrics while one list size is fixed and the other grows.

    Row i (1-based) has the varying size equal to i and m = match_schedule[i-1].

    Args:
        mode: "fix_nr" (n_r fixed, n_g varies) or "fix_ng" (n_g fixed, n_r varies).
        fixed_value: Size held fixed, at least 1.
        match_schedule: Match count for each row.

    Returns:
        The sweep table.

    Raises:
        ConfigError: If the mode or fixed value is invalid, the schedule is
            empty, or a row's m is infeasible (the error names the row).
    """
    if mode not in ("fix_nr", "fix_ng"):
        raise ConfigError(f"Unknown sweep mode: {mode}")
    if fixed_value < 1:
        raise ConfigError(f"Fixed value must be at least 1, got {fixed_value}")
    if not match_schedule:
        raise ConfigError("Match schedule is empty")

    rows: list[SweepRow] = []
    for varying, m in enumerate(match_schedule, start=1):
        n_r, n_g = (fixed_value, varying) if mode == "fix_nr" else (varying, fixed_value)
        if not 0 <= m <= min(n_r, n_g):
            label = "n_G" if mode == "fix_nr" else "n_R"
            raise ConfigError(
                f"Row {label}={varying}: m={m} must be between 0 and min(n_R={n_r}, n_G={n_g})"
            )
        rows.append(SweepRow(n_r=n_r, n_g=n_g, scores=scores_from_counts(m, n_r, n_g)))

    return SweepTable(mode=mode, fixed_value=fixed_value, rows=rows)  # type: ignore[arg-type]


def clean_corpus(corpus_path: Path, config: HarnessConfig) -> list[CleanTweet]:
    """Load a corpus and keep the eligible tweets of active users.

    Raises:
        ParseError: If the corpus is malformed.
        EmptyResultError: If no tweet survives the filters.
    """
    raw_tweets = load_corpus(corpus_path)
    logger.info("      Loaded %d tweets", len(raw_tweets))

    stopwords = load_stopwords(config.stopwords_path)
    tweets, counts = prepare_corpus(
        raw_tweets,
        stopwords,
        count_hashtags_as_words=config.count_hashtags_as_words,
    )
    tweets = filter_active_users(tweets, config.min_user_hashtags)
    logger.info(
        "      Dropped %d retweets, %d without hashtags, %d too short; %d tweets of active users kept",
        counts.retweets,
        counts.no_hashtag,
        counts.too_few_words,
        len(tweets),
    )

    if not tweets:
        raise EmptyResultError(f"No tweet of {corpus_path} survives preprocessing")
    return tweets


def cmd_preprocess(corpus_path: Path, config: HarnessConfig) -> list[CleanTweet]:
    """Clean a corpus; see clean_corpus."""
    return clean_corpus(corpus_path, config)


def cmd_stats(corpus_path: Path, config: HarnessConfig) -> HashtagStats:
    """Hashtag statistics of the cleaned corpus.

    Raises:
        EmptyResultError: If no tweet survives preprocessing.
    """
    return corpus_stats(clean_corpus(corpus_path, config))


def prepare_split(corpus_path: Path, config: HarnessConfig) -> PreparedSplit:
    """Clean a corpus and split it chronologically."""
    logger.info("[1/3] Loading and preprocessing corpus...")
    tweets = clean_corpus(corpus_path, config)
    stats = corpus_stats(tweets)

    logger.info("[2/3] Splitting corpus (test fraction %s)...", config.split_fraction)
    repository, test = chronological_split(tweets, config.split_fraction)
    logger.info("      Repository: %d tweets, test: %d tweets", len(repository), len(test))
    return PreparedSplit(stats=stats, repository=repository, test=test)


def fit_vectorizer(
    recommender: RecommenderConfig,
    repository: Sequence[CleanTweet],
    embeddings_path: Path | None,
) -> TfIdfModel | EmbeddingTable:
    """Fit TF-IDF on the repository, or load the embedding table.

    Raises:
        ConfigError: If the mowe backend is requested without an embeddings file.
    """
    if recommender.vectorizer == "tfidf":
        return fit_tfidf(repository, include_hashtags=recommender.include_hashtags)
    if embeddings_path is None:
        raise ConfigError("The mowe vectorizer needs an embeddings file (--embeddings)")
    return load_embeddings_file(embeddings_path)


def _evaluate_queries(
    repo: Repository,
    test: Sequence[CleanTweet],
    recommender: RecommenderConfig,
    k_values: Sequence[int],
) -> dict[int, list[RecordScore]]:
    # Ranking does not depend on k, so each query is ranked once and cut per k.
    results: dict[int, list[EvalPair]] = {k: [] for k in k_values}
    for tweet in test:
        candidates = rank_candidates(repo, tweet, recommender)
        ground_truth = [f"#{hashtag}" for hashtag in tweet.hashtags]
        for k in k_values:
            results[k].append(
                EvalPair(
                    record_id=tweet.id,
                    recommended=[f"#{candidate.hashtag}" for candidate in candidates[:k]],
                    ground_truth=ground_truth,
                )
            )
    return {k: _score_records(pairs) for k, pairs in results.items()}


def cmd_recommend_eval(
    corpus_path: Path,
    config: HarnessConfig,
    timing: bool = False,
) -> RunReport:
    """Run the recommender on the most recent tweets of a corpus and score it.

    Each test tweet is a query; its own hashtags are the ground truth.

    Args:
        corpus_path: Line-delimited tweet corpus.
        config: Harness settings, including the recommender settings.
        timing: Record wall-clock duration in the report.

    Returns:
        Per-test-tweet scores, their summary, corpus statistics and the
        configuration used.

    Raises:
        ParseError: If the corpus or embeddings file is malformed.
        ConfigError: If mowe is requested without embeddings.
        EmptyResultError: If preprocessing leaves nothing or a split is empty.
    """
    started = time.perf_counter()
    recommender = config.recommender
    split = prepare_split(corpus_path, config)

    logger.info("[3/3] Recommending with %s vectors and %s ranking...", recommender.vectorizer, recommender.ranking)
    model = fit_vectorizer(recommender, split.repository, config.embeddings_path)
    repo = build_repository(split.repository, recommender, model)
    records = _evaluate_queries(repo, split.test, recommender, [recommender.k])[recommender.k]

    summary = summarize([record.scores for record in records])
    logger.info(
        "      %d test tweets, %d without recommendations",
        summary.record_count,
        summary.no_recommendation_count,
    )
    return RunReport(
        command="recommend-eval",
        config=recommender,
        split_fraction=config.split_fraction,
        corpus_stats=split.stats,
        repository_size=len(repo),
        records=records,
        summary=summary,
        wall_clock_seconds=time.perf_counter() - started if timing else None,
    )


def cmd_compare(
    corpus_path: Path,
    config: HarnessConfig,
    models: Sequence[str] = ("A", "B", "C"),
    k_values: Sequence[int] = DEFAULT_K_VALUES,
    embeddings: dict[str, Path | None] | None = None,
) -> ComparisonReport:
    """Evaluate several model presets at several k on one split.

    Args:
        corpus_path: Line-delimited tweet corpus.
        config: Harness settings; threshold and include_hashtags apply to
            every model, vectorizer and ranking come from the presets.
        models: Preset names ("A", "B", "C").
        k_values: Top-k sizes to evaluate.
        embeddings: Embeddings file per preset; presets missing here fall
            back to config.embeddings_path. mowe presets without any file
            are skipped with a warning.

    Returns:
        One summary per (model, k).

    Raises:
        ConfigError: If a preset is unknown, k_values is empty, or every
            model had to be skipped.
    """
    if not k_values or any(k < 1 for k in k_values):
        raise ConfigError(f"k values must be positive integers, got {list(k_values)}")
    ordered_k = sorted(set(k_values))
    embeddings = embeddings or {}
    split = prepare_split(corpus_path, config)

    entries: list[ComparisonEntry] = []
    for index, preset in enumerate(models, start=1):
        try:
            recommender = apply_preset(config.recommender, preset)
        except ValueError as e:
            raise ConfigError(str(e)) from e

        embeddings_path = embeddings.get(preset) or config.embeddings_path
        if recommender.vectorizer == "mowe" and embeddings_path is None:
            logger.warning("      Skipping model %s: no embeddings file", preset)
            continue

        logger.info("[model %d/%d] %s: %s + %s", index, len(models), preset, recommender.vectorizer, recommender.ranking)
        model = fit_vectorizer(recommender, split.repository, embeddings_path)
        repo = build_repository(split.repository, recommender, model)
        for k, records in _evaluate_queries(repo, split.test, recommender, ordered_k).items():
            entries.append(
                ComparisonEntry(
                    model=preset,
                    k=k,
                    config=recommender.model_copy(update={"k": k}),
                    summary=summarize([record.scores for record in records]),
                )
            )

    if not entries:
        raise ConfigError("No model could be evaluated")

    return ComparisonReport(
        split_fraction=config.split_fraction,
        corpus_stats=split.stats,
        repository_size=len(split.repository),
        test_size=len(split.test),
        entries=entries,
    )
