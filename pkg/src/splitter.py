"""Corpus shaping for evaluation runs: user filter and chronological split.

The most recent share of a corpus becomes the test set and everything
older is the repository searched for similar tweets.
"""

import logging
import math
from collections import defaultdict
from collections.abc import Sequence
from decimal import Decimal

from src.errors import ConfigError, EmptyResultError
from src.schema import CleanTweet

logger = logging.getLogger(__name__)


def filter_active_users(tweets: Sequence[CleanTweet], min_hashtags: int) -> list[CleanTweet]:
    """Keep tweets of users who used at least min_hashtags distinct hashtags.

    Hashtags are counted over the given tweets. min_hashtags of 0 keeps
    everything. Input order is preserved.
    """
    if min_hashtags <= 0:
        return list(tweets)

    used: dict[str, set[str]] = defaultdict(set)
    for tweet in tweets:
        used[tweet.user].update(tweet.hashtags)

    active = {user for user, hashtags in used.items() if len(hashtags) >= min_hashtags}
    kept = [tweet for tweet in tweets if tweet.user in active]
    logger.debug(
        "User filter kept %d of %d users (%d of %d tweets)",
        len(active),
        len(used),
        len(kept),
        len(tweets),
    )
    return kept


def count_test_tweets(total: int, fraction: float) -> int:
    """Number of test tweets for a corpus of total tweets: ceil(fraction * total)."""
    return math.ceil(Decimal(repr(fraction)) * total)


def chronological_split(
    tweets: Sequence[CleanTweet],
    fraction: float,
) -> tuple[list[CleanTweet], list[CleanTweet]]:
    """Split a corpus into an older repository part and a recent test part.

    Tweets are ordered by timestamp, ties broken by id. The last
    ceil(fraction * N) tweets form the test set.

    Args:
        tweets: Cleaned tweets in any order.
        fraction: Share of tweets to test on, strictly between 0 and 1.

    Returns:
        (repository, test), each in chronological order.

    Raises:
        ConfigError: If fraction is outside (0, 1).
        EmptyResultError: If either part would be empty.
    """
    if not 0.0 < fraction < 1.0:
        raise ConfigError(f"Split fraction must be between 0 and 1, got {fraction}")

    ordered = sorted(tweets, key=lambda tweet: (tweet.timestamp, tweet.id))
    n_test = count_test_tweets(len(ordered), fraction)
    if n_test == 0:
        raise EmptyResultError("Test split is empty")
    if n_test >= len(ordered):
        raise EmptyResultError(
            f"Repository split is empty ({len(ordered)} tweets, {n_test} needed for testing)"
        )

    cut = len(ordered) - n_test
    return ordered[:cut], ordered[cut:]
