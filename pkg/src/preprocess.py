"""Tweet normalization, hashtag extraction and eligibility filtering.

Cleaning rules applied by normalize():
1. Lowercase everything.
2. Drop the leading retweet marker, URLs (http://, https://, www.) and
   @-mentions.
3. Split each whitespace-separated chunk into word-character runs; '#' is
   kept only as a hashtag prefix, every other punctuation mark separates
   tokens ("txt/call" -> "txt", "call").
4. Remove stopwords (hashtags are never stopwords).
5. Collapse consecutive duplicate tokens ("now now now" -> "now").
"""

import logging
import re
from collections.abc import Iterable, Sequence

from pydantic import BaseModel, ConfigDict

from src.errors import EmptyResultError
from src.metrics import display_round
from src.schema import CleanTweet, HashtagStats, RawTweet, canonical_label

logger = logging.getLogger(__name__)

MIN_WORDS: int = 3

_URL_PATTERN = re.compile(r"^\W*(?:https?://|www\.)", re.IGNORECASE)
_MENTION_PATTERN = re.compile(r"^\W*@\w")
_RETWEET_PATTERN = re.compile(r"^\s*rt\s+@\w", re.IGNORECASE)
_TOKEN_PATTERN = re.compile(r"#*\w*[^\W_]\w*")


class PreprocessCounts(BaseModel):
    """How many raw tweets each cleaning rule removed."""

    model_config = ConfigDict(extra="forbid")

    raw: int = 0
    retweets: int = 0
    no_hashtag: int = 0
    too_few_words: int = 0
    kept: int = 0


def is_retweet(raw: RawTweet) -> bool:
    """Return True if the text starts with the token 'rt' followed by a mention.

    Example:
        >>> is_retweet(RawTweet(id="1", user="u", timestamp=0, text="RT @alice hello"))
        True
    """
    return _RETWEET_PATTERN.match(raw.text) is not None


def _tokenize_chunk(chunk: str, stopwords: frozenset[str]) -> list[str]:
    if _URL_PATTERN.match(chunk) or _MENTION_PATTERN.match(chunk):
        return []

    tokens: list[str] = []
    for match in _TOKEN_PATTERN.finditer(chunk):
        token = match.group()
        if token.startswith("#"):
            tokens.append("#" + token.lstrip("#"))
        elif token not in stopwords:
            tokens.append(token)
    return tokens


def _collapse_repeats(tokens: list[str]) -> list[str]:
    collapsed: list[str] = []
    for token in tokens:
        if not collapsed or collapsed[-1] != token:
            collapsed.append(token)
    return collapsed


def normalize(raw: RawTweet, stopwords: frozenset[str]) -> CleanTweet:
    """Clean a raw tweet into lowercase tokens and extract its hashtags.

    Args:
        raw: The tweet to clean.
        stopwords: Lowercase words to remove.

    Returns:
        A CleanTweet carrying the raw tweet's id, user and timestamp. Text
        with nothing usable yields empty tokens and hashtags.
    """
    chunks = raw.text.lower().split()
    if is_retweet(raw):
        chunks = chunks[1:]

    tokens: list[str] = []
    for chunk in chunks:
        tokens.extend(_tokenize_chunk(chunk, stopwords))
    tokens = _collapse_repeats(tokens)

    return CleanTweet(
        id=raw.id,
        user=raw.user,
        timestamp=raw.timestamp,
        tokens=tuple(tokens),
        hashtags=tuple(canonical_label(t) for t in tokens if t.startswith("#")),
    )


def is_eligible(
    tweet: CleanTweet,
    count_hashtags_as_words: bool = False,
    min_words: int = MIN_WORDS,
) -> bool:
    """Return True if a cleaned tweet can enter a corpus.

    A tweet needs at least one hashtag and at least min_words words. By
    default hashtag tokens do not count as words.
    """
    if not tweet.hashtags:
        return False
    word_count = len(tweet.tokens) if count_hashtags_as_words else len(tweet.words)
    return word_count >= min_words


def prepare_corpus(
    raw_tweets: Iterable[RawTweet],
    stopwords: frozenset[str],
    count_hashtags_as_words: bool = False,
) -> tuple[list[CleanTweet], PreprocessCounts]:
    """Drop retweets, normalize, and keep only eligible tweets.

    Input order is preserved.

    Returns:
        The eligible cleaned tweets and the per-rule drop counts.
    """
    counts = PreprocessCounts()
    kept: list[CleanTweet] = []

    for raw in raw_tweets:
        counts.raw += 1
        if is_retweet(raw):
            counts.retweets += 1
            continue
        tweet = normalize(raw, stopwords)
        if not tweet.hashtags:
            counts.no_hashtag += 1
            continue
        if not is_eligible(tweet, count_hashtags_as_words=count_hashtags_as_words):
            counts.too_few_words += 1
            continue
        kept.append(tweet)

    counts.kept = len(kept)
    logger.debug(
        "Preprocessed %d tweets: %d retweets, %d without hashtags, %d too short, %d kept",
        counts.raw,
        counts.retweets,
        counts.no_hashtag,
        counts.too_few_words,
        counts.kept,
    )
    return kept, counts


def corpus_stats(tweets: Sequence[CleanTweet]) -> HashtagStats:
    """Compute hashtag-per-tweet statistics.

    Raises:
        EmptyResultError: If tweets is empty.
    """
    if not tweets:
        raise EmptyResultError("Cannot compute statistics of an empty corpus")

    counts = [len(tweet.hashtags) for tweet in tweets]
    mean = sum(counts) / len(counts)
    return HashtagStats(
        tweet_count=len(counts),
        max_hashtags=max(counts),
        min_hashtags=min(counts),
        mean_hashtags=mean,
        avg_hashtags=int(display_round(mean, places=0)),
    )
