"""Content-based hashtag recommendation.

For a query tweet the recommender:
1. vectorizes the tweet with the repository's backend (hashtags left out),
2. retrieves repository tweets whose cosine similarity reaches the threshold,
3. scores the hashtags of those tweets with the configured ranker,
4. returns at most k of them.

When fewer than k hashtags are found (or no tweet is similar enough) the
list is shorter, possibly empty.
"""

from src.config import RecommenderConfig
from src.errors import BackendMismatchError
from src.recommender.base import HashtagRanker
from src.recommender.factory import create_ranker
from src.recommender.popularity import rank_popularity
from src.recommender.relevance import rank_relevance
from src.recommender.repository import (
    Repository,
    RepositoryEntry,
    SimilarTweet,
    build_repository,
    retrieve_similar,
)
from src.schema import Candidate, CleanTweet
from src.vectorize import vectorize

__all__ = [
    "HashtagRanker",
    "Repository",
    "RepositoryEntry",
    "SimilarTweet",
    "build_repository",
    "rank_candidates",
    "rank_popularity",
    "rank_relevance",
    "recommend",
    "retrieve_similar",
]


def rank_candidates(
    repo: Repository,
    query: CleanTweet,
    config: RecommenderConfig,
) -> list[Candidate]:
    """Return every scored candidate hashtag for a query, best first.

    Raises:
        BackendMismatchError: If the repository was built with another vectorizer.
    """
    if repo.backend != config.vectorizer:
        raise BackendMismatchError(
            f"Repository uses {repo.backend} vectors but the configuration asks for {config.vectorizer}"
        )

    vector = vectorize(repo.model, query, include_hashtags=repo.include_hashtags)
    similar = retrieve_similar(repo, vector, config.similarity_threshold)
    return create_ranker(config.ranking).rank(similar)


def recommend(
    repo: Repository,
    query: CleanTweet,
    config: RecommenderConfig,
) -> list[str]:
    """Recommend up to k hashtags for a query tweet.

    Args:
        repo: Repository built with the same vectorizer as config.
        query: Cleaned query tweet. Its own hashtags never reach the ranker.
        config: Threshold, k and ranking method.

    Returns:
        Distinct '#'-prefixed canonical labels, best first, at most k.

    Raises:
        BackendMismatchError: If the repository was built with another vectorizer.
    """
    candidates = rank_candidates(repo, query, config)
    return [f"#{candidate.hashtag}" for candidate in candidates[: config.k]]
