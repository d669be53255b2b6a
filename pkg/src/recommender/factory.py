"""Factory for creating hashtag rankers.

This module provides a factory function that creates the ranker named by
a recommender configuration.
"""

from src.errors import ConfigError
from src.recommender.base import HashtagRanker
from src.recommender.popularity import PopularityRanker
from src.recommender.relevance import RelevanceRanker


def create_ranker(ranking: str) -> HashtagRanker:
    """Create a hashtag ranker by name.

    Args:
        ranking: "popularity" or "relevance".

    Returns:
        A HashtagRanker instance.

    Raises:
        ConfigError: If the ranking method is not supported.
    """
    if ranking == "popularity":
        return PopularityRanker()

    if ranking == "relevance":
        return RelevanceRanker()

    raise ConfigError(f"Unsupported ranking method: {ranking}")
