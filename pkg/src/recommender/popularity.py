"""Hashtag popularity ranking.

A hashtag scores one point for each similar tweet that carries it.
"""

from collections.abc import Sequence

from src.recommender.base import HashtagRanker
from src.recommender.repository import SimilarTweet
from src.schema import Candidate


class PopularityRanker(HashtagRanker):
    """Ranks hashtags by how many similar tweets use them."""

    name = "popularity"

    def weight(self, item: SimilarTweet) -> float:
        return 1.0


def rank_popularity(similar: Sequence[SimilarTweet]) -> list[Candidate]:
    """Rank the hashtags of similar tweets by popularity."""
    return PopularityRanker().rank(similar)
