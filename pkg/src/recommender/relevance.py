"""Tweet-hashtag relevance ranking.

A hashtag scores the sum of the similarities of the similar tweets that
carry it, so hashtags of closer tweets weigh more. With equal similarities
the order is the same as popularity ranking.
"""

from collections.abc import Sequence

from src.recommender.base import HashtagRanker
from src.recommender.repository import SimilarTweet
from src.schema import Candidate


class RelevanceRanker(HashtagRanker):
    """Ranks hashtags by the summed similarity of the tweets using them."""

    name = "relevance"

    def weight(self, item: SimilarTweet) -> float:
        return max(item.similarity, 0.0)


def rank_relevance(similar: Sequence[SimilarTweet]) -> list[Candidate]:
    """Rank the hashtags of similar tweets by similarity-weighted relevance."""
    return RelevanceRanker().rank(similar)
