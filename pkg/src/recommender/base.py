"""Abstract base class for hashtag rankers.

A ranker turns the tweets retrieved for a query into an ordered list of
candidate hashtags. Every hashtag of every similar tweet is a candidate;
rankers only differ in how much one similar tweet adds to the score of
each of its hashtags.
"""

from abc import ABC, abstractmethod
from collections import Counter, defaultdict
from collections.abc import Sequence
from typing import ClassVar

from src.recommender.repository import SimilarTweet
from src.schema import Candidate

# Scores are compared at this many decimals so that sums accumulated in a
# different order still tie.
SCORE_DECIMALS: int = 12


class HashtagRanker(ABC):
    """Scores and orders the hashtags of similar tweets.

    Candidates are ordered by score descending, then by canonical label
    ascending, so the order is a deterministic total order.
    """

    name: ClassVar[str]

    @abstractmethod
    def weight(self, item: SimilarTweet) -> float:
        """Score contribution of one similar tweet to each of its hashtags.

        Args:
            item: A retrieved tweet with its similarity to the query.

        Returns:
            A non-negative weight.
        """
        pass

    def rank(self, similar: Sequence[SimilarTweet]) -> list[Candidate]:
        """Score every hashtag of the similar tweets and sort them.

        Args:
            similar: Retrieved tweets, as returned by retrieve_similar.

        Returns:
            Candidates, best first. Empty input gives an empty list.
        """
        scores: dict[str, float] = defaultdict(float)
        support: Counter[str] = Counter()

        for item in similar:
            weight = self.weight(item)
            for hashtag in item.entry.tweet.hashtags:
                scores[hashtag] += weight
                support[hashtag] += 1

        candidates = [
            Candidate(hashtag=hashtag, score=score, supporting_count=support[hashtag])
            for hashtag, score in scores.items()
        ]
        candidates.sort(key=lambda c: (-round(c.score, SCORE_DECIMALS), c.hashtag))
        return candidates
