"""Searchable repository of vectorized tweets.

A Repository is built once from a corpus and never changes afterwards,
so any number of queries may run against it concurrently.
"""

import logging
from collections.abc import Sequence
from typing import Any, NamedTuple

import numpy as np
from pydantic import BaseModel, ConfigDict, PrivateAttr

from src.config import RecommenderConfig, Vectorizer
from src.errors import BackendMismatchError, ConfigError, DimensionMismatchError, EmptyResultError
from src.schema import CleanTweet
from src.vectorize import EmbeddingTable, TfIdfModel, TweetVector, backend_of, vectorize

logger = logging.getLogger(__name__)

# Similarities within this distance below the threshold still pass, so a
# value that is mathematically on the threshold does not depend on
# floating-point summation order.
SIMILARITY_TOLERANCE: float = 1e-9


class RepositoryEntry(BaseModel):
    """A repository tweet and its vector."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    tweet: CleanTweet
    vector: TweetVector


class SimilarTweet(NamedTuple):
    """A repository entry retrieved for a query, with its cosine similarity."""

    entry: RepositoryEntry
    similarity: float


class Repository(BaseModel):
    """Frozen index of vectorized tweets.

    Attributes:
        entries: Tweets and vectors in corpus order.
        backend: Vectorizer that produced the vectors.
        model: Fitted TF-IDF model or embedding table, used for queries.
        include_hashtags: Whether hashtag tokens were vectorized.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    entries: tuple[RepositoryEntry, ...]
    backend: Vectorizer
    model: TfIdfModel | EmbeddingTable
    include_hashtags: bool = False

    _matrix: np.ndarray = PrivateAttr()
    _norms: np.ndarray = PrivateAttr()

    def model_post_init(self, __context: Any) -> None:
        if not self.entries:
            raise ValueError("Repository must contain at least one entry")
        dimensions = {entry.vector.dimension for entry in self.entries}
        if len(dimensions) != 1:
            raise ValueError(f"Repository vectors have mixed dimensions: {sorted(dimensions)}")
        matrix = np.stack([entry.vector.values for entry in self.entries])
        norms = np.array([entry.vector.norm for entry in self.entries], dtype=np.float64)
        matrix.setflags(write=False)
        norms.setflags(write=False)
        self._matrix = matrix
        self._norms = norms

    @property
    def dimension(self) -> int:
        return int(self._matrix.shape[1])

    def __len__(self) -> int:
        return len(self.entries)

    def similarities(self, query: TweetVector) -> np.ndarray:
        """Cosine similarity of the query with every entry, in entry order.

        Zero vectors on either side give 0.

        Raises:
            DimensionMismatchError: If the query dimension differs.
        """
        if query.dimension != self.dimension:
            raise DimensionMismatchError(
                f"Query dimension {query.dimension} does not match repository dimension {self.dimension}"
            )
        if query.norm == 0.0:
            return np.zeros(len(self.entries), dtype=np.float64)
        dots = self._matrix @ query.values
        denominators = self._norms * query.norm
        scores = np.divide(dots, denominators, out=np.zeros_like(dots), where=denominators > 0)
        return np.clip(scores, -1.0, 1.0)


def build_repository(
    corpus: Sequence[CleanTweet],
    config: RecommenderConfig,
    model: TfIdfModel | EmbeddingTable,
) -> Repository:
    """Vectorize a corpus into a Repository.

    Tweets whose vector is zero are kept; they can never be retrieved.

    Args:
        corpus: Eligible cleaned tweets, in the order entries should keep.
        config: Recommender settings; its vectorizer must match the model.
        model: Fitted TF-IDF model or loaded embedding table.

    Returns:
        The frozen repository.

    Raises:
        EmptyResultError: If the corpus is empty.
        BackendMismatchError: If the model does not belong to config.vectorizer.
        ConfigError: If the TF-IDF model disagrees with config.include_hashtags.
        ValueError: If a tweet has no hashtag.
    """
    if not corpus:
        raise EmptyResultError("Cannot build a repository from an empty corpus")

    backend = backend_of(model)
    if backend != config.vectorizer:
        raise BackendMismatchError(
            f"Model is a {backend} model but the configuration asks for {config.vectorizer}"
        )
    if isinstance(model, TfIdfModel) and model.include_hashtags != config.include_hashtags:
        raise ConfigError("TF-IDF model was fitted with a different include_hashtags setting")

    entries: list[RepositoryEntry] = []
    for tweet in corpus:
        if not tweet.hashtags:
            raise ValueError(f"Repository tweet {tweet.id} has no hashtag")
        vector = vectorize(model, tweet, include_hashtags=config.include_hashtags)
        entries.append(RepositoryEntry(tweet=tweet, vector=vector))

    unreachable = sum(1 for entry in entries if entry.vector.norm == 0.0)
    if unreachable:
        logger.debug("%d repository tweets have a zero vector and cannot be retrieved", unreachable)

    return Repository(
        entries=tuple(entries),
        backend=backend,
        model=model,
        include_hashtags=config.include_hashtags,
    )


def retrieve_similar(
    repo: Repository,
    query: TweetVector,
    threshold: float,
) -> list[SimilarTweet]:
    """Return the entries whose cosine similarity with the query reaches the threshold.

    Zero vectors are never similar to anything. Results are sorted by
    similarity descending, then by tweet id ascending.

    Raises:
        DimensionMismatchError: If the query dimension differs from the repository's.
    """
    scores = repo.similarities(query)
    if query.norm == 0.0:
        return []

    similar = [
        SimilarTweet(entry=repo.entries[index], similarity=float(scores[index]))
        for index in np.flatnonzero(scores >= threshold - SIMILARITY_TOLERANCE)
        if repo.entries[index].vector.norm > 0.0
    ]
    similar.sort(key=lambda item: (-item.similarity, item.entry.tweet.id))
    return similar
