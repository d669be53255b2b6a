"""Tweet vectorization: TF-IDF and mean of word embeddings (MOWE).

Both backends turn a CleanTweet into a dense TweetVector. Hashtag tokens
are left out of the vector unless include_hashtags is set, since hashtags
are what the recommender has to predict.

TF-IDF uses raw term counts and the smoothed idf
ln((1 + N) / (1 + df)) + 1, without row normalization.
"""

import logging
import math
from collections import Counter
from collections.abc import Sequence
from typing import BinaryIO

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from sklearn.feature_extraction.text import TfidfVectorizer

from src.config import Vectorizer
from src.errors import DimensionMismatchError, EmbeddingParseError, EmptyResultError
from src.schema import CleanTweet

logger = logging.getLogger(__name__)

NORM_RELATIVE_TOLERANCE: float = 1e-9


class TweetVector(BaseModel):
    """A dense, read-only tweet vector with its cached Euclidean norm."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    values: np.ndarray
    norm: float = Field(ge=0.0)

    @model_validator(mode="after")
    def _check_values(self) -> "TweetVector":
        if self.values.ndim != 1:
            raise ValueError("Tweet vectors must be one-dimensional")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("Tweet vector contains non-finite values")
        expected = float(np.linalg.norm(self.values))
        if not math.isclose(self.norm, expected, rel_tol=NORM_RELATIVE_TOLERANCE):
            raise ValueError(f"Cached norm {self.norm} does not match {expected}")
        return self

    @classmethod
    def from_values(cls, values: Sequence[float] | np.ndarray) -> "TweetVector":
        """Build a vector from raw components, computing the norm."""
        array = np.array(values, dtype=np.float64)
        array.setflags(write=False)
        return cls(values=array, norm=float(np.linalg.norm(array)))

    @property
    def dimension(self) -> int:
        return int(self.values.shape[0])


class TfIdfModel(BaseModel):
    """Vocabulary and idf weights fitted on a corpus.

    Attributes:
        vocabulary: Word to column index, indices dense in [0, len(vocabulary)).
        idf: Inverse document frequency per column.
        document_count: Number of tweets the model was fitted on.
        include_hashtags: Whether hashtag tokens were part of the vocabulary.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    vocabulary: dict[str, int]
    idf: np.ndarray
    document_count: int = Field(gt=0)
    include_hashtags: bool = False

    @model_validator(mode="after")
    def _check_weights(self) -> "TfIdfModel":
        if sorted(self.vocabulary.values()) != list(range(len(self.vocabulary))):
            raise ValueError("Vocabulary indices must be dense from 0")
        if self.idf.shape != (len(self.vocabulary),):
            raise ValueError("idf length must match vocabulary size")
        if np.any(self.idf < 0):
            raise ValueError("idf weights must be non-negative")
        return self

    @property
    def dimension(self) -> int:
        return len(self.vocabulary)


class EmbeddingTable(BaseModel):
    """Word vectors loaded from a word-vector text file.

    Attributes:
        dimension: Length of every vector.
        vectors: Word to vector.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    dimension: int = Field(gt=0)
    vectors: dict[str, np.ndarray]

    @model_validator(mode="after")
    def _check_vectors(self) -> "EmbeddingTable":
        for word, vector in self.vectors.items():
            if vector.shape != (self.dimension,):
                raise ValueError(f"Vector for {word!r} has shape {vector.shape}")
            if not np.all(np.isfinite(vector)):
                raise ValueError(f"Vector for {word!r} contains non-finite values")
        return self

    def __len__(self) -> int:
        return len(self.vectors)

    def __contains__(self, word: object) -> bool:
        return word in self.vectors


def vector_tokens(tweet: CleanTweet, include_hashtags: bool = False) -> list[str]:
    """Tokens of a tweet that take part in vectorization."""
    if include_hashtags:
        return list(tweet.tokens)
    return tweet.words


def _passthrough(tokens: list[str]) -> list[str]:
    return tokens


def fit_tfidf(corpus: Sequence[CleanTweet], include_hashtags: bool = False) -> TfIdfModel:
    """Fit a TF-IDF vocabulary and idf weights on a corpus.

    Args:
        corpus: Cleaned tweets.
        include_hashtags: Put hashtag tokens in the vocabulary.

    Returns:
        The fitted model.

    Raises:
        EmptyResultError: If the corpus is empty or has no vectorizable word.
    """
    if not corpus:
        raise EmptyResultError("Cannot fit TF-IDF on an empty corpus")

    documents = [vector_tokens(tweet, include_hashtags) for tweet in corpus]
    vectorizer = TfidfVectorizer(
        analyzer=_passthrough,
        norm=None,
        use_idf=True,
        smooth_idf=True,
        sublinear_tf=False,
    )
    try:
        vectorizer.fit(documents)
    except ValueError as e:
        raise EmptyResultError(f"Corpus has no vocabulary to fit TF-IDF on: {e}") from e

    vocabulary = {word: int(index) for word, index in vectorizer.vocabulary_.items()}
    logger.debug("Fitted TF-IDF on %d tweets, %d words", len(corpus), len(vocabulary))
    return TfIdfModel(
        vocabulary=vocabulary,
        idf=np.array(vectorizer.idf_, dtype=np.float64),
        document_count=len(corpus),
        include_hashtags=include_hashtags,
    )


def tfidf_vector(model: TfIdfModel, tweet: CleanTweet) -> TweetVector:
    """Vectorize a tweet as term count times idf.

    Words outside the vocabulary contribute nothing; a tweet without any
    known word gives the zero vector.
    """
    values = np.zeros(model.dimension, dtype=np.float64)
    for word, count in Counter(vector_tokens(tweet, model.include_hashtags)).items():
        index = model.vocabulary.get(word)
        if index is not None:
            values[index] = count * model.idf[index]
    return TweetVector.from_values(values)


def load_embeddings(source: BinaryIO, name: str | None = None) -> EmbeddingTable:
    """Parse a word-vector text stream.

    The first line is "<vocab_size> <dimension>"; every following line is a
    word and dimension decimal components separated by spaces. Blank lines
    are ignored.

    Args:
        source: Binary stream of UTF-8 text.
        name: Name used in error messages.

    Returns:
        The loaded table.

    Raises:
        EmbeddingParseError: On an empty stream, a malformed header, a row with
            the wrong number of components, a non-numeric or non-finite
            component, a duplicate word, or a row count that differs from
            the header. The error names the offending line.
    """
    source_name = name or getattr(source, "name", None) or "<embeddings>"

    def fail(message: str, line_number: int) -> EmbeddingParseError:
        return EmbeddingParseError(message, line_number=line_number, source=str(source_name))

    vocab_size: int | None = None
    dimension = 0
    vectors: dict[str, np.ndarray] = {}

    for line_number, raw_line in enumerate(source, start=1):
        try:
            line = raw_line.decode("utf-8").strip()
        except UnicodeDecodeError as e:
            raise fail(f"Invalid UTF-8: {e}", line_number) from e

        if vocab_size is None:
            parts = line.split()
            if len(parts) != 2 or not all(part.isascii() and part.isdigit() for part in parts):
                raise fail(f"Malformed header {line!r}, expected '<vocab_size> <dimension>'", line_number)
            vocab_size, dimension = int(parts[0]), int(parts[1])
            if dimension <= 0:
                raise fail("Dimension must be positive", line_number)
            continue

        if not line:
            continue

        word, *components = line.split()
        if len(components) != dimension:
            raise fail(
                f"Expected {dimension} components for {word!r}, got {len(components)}",
                line_number,
            )
        try:
            vector = np.array(components, dtype=np.float64)
        except ValueError as e:
            raise fail(f"Non-numeric component for {word!r}", line_number) from e
        if not np.all(np.isfinite(vector)):
            raise fail(f"Non-finite component for {word!r}", line_number)
        if word in vectors:
            raise fail(f"Duplicate word {word!r}", line_number)
        vector.setflags(write=False)
        vectors[word] = vector

    if vocab_size is None:
        raise fail("Empty embeddings stream", 1)
    if len(vectors) != vocab_size:
        raise fail(f"Header declares {vocab_size} words, found {len(vectors)}", 1)

    logger.debug("Loaded %d embeddings of dimension %d", len(vectors), dimension)
    return EmbeddingTable(dimension=dimension, vectors=vectors)


def mowe_vector(
    table: EmbeddingTable,
    tweet: CleanTweet,
    include_hashtags: bool = False,
) -> TweetVector:
    """Average the embeddings of a tweet's words.

    Words missing from the table are skipped; repeated words count once per
    occurrence. A tweet with no known word gives the zero vector. Hashtag
    tokens, when included, are looked up without their '#'.
    """
    found = [
        table.vectors[word]
        for word in (token.lstrip("#") for token in vector_tokens(tweet, include_hashtags))
        if word in table.vectors
    ]
    if not found:
        return TweetVector.from_values(np.zeros(table.dimension, dtype=np.float64))
    return TweetVector.from_values(np.mean(np.stack(found), axis=0))


def cosine(a: TweetVector, b: TweetVector) -> float:
    """Cosine similarity of two vectors; 0 when either vector is zero.

    Raises:
        DimensionMismatchError: If the vectors differ in length.
    """
    if a.dimension != b.dimension:
        raise DimensionMismatchError(
            f"Cannot compare vectors of dimension {a.dimension} and {b.dimension}"
        )
    if a.norm == 0.0 or b.norm == 0.0:
        return 0.0
    similarity = float(np.dot(a.values, b.values)) / (a.norm * b.norm)
    return min(1.0, max(-1.0, similarity))


def backend_of(model: TfIdfModel | EmbeddingTable) -> Vectorizer:
    """Name of the vectorizer backend a fitted model belongs to."""
    return "tfidf" if isinstance(model, TfIdfModel) else "mowe"


def vectorize(
    model: TfIdfModel | EmbeddingTable,
    tweet: CleanTweet,
    include_hashtags: bool = False,
) -> TweetVector:
    """Vectorize a tweet with whichever backend the model belongs to.

    For TF-IDF, hashtag inclusion is fixed at fit time and include_hashtags
    is ignored.
    """
    if isinstance(model, TfIdfModel):
        return tfidf_vector(model, tweet)
    return mowe_vector(model, tweet, include_hashtags=include_hashtags)
