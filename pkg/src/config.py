"""Configuration module for the HitRatio toolkit.

This module provides configuration management using Pydantic models.
Defaults can be overridden from environment variables, which may be
loaded from a .env file via python-dotenv. Command-line flags override
both (see main.py).
"""

import os
from pathlib import Path
from typing import Literal

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

# Load environment variables from .env file (if present)
load_dotenv()

Vectorizer = Literal["tfidf", "mowe"]
Ranking = Literal["popularity", "relevance"]
ModelPreset = Literal["A", "B", "C"]

# The three configurations compared in the evaluation experiment.
# B and C differ only in the embeddings file they are given.
MODEL_PRESETS: dict[str, tuple[Vectorizer, Ranking]] = {
    "A": ("tfidf", "relevance"),
    "B": ("mowe", "popularity"),
    "C": ("mowe", "popularity"),
}


class RecommenderConfig(BaseModel):
    """Settings of the similarity-based hashtag recommender.

    Attributes:
        similarity_threshold: Minimum cosine similarity for a repository tweet
            to contribute candidate hashtags.
        k: Maximum number of hashtags to recommend.
        ranking: How candidate hashtags are scored.
        vectorizer: How tweets are turned into vectors.
        include_hashtags: Vectorize hashtag tokens too (ablation only; leaks
            the prediction target into retrieval).
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    similarity_threshold: float = Field(default=0.5, ge=0.0, le=1.0)
    k: int = Field(default=5, ge=1)
    ranking: Ranking = "relevance"
    vectorizer: Vectorizer = "tfidf"
    include_hashtags: bool = False


class HarnessConfig(BaseModel):
    """Settings of the command-line harness.

    Attributes:
        recommender: Recommender settings.
        split_fraction: Share of the most recent tweets used as the test set.
        min_user_hashtags: Users with fewer distinct hashtags are dropped
            (0 disables the filter).
        stopwords_path: Optional stopword override file.
        embeddings_path: Word-vector text file, required for the mowe backend.
        seed: Reserved; every pipeline step is deterministic.
        count_hashtags_as_words: Count hashtag tokens toward the three-word
            eligibility minimum.
    """

    model_config = ConfigDict(extra="forbid")

    recommender: RecommenderConfig = Field(default_factory=RecommenderConfig)
    split_fraction: float = Field(default=0.10, gt=0.0, lt=1.0)
    min_user_hashtags: int = Field(default=3, ge=0)
    stopwords_path: Path | None = None
    embeddings_path: Path | None = None
    seed: int = 0
    count_hashtags_as_words: bool = False


def apply_preset(config: RecommenderConfig, preset: str) -> RecommenderConfig:
    """Return config with the vectorizer and ranking of a model preset.

    Raises:
        ValueError: If the preset is unknown.
    """
    if preset not in MODEL_PRESETS:
        raise ValueError(f"Unknown model preset: {preset}")
    vectorizer, ranking = MODEL_PRESETS[preset]
    return config.model_copy(update={"vectorizer": vectorizer, "ranking": ranking})


def _env_flag(name: str, default: str = "false") -> bool:
    return os.environ.get(name, default).lower() in ("true", "1", "yes")


def _env_path(name: str) -> Path | None:
    value = os.environ.get(name)
    return Path(value) if value else None


def load_config() -> HarnessConfig:
    """Load configuration from environment variables.

    Reads the following environment variables:
    - HITRATIO_K: top-k size (default: 5)
    - HITRATIO_THRESHOLD: similarity threshold (default: 0.5)
    - HITRATIO_VECTORIZER: "tfidf" or "mowe" (default: "tfidf")
    - HITRATIO_RANKING: "popularity" or "relevance" (default: "relevance")
    - HITRATIO_INCLUDE_HASHTAGS: vectorize hashtag tokens (default: "false")
    - HITRATIO_SPLIT_FRACTION: test split fraction (default: 0.10)
    - HITRATIO_MIN_USER_HASHTAGS: user filter (default: 3)
    - HITRATIO_STOPWORDS: stopword override file (default: unset)
    - HITRATIO_EMBEDDINGS: word-vector file (default: unset)
    - HITRATIO_SEED: reserved (default: 0)
    - HITRATIO_COUNT_HASHTAGS_AS_WORDS: eligibility word count mode (default: "false")

    Returns:
        A validated HarnessConfig instance.

    Raises:
        pydantic.ValidationError: If environment values fail validation.
    """
    recommender = RecommenderConfig(
        k=int(os.environ.get("HITRATIO_K", "5")),
        similarity_threshold=float(os.environ.get("HITRATIO_THRESHOLD", "0.5")),
        vectorizer=os.environ.get("HITRATIO_VECTORIZER", "tfidf"),  # type: ignore[arg-type]
        ranking=os.environ.get("HITRATIO_RANKING", "relevance"),  # type: ignore[arg-type]
        include_hashtags=_env_flag("HITRATIO_INCLUDE_HASHTAGS"),
    )

    return HarnessConfig(
        recommender=recommender,
        split_fraction=float(os.environ.get("HITRATIO_SPLIT_FRACTION", "0.10")),
        min_user_hashtags=int(os.environ.get("HITRATIO_MIN_USER_HASHTAGS", "3")),
        stopwords_path=_env_path("HITRATIO_STOPWORDS"),
        embeddings_path=_env_path("HITRATIO_EMBEDDINGS"),
        seed=int(os.environ.get("HITRATIO_SEED", "0")),
        count_hashtags_as_words=_env_flag("HITRATIO_COUNT_HASHTAGS_AS_WORDS"),
    )
