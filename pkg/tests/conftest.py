"""Shared fixtures: the synthetic desk corpus, its embeddings and the
six scored recommendation examples."""

from pathlib import Path
from typing import Any

import pytest

from src.config import HarnessConfig, RecommenderConfig
from tests.synthetic import desk_corpus_rows, topic_embeddings_text, write_jsonl

# Top-3 recommendations and ground truth of six real tweets, with their
# expected (hit rate, P, R, F1, hit ratio) after two-decimal rounding.
SCORED_EXAMPLES: list[tuple[list[str], list[str], tuple[str, str, str, str, str]]] = [
    (["#iPhone", "#apple", "#iphoneapp"], ["#iPhone"], ("1.00", "0.33", "1.00", "0.50", "1.00")),
    (["#handmade", "#epl", "#jewelry"], ["#handmade", "#stationary"], ("1.00", "0.33", "0.50", "0.40", "0.50")),
    (["#realwriter", "#writing", "#blog"], ["#realwriter", "#writing"], ("1.00", "0.67", "1.00", "0.80", "1.00")),
    (
        ["#enterprise", "#operating_systems", "#apple"],
        ["#enterprise", "#device", "#operating"],
        ("1.00", "0.33", "0.33", "0.33", "0.33"),
    ),
    (
        ["#socialmedia", "#entrepreneur", "#business"],
        ["#socialmedia", "#entrepreneur", "#smallbiz", "#marketing"],
        ("1.00", "0.67", "0.50", "0.57", "0.67"),
    ),
    (
        ["#original", "#acrylic", "#decor"],
        ["#original", "#acrylic", "#cmarkandu", "#abstract", "#blue", "#fabulous", "#decor"],
        ("1.00", "1.00", "0.43", "0.60", "1.00"),
    ),
]


@pytest.fixture
def scored_example_rows() -> list[dict[str, Any]]:
    """The six examples as evaluation record rows."""
    return [
        {"record_id": str(index), "recommended": recommended, "ground_truth": ground_truth}
        for index, (recommended, ground_truth, _) in enumerate(SCORED_EXAMPLES, start=1)
    ]


@pytest.fixture
def scored_examples_path(tmp_path: Path, scored_example_rows: list[dict[str, Any]]) -> Path:
    """The six examples written as an evaluation record file."""
    return write_jsonl(tmp_path / "examples.jsonl", scored_example_rows)


@pytest.fixture
def desk_corpus_path(tmp_path: Path) -> Path:
    """The 50-tweet synthetic corpus."""
    return write_jsonl(tmp_path / "corpus.jsonl", desk_corpus_rows())


@pytest.fixture
def desk_embeddings_path(tmp_path: Path) -> Path:
    """Word vectors for the desk corpus topics."""
    path = tmp_path / "vectors.txt"
    path.write_text(topic_embeddings_text(), encoding="utf-8")
    return path


@pytest.fixture
def desk_config() -> HarnessConfig:
    """Harness settings for the desk corpus, with the user filter off."""
    return HarnessConfig(recommender=RecommenderConfig(), min_user_hashtags=0)
