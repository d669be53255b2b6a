"""Input loading module.

This module reads the toolkit's file formats from disk:
- corpus files: one RawTweet JSON object per line
- evaluation record files: one EvalPair JSON object per line
- run reports written by the report module
- word-vector text files

All text files are UTF-8. Line-delimited files break records on newline
characters only, and blank lines in them are skipped.
A path of "-" reads standard input.
"""

import sys
from collections.abc import Iterator
from pathlib import Path
from typing import TypeVar

from pydantic import BaseModel, ValidationError

from src.errors import ParseError
from src.schema import EvalPair, RawTweet, RunReport
from src.vectorize import EmbeddingTable, load_embeddings

ModelT = TypeVar("ModelT", bound=BaseModel)

STDIN_PATH: str = "-"


def _read_bytes(file_path: Path) -> bytes:
    if str(file_path) == STDIN_PATH:
        buffer = getattr(sys.stdin, "buffer", None)
        return buffer.read() if buffer is not None else sys.stdin.read().encode("utf-8")
    return file_path.read_bytes()


def _decode(data: bytes, file_path: Path, line_number: int | None = None) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"Invalid UTF-8: {e.reason}", line_number=line_number, source=str(file_path)) from e


def _iter_lines(file_path: Path) -> Iterator[tuple[int, str]]:
    # Records end at "\n" only; U+2028 and friends may appear unescaped inside JSON strings.
    for line_number, raw_line in enumerate(_read_bytes(file_path).split(b"\n"), start=1):
        yield line_number, _decode(raw_line, file_path, line_number)


def _first_error(error: ValidationError) -> str:
    details = error.errors()
    if not details:
        return str(error)
    first = details[0]
    location = ".".join(str(part) for part in first.get("loc", ())) or "record"
    return f"{location}: {first.get('msg', 'invalid value')}"


def _iter_jsonl(file_path: Path, model: type[ModelT]) -> Iterator[tuple[int, ModelT]]:
    for line_number, line in _iter_lines(file_path):
        if not line.strip():
            continue
        try:
            yield line_number, model.model_validate_json(line)
        except ValidationError as e:
            raise ParseError(
                f"Invalid {model.__name__}: {_first_error(e)}",
                line_number=line_number,
                source=str(file_path),
            ) from e


def load_corpus(file_path: Path) -> list[RawTweet]:
    """Load a line-delimited JSON tweet corpus.

    Args:
        file_path: Corpus file with {id, user, timestamp, text} per line.

    Returns:
        The tweets in file order.

    Raises:
        FileNotFoundError: If the file does not exist.
        ParseError: If a line is not a valid tweet or an id repeats.
    """
    tweets: list[RawTweet] = []
    seen: dict[str, int] = {}
    for line_number, tweet in _iter_jsonl(file_path, RawTweet):
        if tweet.id in seen:
            raise ParseError(
                f"Duplicate tweet id {tweet.id!r} (first seen on line {seen[tweet.id]})",
                line_number=line_number,
                source=str(file_path),
            )
        seen[tweet.id] = line_number
        tweets.append(tweet)
    return tweets


def load_eval_records(file_path: Path) -> list[EvalPair]:
    """Load a line-delimited JSON evaluation record file.

    Args:
        file_path: File with {record_id, recommended, ground_truth} per line.

    Returns:
        The records in file order.

    Raises:
        FileNotFoundError: If the file does not exist.
        ParseError: If a line is malformed or a record_id repeats.
    """
    records: list[EvalPair] = []
    seen: dict[str, int] = {}
    for line_number, record in _iter_jsonl(file_path, EvalPair):
        if record.record_id in seen:
            raise ParseError(
                f"Duplicate record_id {record.record_id!r} (first seen on line {seen[record.record_id]})",
                line_number=line_number,
                source=str(file_path),
            )
        seen[record.record_id] = line_number
        records.append(record)
    return records


def load_run_report(file_path: Path) -> RunReport:
    """Load a run report written by write_report.

    Raises:
        FileNotFoundError: If the file does not exist.
        ParseError: If the file is not a valid report.
    """
    try:
        return RunReport.model_validate_json(_decode(_read_bytes(file_path), file_path))
    except ValidationError as e:
        raise ParseError(f"Invalid run report: {_first_error(e)}", source=str(file_path)) from e


def load_embeddings_file(file_path: Path) -> EmbeddingTable:
    """Load a word-vector text file.

    Raises:
        FileNotFoundError: If the file does not exist.
        EmbeddingParseError: If the file is malformed.
    """
    with file_path.open("rb") as source:
        return load_embeddings(source, name=str(file_path))
