"""Report emission module.

Machine-readable reports are pydantic models dumped as indented JSON with
full float precision. Human-readable reports are aligned plain-text tables
whose values are rounded half-up to two decimals.
"""

import sys
from collections.abc import Sequence
from pathlib import Path

from pydantic import BaseModel

from src.metrics import display_round
from src.schema import (
    ComparisonReport,
    EvalPair,
    HashtagStats,
    MetricScores,
    MetricSummary,
    RunReport,
    SweepTable,
)

METRIC_COLUMNS: tuple[str, ...] = ("hit rate", "P", "R", "F1", "hit ratio")


def _fmt(value: float) -> str:
    return str(display_round(value))


def _metric_cells(scores: MetricScores | MetricSummary) -> list[str]:
    return [
        _fmt(scores.hit_rate),
        _fmt(scores.precision),
        _fmt(scores.recall),
        _fmt(scores.f1),
        _fmt(scores.hit_ratio),
    ]


def render_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """Render rows as a pipe-separated table with aligned columns.

    Example:
        >>> print(render_table(["a", "bb"], [["1", "2"]]))
        | a | bb |
        |---|----|
        | 1 | 2  |
    """
    widths = [len(cell) for cell in header]
    for row in rows:
        for index, cell in enumerate(row):
            widths[index] = max(widths[index], len(cell))

    def line(cells: Sequence[str]) -> str:
        padded = [cell.ljust(widths[index]) for index, cell in enumerate(cells)]
        return "| " + " | ".join(padded) + " |"

    lines = [line(header), "|" + "|".join("-" * (width + 2) for width in widths) + "|"]
    lines.extend(line(row) for row in rows)
    return "\n".join(lines)


def render_run_report(report: RunReport) -> str:
    """Render per-record scores and their means.

    One row per record with its recommendations and ground truth, followed
    by a mean row and the record counts.
    """
    header = ["#", "recommended", "ground truth", *METRIC_COLUMNS]
    rows = [
        [
            record.record_id,
            "[" + ", ".join(record.recommended) + "]",
            "[" + ", ".join(record.ground_truth) + "]",
            *_metric_cells(record.scores),
        ]
        for record in report.records
    ]
    rows.append(["mean", "", "", *_metric_cells(report.summary)])

    lines = [render_table(header, rows), ""]
    summary = report.summary
    lines.append(
        f"records: {summary.record_count}, without recommendations: {summary.no_recommendation_count}, "
        f"fully correct: {summary.fully_correct_count}, partially correct: {summary.partially_correct_count}, "
        f"fully incorrect: {summary.fully_incorrect_count}"
    )
    if report.config is not None:
        config = report.config
        lines.append(
            f"k={config.k} threshold={config.similarity_threshold} "
            f"vectorizer={config.vectorizer} ranking={config.ranking}"
        )
    return "\n".join(lines)


def render_sweep(table: SweepTable) -> str:
    """Render a metric sweep with the varying count in the first column."""
    varying = "n_G" if table.mode == "fix_nr" else "n_R"
    fixed = "n_R" if table.mode == "fix_nr" else "n_G"
    header = [varying, "m", *METRIC_COLUMNS]
    rows = [
        [
            str(row.n_g if table.mode == "fix_nr" else row.n_r),
            str(row.scores.m),
            *_metric_cells(row.scores),
        ]
        for row in table.rows
    ]
    return f"{fixed} = {table.fixed_value}\n" + render_table(header, rows)


def render_stats(stats: HashtagStats) -> str:
    """Render hashtag-per-tweet statistics."""
    header = ["hashtagged tweets", "max hashtags", "min hashtags", "avg hashtags"]
    rows = [[
        str(stats.tweet_count),
        str(stats.max_hashtags),
        str(stats.min_hashtags),
        str(stats.avg_hashtags),
    ]]
    return render_table(header, rows)


def render_comparison(report: ComparisonReport) -> str:
    """Render a model comparison: one row per k, a metric block per model."""
    models = list(dict.fromkeys(entry.model for entry in report.entries))
    k_values = sorted({entry.k for entry in report.entries})
    cells = {(entry.model, entry.k): entry.summary for entry in report.entries}

    header = ["top-k"]
    for model in models:
        header.extend(f"{model} {column}" for column in METRIC_COLUMNS)

    rows: list[list[str]] = []
    for k in k_values:
        row = [f"top-{k}"]
        for model in models:
            summary = cells.get((model, k))
            row.extend(_metric_cells(summary) if summary else ["-"] * len(METRIC_COLUMNS))
        rows.append(row)

    footer = (
        f"repository: {report.repository_size} tweets, test: {report.test_size} tweets, "
        f"split fraction: {report.split_fraction}"
    )
    return render_table(header, rows) + "\n\n" + footer


def to_json(model: BaseModel) -> str:
    """Serialize a report model as indented JSON.

    Unset optional fields are left out, so a report without timing carries
    no wall_clock_seconds key.
    """
    return model.model_dump_json(indent=2, exclude_none=True)


def to_jsonl(models: Sequence[BaseModel]) -> str:
    """Serialize models one JSON object per line."""
    return "".join(model.model_dump_json() + "\n" for model in models)


def eval_records_from_report(report: RunReport) -> list[EvalPair]:
    """Recover the evaluation records a run report was computed from."""
    return [
        EvalPair(
            record_id=record.record_id,
            recommended=record.recommended,
            ground_truth=record.ground_truth,
        )
        for record in report.records
    ]


def write_output(content: str, output_path: Path | None = None) -> None:
    """Write content to a file, or to standard output when no path is given.

    Raises:
        OSError: If the file cannot be written.
    """
    if not content.endswith("\n"):
        content += "\n"
    if output_path is None:
        sys.stdout.write(content)
        sys.stdout.flush()
        return
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(content, encoding="utf-8")
