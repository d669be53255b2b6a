"""Command-line entry point for the HitRatio toolkit.

Subcommands:
- eval: score an evaluation record file
- sweep: tabulate metrics for hypothetical match schedules
- recommend-eval: run the hashtag recommender on a corpus and score it
- compare: evaluate the model presets at several k on one split
- stats: hashtag statistics of a cleaned corpus
- preprocess: write the cleaned corpus as line-delimited JSON

Data goes to standard output (or --output); progress and diagnostics go
to standard error. Exit status is 0 on success, 2 for parse errors, 3 for
configuration errors, 4 for empty results and 1 for anything else.
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from pydantic import TypeAdapter, ValidationError

from src.config import MODEL_PRESETS, HarnessConfig, load_config
from src.errors import ConfigError, HitRatioError, ParseError
from src.harness import (
    DEFAULT_K_VALUES,
    cmd_compare,
    cmd_eval,
    cmd_preprocess,
    cmd_recommend_eval,
    cmd_stats,
    cmd_sweep,
)
from src.report import (
    eval_records_from_report,
    render_comparison,
    render_run_report,
    render_stats,
    render_sweep,
    to_json,
    to_jsonl,
    write_output,
)
from src.schema import SweepTable

logger = logging.getLogger("hitratio")


def _int_list(value: str) -> list[int]:
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}") from e


def _sweep_setting(value: str) -> tuple[str, int]:
    mode, _, fixed = value.partition("=")
    if mode not in ("fix_nr", "fix_ng") or not fixed.isdigit():
        raise argparse.ArgumentTypeError(f"expected fix_nr=<n> or fix_ng=<n>, got {value!r}")
    return mode, int(fixed)


def _add_output_options(parser: argparse.ArgumentParser, formats: Sequence[str] = ("json", "table")) -> None:
    parser.add_argument("--output", type=Path, help="write data here instead of standard output")
    parser.add_argument("--format", choices=formats, default=formats[0], help="output format")


def _add_corpus_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("corpus", type=Path, help="line-delimited JSON corpus ({id, user, timestamp, text})")
    parser.add_argument("--stopwords", type=Path, help="stopword override file, one word per line")
    parser.add_argument("--min-user-hashtags", type=int, help="drop users with fewer distinct hashtags (default 3)")
    parser.add_argument(
        "--count-hashtags-as-words",
        action="store_true",
        default=None,
        help="count hashtag tokens toward the three-word minimum",
    )


def _add_recommender_options(parser: argparse.ArgumentParser, with_k: bool = True) -> None:
    if with_k:
        parser.add_argument("--k", type=int, help="number of hashtags to recommend")
    parser.add_argument("--threshold", type=float, help="cosine similarity threshold (default 0.5)")
    parser.add_argument("--split-fraction", type=float, help="share of most recent tweets to test on (default 0.10)")
    parser.add_argument("--embeddings", type=Path, help="word-vector text file for the mowe vectorizer")
    parser.add_argument("--seed", type=int, help="reserved; the pipeline is deterministic")
    parser.add_argument("--include-hashtags", action="store_true", default=None, help="vectorize hashtag tokens too")
    parser.add_argument("--timing", action="store_true", help="include wall-clock duration in the report")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with every subcommand."""
    parser = argparse.ArgumentParser(
        prog="hitratio",
        description="Evaluate top-k hashtag recommendations with hit rate, precision, recall, F1 and hit ratio.",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")
    subparsers = parser.add_subparsers(dest="command", required=True)

    eval_parser = subparsers.add_parser("eval", help="score an evaluation record file")
    eval_parser.add_argument("input", type=Path, help="line-delimited {record_id, recommended, ground_truth} file, or -")
    eval_parser.add_argument("--timing", action="store_true", help="include wall-clock duration in the report")
    _add_output_options(eval_parser)

    sweep_parser = subparsers.add_parser("sweep", help="tabulate metrics for hypothetical match schedules")
    sweep_parser.add_argument("setting", type=_sweep_setting, help="fix_nr=<n> or fix_ng=<n>")
    sweep_parser.add_argument(
        "--schedule",
        type=_int_list,
        action="append",
        required=True,
        help="comma-separated m per row; repeat for several tables",
    )
    _add_output_options(sweep_parser)

    recommend_parser = subparsers.add_parser("recommend-eval", help="run the recommender on a corpus and score it")
    _add_corpus_options(recommend_parser)
    _add_recommender_options(recommend_parser)
    recommend_parser.add_argument("--vectorizer", choices=["tfidf", "mowe"])
    recommend_parser.add_argument("--ranking", choices=["popularity", "relevance"])
    recommend_parser.add_argument("--model", choices=sorted(MODEL_PRESETS), help="model preset (sets vectorizer and ranking)")
    recommend_parser.add_argument("--emit-records", type=Path, help="also write the recommendations as an evaluation record file")
    _add_output_options(recommend_parser)

    compare_parser = subparsers.add_parser("compare", help="evaluate model presets at several k")
    _add_corpus_options(compare_parser)
    _add_recommender_options(compare_parser, with_k=False)
    compare_parser.add_argument("--k-values", type=_int_list, default=list(DEFAULT_K_VALUES), help="comma-separated k values")
    compare_parser.add_argument("--models", default="A,B,C", help="comma-separated model presets")
    compare_parser.add_argument("--embeddings-b", type=Path, help="embeddings for model B")
    compare_parser.add_argument("--embeddings-c", type=Path, help="embeddings for model C")
    _add_output_options(compare_parser)

    stats_parser = subparsers.add_parser("stats", help="hashtag statistics of the cleaned corpus")
    _add_corpus_options(stats_parser)
    _add_output_options(stats_parser)

    preprocess_parser = subparsers.add_parser("preprocess", help="write the cleaned corpus as JSON lines")
    _add_corpus_options(preprocess_parser)
    _add_output_options(preprocess_parser, formats=("jsonl",))

    return parser


def _option(args: argparse.Namespace, name: str) -> Any:
    return getattr(args, name, None)


def resolve_config(args: argparse.Namespace) -> HarnessConfig:
    """Merge environment configuration with command-line flags.

    Raises:
        ConfigError: If a value is invalid or a flag contradicts the model preset.
    """
    try:
        base = load_config()
    except ValueError as e:
        raise ConfigError(f"Invalid environment configuration: {e}") from e

    recommender = base.recommender.model_dump()
    preset = _option(args, "model")
    if preset is not None:
        vectorizer, ranking = MODEL_PRESETS[preset]
        for flag, expected in (("vectorizer", vectorizer), ("ranking", ranking)):
            given = _option(args, flag)
            if given is not None and given != expected:
                raise ConfigError(f"--{flag} {given} contradicts model preset {preset} ({expected})")
        recommender.update(vectorizer=vectorizer, ranking=ranking)

    for field, flag in (
        ("k", "k"),
        ("similarity_threshold", "threshold"),
        ("vectorizer", "vectorizer"),
        ("ranking", "ranking"),
        ("include_hashtags", "include_hashtags"),
    ):
        value = _option(args, flag)
        if value is not None:
            recommender[field] = value

    merged = base.model_dump()
    merged["recommender"] = recommender
    for field, flag in (
        ("split_fraction", "split_fraction"),
        ("min_user_hashtags", "min_user_hashtags"),
        ("stopwords_path", "stopwords"),
        ("embeddings_path", "embeddings"),
        ("seed", "seed"),
        ("count_hashtags_as_words", "count_hashtags_as_words"),
    ):
        value = _option(args, flag)
        if value is not None:
            merged[field] = value

    try:
        return HarnessConfig.model_validate(merged)
    except ValidationError as e:
        raise ConfigError(f"Invalid configuration: {e}") from e


def run(args: argparse.Namespace) -> None:
    """Execute the parsed subcommand and write its output."""
    output: Path | None = args.output

    if args.command == "eval":
        report = cmd_eval(args.input, timing=args.timing)
        write_output(render_run_report(report) if args.format == "table" else to_json(report), output)
        return

    if args.command == "sweep":
        mode, fixed_value = args.setting
        tables = [cmd_sweep(mode, fixed_value, schedule) for schedule in args.schedule]
        if args.format == "table":
            write_output("\n\n".join(render_sweep(table) for table in tables), output)
        else:
            adapter = TypeAdapter(list[SweepTable])
            write_output(adapter.dump_json(tables, indent=2).decode("utf-8"), output)
        return

    config = resolve_config(args)
    if config.seed:
        logger.debug("Seed %d is reserved; the pipeline is deterministic", config.seed)

    if args.command == "recommend-eval":
        report = cmd_recommend_eval(args.corpus, config, timing=args.timing)
        if args.emit_records is not None:
            write_output(to_jsonl(eval_records_from_report(report)), args.emit_records)
            logger.info("      Recommendations saved to %s", args.emit_records)
        write_output(render_run_report(report) if args.format == "table" else to_json(report), output)

    elif args.command == "compare":
        models = [model.strip() for model in args.models.split(",") if model.strip()]
        comparison = cmd_compare(
            args.corpus,
            config,
            models=models,
            k_values=args.k_values,
            embeddings={"B": args.embeddings_b, "C": args.embeddings_c},
        )
        write_output(render_comparison(comparison) if args.format == "table" else to_json(comparison), output)

    elif args.command == "stats":
        stats = cmd_stats(args.corpus, config)
        write_output(render_stats(stats) if args.format == "table" else to_json(stats), output)

    elif args.command == "preprocess":
        tweets = cmd_preprocess(args.corpus, config)
        write_output(to_jsonl(tweets), output)


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    """Send log records to standard error."""
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(level=level, format="%(message)s", stream=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    """Run the HitRatio command line.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:].

    Returns:
        Exit code: 0 on success, otherwise the code of the error class.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(verbose=args.verbose, quiet=args.quiet)

    try:
        run(args)
        return 0

    except HitRatioError as e:
        print(f"✗ {e}", file=sys.stderr)
        return e.exit_code

    except FileNotFoundError as e:
        print(f"✗ File not found: {e}", file=sys.stderr)
        return ParseError.exit_code

    except Exception as e:
        print(f"✗ Unexpected error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
