"""English stopword list and override-file loader.

The embedded list is the common English list distributed with NLTK. It is
pinned here so preprocessing gives the same tokens on every machine without
a corpus download.
"""

from pathlib import Path

from src.errors import ParseError

ENGLISH_STOPWORDS: frozenset[str] = frozenset(
    """
    i me my myself we our ours ourselves you you're you've you'll you'd your
    yours yourself yourselves he him his himself she she's her hers herself it
    it's its itself they them their theirs themselves what which who whom this
    that that'll these those am is are was were be been being have has had
    having do does did doing a an the and but if or because as until while of
    at by for with about against between into through during before after
    above below to from up down in out on off over under again further then
    once here there when where why how all any both each few more most other
    some such no nor not only own same so than too very s t can will just don
    don't should should've now d ll m o re ve y ain aren aren't couldn
    couldn't didn didn't doesn doesn't hadn hadn't hasn hasn't haven haven't
    isn isn't ma mightn mightn't mustn mustn't needn needn't shan shan't
    shouldn shouldn't wasn wasn't weren weren't won won't wouldn wouldn't
    """.split()
)


def load_stopwords(file_path: Path | None = None) -> frozenset[str]:
    """Load a stopword list.

    Override files are UTF-8, one word per line. Blank lines and lines
    starting with '#' are ignored; words are lowercased.

    Args:
        file_path: Override file. When None the embedded English list is used.

    Returns:
        The stopword set.

    Raises:
        FileNotFoundError: If file_path does not exist.
        ParseError: If the file contains no words or a line holds more than one word.
    """
    if file_path is None:
        return ENGLISH_STOPWORDS

    words: set[str] = set()
    text = file_path.read_text(encoding="utf-8")
    for line_number, line in enumerate(text.splitlines(), start=1):
        entry = line.strip()
        if not entry or entry.startswith("#"):
            continue
        if len(entry.split()) != 1:
            raise ParseError(
                f"Expected one word per line, got {entry!r}",
                line_number=line_number,
                source=str(file_path),
            )
        words.add(entry.lower())

    if not words:
        raise ParseError("Stopword file contains no words", source=str(file_path))
    return frozenset(words)
