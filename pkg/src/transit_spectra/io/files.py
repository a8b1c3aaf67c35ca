"""graph6 sources and text sinks; ``-`` means the standard streams."""

import gzip
import io
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, TextIO


@contextmanager
def open_graph6_source(path: str | Path) -> Iterator[TextIO]:
    """Open a graph6 line source; ``.gz`` files are decompressed transparently.

    Bytes outside ASCII are read as U+FFFD, so the parser reports them per line.

    Raises:
        FileNotFoundError: If the path does not exist
    """
    if str(path) == "-":
        buffer = getattr(sys.stdin, "buffer", None)
        if buffer is None:
            yield sys.stdin
            return
        wrapper = io.TextIOWrapper(buffer, encoding="ascii", errors="replace")
        try:
            yield wrapper
        finally:
            wrapper.detach()
        return

    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"graph6 input not found: {path}")
    if path.suffix == ".gz":
        with gzip.open(path, "rt", encoding="ascii", errors="replace") as f:
            yield f
    else:
        with open(path, encoding="ascii", errors="replace") as f:
            yield f


def write_text(text: str, path: str | Path | None = None) -> None:
    """Write to ``path``, or to stdout when it is None or ``-``."""
    if not text.endswith("\n"):
        text += "\n"
    if path is None or str(path) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text(text)
