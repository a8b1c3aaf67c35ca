"""Lazy decoding of graph6 line streams."""

from typing import Iterable, Iterator

from pydantic import BaseModel, ConfigDict, Field

from transit_spectra.core.constants import ErrorPolicy
from transit_spectra.core.graph import Graph
from transit_spectra.core.graph6 import parse_graph6
from transit_spectra.core.validate import Graph6ParseError, Graph6StreamError, GraphError


class StreamDiagnostic(BaseModel):
    """A rejected line under the skip policy (1-based line number)."""

    model_config = ConfigDict(frozen=True)

    line_number: int = Field(..., ge=1)
    message: str


def read_graph6_stream(
    source: Iterable[str] | str,
    on_error: ErrorPolicy = "abort",
    diagnostics: list[StreamDiagnostic] | None = None,
) -> Iterator[Graph]:
    """Decode one graph per non-blank line.

    Args:
        source: Lines (an open file, a list) or a whole text block
        on_error: "abort" raises on the first bad line, "skip" records it and continues
        diagnostics: Receives one entry per skipped line

    Raises:
        Graph6StreamError: Under "abort", wrapping the parse error with its line number
    """
    if isinstance(source, str):
        source = source.splitlines()

    for line_number, line in enumerate(source, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            graph = parse_graph6(text)
        except (Graph6ParseError, GraphError) as exc:
            if on_error == "abort":
                raise Graph6StreamError(line_number, exc) from exc
            if diagnostics is not None:
                diagnostics.append(StreamDiagnostic(line_number=line_number, message=str(exc)))
            continue
        yield graph
