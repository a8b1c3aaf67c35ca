"""Isomorph-free generation, canonical labeling and graph6 stream ingestion."""

from transit_spectra.enumeration.canonical import (
    CanonicalForm,
    canonical_form,
    canonical_graph,
)
from transit_spectra.enumeration.graphs import connected_graphs
from transit_spectra.enumeration.stream import StreamDiagnostic, read_graph6_stream
from transit_spectra.enumeration.trees import free_trees

__all__ = [
    "CanonicalForm",
    "StreamDiagnostic",
    "canonical_form",
    "canonical_graph",
    "connected_graphs",
    "free_trees",
    "read_graph6_stream",
]
