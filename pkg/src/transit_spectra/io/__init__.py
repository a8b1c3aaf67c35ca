"""I/O for run configs, graph6 sources and reports."""
