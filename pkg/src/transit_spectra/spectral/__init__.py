"""Perron roots of distance matrices, irregularity measures and quotient matrices."""
