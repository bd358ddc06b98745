"""Exact computational toolkit for rank conditions over group-graded rings:
Folner-based solving of underdetermined group-ring systems, graded-ring
fixtures with strong-grading witnesses, and truncated injectivity
certificates for the nonamenable-side module embeddings."""

__version__ = "0.1.0"
