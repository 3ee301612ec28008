"""Conjecture lab: per-instance checks, exhaustive corpora, sweeps."""
