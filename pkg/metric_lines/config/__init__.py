"""Metric lines configuration."""
