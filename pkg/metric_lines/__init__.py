"""Metric lines: lines of finite metric spaces and distance-hereditary graphs."""

__version__ = "0.1.0"
