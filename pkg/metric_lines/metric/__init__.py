"""Metric layer: finite metric spaces, betweenness and lines."""
