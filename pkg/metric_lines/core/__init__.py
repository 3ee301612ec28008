"""Core layer: graphs, shortest paths, errors."""
