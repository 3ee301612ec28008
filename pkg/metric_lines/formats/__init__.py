"""Text formats: edge lists, distance matrices, graph6."""
