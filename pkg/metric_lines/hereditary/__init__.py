"""Distance-hereditary graphs: construction, recognition, structural properties."""
