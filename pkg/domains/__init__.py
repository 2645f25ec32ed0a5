"""Domain layer for the diet benchmarking phases."""
