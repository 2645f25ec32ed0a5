"""Services layer: batch orchestration of the domain phases."""
