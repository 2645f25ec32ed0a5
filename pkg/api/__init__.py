"""Command-line surface of dietbench."""
