"""Test package for dietbench."""
