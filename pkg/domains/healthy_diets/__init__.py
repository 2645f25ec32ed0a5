"""Healthy-diet cost, affordability and adequacy domain."""
