"""Domain types and the exception hierarchy."""
