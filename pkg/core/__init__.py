"""Core layer shared by every dietbench phase."""

__version__ = "0.1.0"
