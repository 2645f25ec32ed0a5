"""Environment settings and the run configuration file."""
