"""Pure helpers: unit conversion, weighted statistics, report serialization."""
