"""Golden total color matrices shipped with the package."""
