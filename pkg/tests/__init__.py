"""canonstrip Test Suite."""
