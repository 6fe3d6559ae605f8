"""Shared pass/fail record for the acceptance criteria, filled by test_acceptance."""
RESULTS: dict[str, tuple[bool, str, float]] = {}
