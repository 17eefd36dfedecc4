"""Verification harness: configuration, caching, suites, reports and the command line."""
